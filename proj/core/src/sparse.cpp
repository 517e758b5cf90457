// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

const char *to_string(ErrorKind kind)
{
  switch (kind)
  {
    case ErrorKind::DimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::InvalidArgument:
      return "invalid argument";
    case ErrorKind::ZeroDiagonal:
      return "zero diagonal";
    case ErrorKind::ZeroPivot:
      return "zero pivot";
    case ErrorKind::NotCoLocated:
      return "blocks not co-located";
    case ErrorKind::SingularCoarseOperator:
      return "singular coarse operator";
    case ErrorKind::Io:
      return "i/o error";
    case ErrorKind::Config:
      return "configuration error";
  }
  return "error";
}

namespace
{

[[noreturn]] void mismatch(const std::string &what)
{
  throw Error(ErrorKind::DimensionMismatch, what);
}

std::string shape(const CsrMatrix &A)
{
  return std::to_string(A.n_rows()) + "x" + std::to_string(A.n_cols());
}

}  // namespace

CsrMatrix::CsrMatrix(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                     std::vector<Index> col_indices, std::vector<double> values)
  : n_rows_(n_rows), n_cols_(n_cols), row_offsets_(std::move(row_offsets)),
    col_indices_(std::move(col_indices)), values_(std::move(values))
{
  if (row_offsets_.size() != n_rows_ + 1 || row_offsets_.front() != 0 ||
      row_offsets_.back() != col_indices_.size() || col_indices_.size() != values_.size())
  {
    throw Error(ErrorKind::InvalidArgument, "inconsistent CSR array lengths");
  }
  for (Index i = 0; i < n_rows_; ++i)
  {
    if (row_offsets_[i] > row_offsets_[i + 1])
    {
      throw Error(ErrorKind::InvalidArgument, "row offsets decrease at row " + std::to_string(i));
    }
    for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
    {
      if (col_indices_[k] >= n_cols_ ||
          (k > row_offsets_[i] && col_indices_[k] <= col_indices_[k - 1]))
      {
        throw Error(ErrorKind::InvalidArgument,
                    "column indices unsorted, duplicated or out of range in row " +
                        std::to_string(i));
      }
    }
  }
}

CsrMatrix CsrMatrix::identity(Index n)
{
  std::vector<Index> offsets(n + 1), cols(n);
  std::iota(offsets.begin(), offsets.end(), Index{0});
  std::iota(cols.begin(), cols.end(), Index{0});
  return CsrMatrix(n, n, std::move(offsets), std::move(cols), std::vector<double>(n, 1.0));
}

CsrMatrix CsrMatrix::zero(Index n_rows, Index n_cols)
{
  return CsrMatrix(n_rows, n_cols, std::vector<Index>(n_rows + 1, 0), {}, {});
}

CsrMatrix CsrMatrix::from_triplets(Index n_rows, Index n_cols, std::vector<Triplet> entries)
{
  for (const auto &t : entries)
  {
    if (t.row >= n_rows || t.col >= n_cols)
    {
      throw Error(ErrorKind::InvalidArgument, "triplet index out of range");
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Triplet &a, const Triplet &b)
                   { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  std::vector<Index> offsets(n_rows + 1, 0), cols;
  std::vector<double> vals;
  cols.reserve(entries.size());
  vals.reserve(entries.size());
  for (Index k = 0; k < entries.size(); ++k)
  {
    const auto &t = entries[k];
    if (k > 0 && t.row == entries[k - 1].row && t.col == entries[k - 1].col)
    {
      vals.back() += t.value;
      continue;
    }
    cols.push_back(t.col);
    vals.push_back(t.value);
    ++offsets[t.row + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return CsrMatrix(n_rows, n_cols, std::move(offsets), std::move(cols), std::move(vals));
}

double CsrMatrix::at(Index i, Index j) const
{
  const auto r = row(i);
  const auto it = std::lower_bound(r.cols.begin(), r.cols.end(), j);
  return (it != r.cols.end() && *it == j) ? r.values[it - r.cols.begin()] : 0.0;
}

bool CsrMatrix::contains(Index i, Index j) const
{
  const auto r = row(i);
  return std::binary_search(r.cols.begin(), r.cols.end(), j);
}

DenseVector CsrMatrix::diagonal() const
{
  DenseVector d(std::min(n_rows_, n_cols_), 0.0);
  for (Index i = 0; i < d.size(); ++i)
  {
    d[i] = at(i, i);
  }
  return d;
}

DenseVector spmv(const CsrMatrix &A, std::span<const double> x)
{
  DenseVector y(A.n_rows());
  spmv(A, x, y);
  return y;
}

void spmv(const CsrMatrix &A, std::span<const double> x, std::span<double> y)
{
  if (x.size() != A.n_cols() || y.size() != A.n_rows())
  {
    mismatch("spmv with " + shape(A) + " matrix, x of length " + std::to_string(x.size()));
  }
  const auto ptr = A.row_offsets();
  const auto col = A.col_indices();
  const auto val = A.values();
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    double sum = 0.0;
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      sum += val[k] * x[col[k]];
    }
    y[i] = sum;
  }
}

void residual(const CsrMatrix &A, std::span<const double> x, std::span<const double> b,
              std::span<double> r)
{
  if (b.size() != A.n_rows())
  {
    mismatch("residual rhs length");
  }
  spmv(A, x, r);
  for (Index i = 0; i < r.size(); ++i)
  {
    r[i] = b[i] - r[i];
  }
}

CsrMatrix transpose(const CsrMatrix &A)
{
  const auto ptr = A.row_offsets();
  const auto col = A.col_indices();
  const auto val = A.values();
  std::vector<Index> offsets(A.n_cols() + 1, 0);
  for (const auto c : col)
  {
    ++offsets[c + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<Index> cols(A.nnz());
  std::vector<double> vals(A.nnz());
  std::vector<Index> fill(offsets.begin(), offsets.end() - 1);
  // Rows are visited in increasing order, so each output row comes out sorted.
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      const auto dst = fill[col[k]]++;
      cols[dst] = i;
      vals[dst] = val[k];
    }
  }
  return CsrMatrix(A.n_cols(), A.n_rows(), std::move(offsets), std::move(cols), std::move(vals));
}

CsrMatrix matmat(const CsrMatrix &A, const CsrMatrix &B)
{
  if (A.n_cols() != B.n_rows())
  {
    mismatch("matmat " + shape(A) + " * " + shape(B));
  }
  // Gustavson's row-by-row product with a dense marker.
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> marker(B.n_cols(), unset);
  std::vector<Index> offsets(A.n_rows() + 1, 0), cols;
  std::vector<double> vals;
  std::vector<Index> row_cols;
  std::vector<double> acc(B.n_cols(), 0.0);
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    row_cols.clear();
    const auto ra = A.row(i);
    for (Index ka = 0; ka < ra.cols.size(); ++ka)
    {
      const auto rb = B.row(ra.cols[ka]);
      const double a = ra.values[ka];
      for (Index kb = 0; kb < rb.cols.size(); ++kb)
      {
        const auto j = rb.cols[kb];
        if (marker[j] != i)
        {
          marker[j] = i;
          acc[j] = 0.0;
          row_cols.push_back(j);
        }
        acc[j] += a * rb.values[kb];
      }
    }
    std::sort(row_cols.begin(), row_cols.end());
    for (const auto j : row_cols)
    {
      cols.push_back(j);
      vals.push_back(acc[j]);
    }
    offsets[i + 1] = cols.size();
  }
  return CsrMatrix(A.n_rows(), B.n_cols(), std::move(offsets), std::move(cols), std::move(vals));
}

CsrMatrix triple_product_rap(const CsrMatrix &R, const CsrMatrix &A, const CsrMatrix &P)
{
  if (R.n_cols() != A.n_rows() || A.n_cols() != P.n_rows())
  {
    mismatch("triple product " + shape(R) + " * " + shape(A) + " * " + shape(P));
  }
  return matmat(matmat(R, A), P);
}

CsrMatrix scale(const CsrMatrix &A, double alpha)
{
  std::vector<double> vals(A.values().begin(), A.values().end());
  for (auto &v : vals)
  {
    v *= alpha;
  }
  return CsrMatrix(A.n_rows(), A.n_cols(),
                   std::vector<Index>(A.row_offsets().begin(), A.row_offsets().end()),
                   std::vector<Index>(A.col_indices().begin(), A.col_indices().end()),
                   std::move(vals));
}

CsrMatrix add(const CsrMatrix &A, const CsrMatrix &B, double alpha, double beta)
{
  if (A.n_rows() != B.n_rows() || A.n_cols() != B.n_cols())
  {
    mismatch("add " + shape(A) + " + " + shape(B));
  }
  std::vector<Index> offsets(A.n_rows() + 1, 0), cols;
  std::vector<double> vals;
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto ra = A.row(i), rb = B.row(i);
    Index ka = 0, kb = 0;
    while (ka < ra.cols.size() || kb < rb.cols.size())
    {
      if (kb == rb.cols.size() || (ka < ra.cols.size() && ra.cols[ka] < rb.cols[kb]))
      {
        cols.push_back(ra.cols[ka]);
        vals.push_back(alpha * ra.values[ka++]);
      }
      else if (ka == ra.cols.size() || rb.cols[kb] < ra.cols[ka])
      {
        cols.push_back(rb.cols[kb]);
        vals.push_back(beta * rb.values[kb++]);
      }
      else
      {
        cols.push_back(ra.cols[ka]);
        vals.push_back(alpha * ra.values[ka++] + beta * rb.values[kb++]);
      }
    }
    offsets[i + 1] = cols.size();
  }
  return CsrMatrix(A.n_rows(), A.n_cols(), std::move(offsets), std::move(cols), std::move(vals));
}

CsrMatrix drop_small(const CsrMatrix &A, double tol)
{
  std::vector<Index> offsets(A.n_rows() + 1, 0), cols;
  std::vector<double> vals;
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      if (r.cols[k] == i || std::abs(r.values[k]) > tol)
      {
        cols.push_back(r.cols[k]);
        vals.push_back(r.values[k]);
      }
    }
    offsets[i + 1] = cols.size();
  }
  return CsrMatrix(A.n_rows(), A.n_cols(), std::move(offsets), std::move(cols), std::move(vals));
}

CsrMatrix submatrix(const CsrMatrix &A, Index r0, Index nr, Index c0, Index nc)
{
  if (r0 + nr > A.n_rows() || c0 + nc > A.n_cols())
  {
    mismatch("submatrix range outside " + shape(A));
  }
  std::vector<Index> offsets(nr + 1, 0), cols;
  std::vector<double> vals;
  for (Index i = 0; i < nr; ++i)
  {
    const auto r = A.row(r0 + i);
    const auto lo = std::lower_bound(r.cols.begin(), r.cols.end(), c0);
    for (auto it = lo; it != r.cols.end() && *it < c0 + nc; ++it)
    {
      cols.push_back(*it - c0);
      vals.push_back(r.values[it - r.cols.begin()]);
    }
    offsets[i + 1] = cols.size();
  }
  return CsrMatrix(nr, nc, std::move(offsets), std::move(cols), std::move(vals));
}

double dot(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size())
  {
    mismatch("dot of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  double s = 0.0;
  for (Index i = 0; i < x.size(); ++i)
  {
    s += x[i] * y[i];
  }
  return s;
}

double norm2(std::span<const double> x)
{
  return std::sqrt(dot(x, x));
}

void axpy(double alpha, std::span<const double> x, std::span<double> y)
{
  if (x.size() != y.size())
  {
    mismatch("axpy of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  for (Index i = 0; i < x.size(); ++i)
  {
    y[i] += alpha * x[i];
  }
}

BlockVector::BlockVector(std::span<const Index> sizes)
{
  blocks.reserve(sizes.size());
  for (const auto n : sizes)
  {
    blocks.emplace_back(n, 0.0);
  }
}

std::vector<Index> BlockVector::sizes() const
{
  std::vector<Index> s;
  for (const auto &b : blocks)
  {
    s.push_back(b.size());
  }
  return s;
}

Index BlockVector::total_size() const
{
  Index n = 0;
  for (const auto &b : blocks)
  {
    n += b.size();
  }
  return n;
}

void BlockVector::set_zero()
{
  for (auto &b : blocks)
  {
    std::fill(b.begin(), b.end(), 0.0);
  }
}

double dot(const BlockVector &x, const BlockVector &y)
{
  if (x.n_blocks() != y.n_blocks())
  {
    mismatch("block dot with differing block counts");
  }
  double s = 0.0;
  for (Index b = 0; b < x.n_blocks(); ++b)
  {
    s += dot(x[b], y[b]);
  }
  return s;
}

double norm2(const BlockVector &x)
{
  return std::sqrt(dot(x, x));
}

void axpy(double alpha, const BlockVector &x, BlockVector &y)
{
  if (x.n_blocks() != y.n_blocks())
  {
    mismatch("block axpy with differing block counts");
  }
  for (Index b = 0; b < x.n_blocks(); ++b)
  {
    axpy(alpha, x[b], y[b]);
  }
}

DenseVector concatenate(const BlockVector &x)
{
  DenseVector out;
  out.reserve(x.total_size());
  for (const auto &b : x.blocks)
  {
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

BlockVector split_vector(std::span<const double> x, std::span<const Index> sizes)
{
  const Index total = std::accumulate(sizes.begin(), sizes.end(), Index{0});
  if (total != x.size())
  {
    mismatch("split of length " + std::to_string(x.size()) + " into blocks totalling " +
             std::to_string(total));
  }
  BlockVector out;
  Index offset = 0;
  for (const auto n : sizes)
  {
    out.blocks.emplace_back(x.begin() + offset, x.begin() + offset + n);
    offset += n;
  }
  return out;
}

BlockMatrix::BlockMatrix(std::vector<Index> row_sizes, std::vector<Index> col_sizes)
  : row_sizes_(std::move(row_sizes)), col_sizes_(std::move(col_sizes)),
    blocks_(row_sizes_.size() * col_sizes_.size())
{
}

Index BlockMatrix::total_rows() const
{
  return std::accumulate(row_sizes_.begin(), row_sizes_.end(), Index{0});
}

Index BlockMatrix::total_cols() const
{
  return std::accumulate(col_sizes_.begin(), col_sizes_.end(), Index{0});
}

void BlockMatrix::set(Index i, Index j, CsrMatrix A)
{
  set(i, j, std::make_shared<const CsrMatrix>(std::move(A)));
}

void BlockMatrix::set(Index i, Index j, BlockPtr A)
{
  if (i >= n_block_rows() || j >= n_block_cols())
  {
    mismatch("block index out of range");
  }
  if (A && (A->n_rows() != row_sizes_[i] || A->n_cols() != col_sizes_[j]))
  {
    mismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") has shape " +
             shape(*A) + ", expected " + std::to_string(row_sizes_[i]) + "x" +
             std::to_string(col_sizes_[j]));
  }
  blocks_[i * n_block_cols() + j] = std::move(A);
}

void BlockMatrix::clear(Index i, Index j)
{
  blocks_[i * n_block_cols() + j].reset();
}

Index BlockMatrix::nnz() const
{
  Index n = 0;
  for (const auto &b : blocks_)
  {
    if (b)
    {
      n += b->nnz();
    }
  }
  return n;
}

BlockVector block_apply(const BlockMatrix &A, const BlockVector &x)
{
  if (x.sizes() != A.col_sizes())
  {
    mismatch("block_apply: vector blocks do not match matrix column layout");
  }
  BlockVector y(A.row_sizes());
  DenseVector tmp;
  for (Index i = 0; i < A.n_block_rows(); ++i)
  {
    tmp.resize(A.row_sizes()[i]);
    for (Index j = 0; j < A.n_block_cols(); ++j)
    {
      if (const auto *Aij = A.block(i, j))
      {
        spmv(*Aij, x[j], tmp);
        axpy(1.0, tmp, y[i]);
      }
    }
  }
  return y;
}

BlockVector block_residual(const BlockMatrix &A, const BlockVector &x, const BlockVector &b)
{
  if (b.sizes() != A.row_sizes())
  {
    mismatch("block_residual: rhs blocks do not match matrix row layout");
  }
  auto r = block_apply(A, x);
  for (Index i = 0; i < r.n_blocks(); ++i)
  {
    for (Index k = 0; k < r[i].size(); ++k)
    {
      r[i][k] = b[i][k] - r[i][k];
    }
  }
  return r;
}

BlockMatrix block_galerkin(const BlockMatrix &R, const BlockMatrix &A, const BlockMatrix &P)
{
  const Index n = A.n_block_rows();
  if (A.n_block_cols() != n || R.n_block_rows() != n || R.n_block_cols() != n ||
      P.n_block_rows() != n || P.n_block_cols() != n)
  {
    mismatch("block_galerkin block counts");
  }
  BlockMatrix coarse(R.row_sizes(), P.col_sizes());
  for (Index i = 0; i < n; ++i)
  {
    for (Index j = 0; j < n; ++j)
    {
      if (const auto *Aij = A.block(i, j))
      {
        if (!R.has(i, i) || !P.has(j, j))
        {
          mismatch("block_galerkin requires present diagonal transfer blocks");
        }
        coarse.set(i, j, triple_product_rap(*R.block(i, i), *Aij, *P.block(j, j)));
      }
    }
  }
  return coarse;
}

BlockMatrix as_block(CsrMatrix A)
{
  BlockMatrix B({A.n_rows()}, {A.n_cols()});
  B.set(0, 0, std::move(A));
  return B;
}

std::vector<Index> DofMap::block_sizes() const
{
  std::vector<Index> s;
  for (Index b = 0; b < n_blocks(); ++b)
  {
    s.push_back(block_size(b));
  }
  return s;
}

Index DofMap::total() const
{
  return n_nodes * std::accumulate(dofs_per_node.begin(), dofs_per_node.end(), Index{0});
}

Index DofMap::global_index(Index block, Index local) const
{
  if (layout == DofLayout::Stacked)
  {
    Index offset = 0;
    for (Index b = 0; b < block; ++b)
    {
      offset += block_size(b);
    }
    return offset + local;
  }
  const Index per_node = total() / std::max<Index>(n_nodes, 1);
  Index field_offset = 0;
  for (Index b = 0; b < block; ++b)
  {
    field_offset += dofs_per_node[b];
  }
  const auto node = local / dofs_per_node[block];
  const auto comp = local % dofs_per_node[block];
  return node * per_node + field_offset + comp;
}

DofMap::Location DofMap::locate(Index global) const
{
  if (layout == DofLayout::Stacked)
  {
    Index b = 0;
    while (global >= block_size(b))
    {
      global -= block_size(b);
      ++b;
    }
    return {b, global};
  }
  const Index per_node = total() / std::max<Index>(n_nodes, 1);
  const auto node = global / per_node;
  auto within = global % per_node;
  Index b = 0;
  while (within >= dofs_per_node[b])
  {
    within -= dofs_per_node[b];
    ++b;
  }
  return {b, node * dofs_per_node[b] + within};
}

BlockMatrix split_monolithic(const CsrMatrix &A, const DofMap &map)
{
  if (A.n_rows() != map.total() || A.n_cols() != map.total())
  {
    mismatch("split_monolithic: " + shape(A) + " matrix with DofMap of " +
             std::to_string(map.total()) + " DoFs");
  }
  const Index nb = map.n_blocks();
  std::vector<Index> block_of(A.n_cols()), local_of(A.n_cols());
  for (Index g = 0; g < A.n_cols(); ++g)
  {
    const auto loc = map.locate(g);
    block_of[g] = loc.block;
    local_of[g] = loc.local;
  }
  std::vector<std::vector<Triplet>> parts(nb * nb);
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      const auto j = r.cols[k];
      parts[block_of[i] * nb + block_of[j]].push_back({local_of[i], local_of[j], r.values[k]});
    }
  }
  const auto sizes = map.block_sizes();
  BlockMatrix out(sizes, sizes);
  for (Index bi = 0; bi < nb; ++bi)
  {
    for (Index bj = 0; bj < nb; ++bj)
    {
      auto &p = parts[bi * nb + bj];
      if (!p.empty())
      {
        out.set(bi, bj, CsrMatrix::from_triplets(sizes[bi], sizes[bj], std::move(p)));
      }
    }
  }
  return out;
}

namespace
{

template <typename RowIndex, typename ColIndex>
CsrMatrix merge_with(const BlockMatrix &A, Index n_rows, Index n_cols, RowIndex row_index,
                     ColIndex col_index)
{
  std::vector<Triplet> entries;
  entries.reserve(A.nnz());
  for (Index bi = 0; bi < A.n_block_rows(); ++bi)
  {
    for (Index bj = 0; bj < A.n_block_cols(); ++bj)
    {
      const auto *B = A.block(bi, bj);
      if (!B)
      {
        continue;
      }
      for (Index i = 0; i < B->n_rows(); ++i)
      {
        const auto r = B->row(i);
        for (Index k = 0; k < r.cols.size(); ++k)
        {
          entries.push_back({row_index(bi, i), col_index(bj, r.cols[k]), r.values[k]});
        }
      }
    }
  }
  return CsrMatrix::from_triplets(n_rows, n_cols, std::move(entries));
}

}  // namespace

CsrMatrix merge_blocks(const BlockMatrix &A, const DofMap &map)
{
  const auto sizes = map.block_sizes();
  if (A.row_sizes() != sizes || A.col_sizes() != sizes)
  {
    mismatch("merge_blocks: block sizes inconsistent with DofMap");
  }
  const auto index = [&map](Index b, Index local) { return map.global_index(b, local); };
  return merge_with(A, map.total(), map.total(), index, index);
}

CsrMatrix merge_blocks(const BlockMatrix &A)
{
  std::vector<Index> row_off(A.n_block_rows(), 0), col_off(A.n_block_cols(), 0);
  for (Index b = 1; b < row_off.size(); ++b)
  {
    row_off[b] = row_off[b - 1] + A.row_sizes()[b - 1];
  }
  for (Index b = 1; b < col_off.size(); ++b)
  {
    col_off[b] = col_off[b - 1] + A.col_sizes()[b - 1];
  }
  return merge_with(
      A, A.total_rows(), A.total_cols(), [&](Index b, Index i) { return row_off[b] + i; },
      [&](Index b, Index j) { return col_off[b] + j; });
}

BlockVector split_vector(std::span<const double> x, const DofMap &map)
{
  if (x.size() != map.total())
  {
    mismatch("split_vector length vs DofMap");
  }
  BlockVector out(map.block_sizes());
  for (Index g = 0; g < x.size(); ++g)
  {
    const auto loc = map.locate(g);
    out[loc.block][loc.local] = x[g];
  }
  return out;
}

DenseVector merge_vector(const BlockVector &x, const DofMap &map)
{
  if (x.sizes() != map.block_sizes())
  {
    mismatch("merge_vector blocks vs DofMap");
  }
  DenseVector out(map.total());
  for (Index b = 0; b < x.n_blocks(); ++b)
  {
    for (Index l = 0; l < x[b].size(); ++l)
    {
      out[map.global_index(b, l)] = x[b][l];
    }
  }
  return out;
}

}  // namespace blockamg
