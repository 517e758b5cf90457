// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/transfer.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

TransferPair TransferPair::from_prolongator(CsrMatrix P)
{
  auto R = std::make_shared<const CsrMatrix>(restriction_from_prolongator(P));
  return {std::make_shared<const CsrMatrix>(std::move(P)), std::move(R)};
}

BlockMatrix BlockTransfer::prolongation() const
{
  return block_diagonal_transfer(diag).first;
}

BlockMatrix BlockTransfer::restriction() const
{
  return block_diagonal_transfer(diag).second;
}

CsrMatrix tentative_prolongator(const Aggregation &agg, Index dofs_per_node, bool normalize)
{
  if (dofs_per_node == 0)
  {
    throw Error(ErrorKind::InvalidArgument, "dofs_per_node must be positive");
  }
  std::vector<double> weight(agg.n_aggregates, 1.0);
  if (normalize)
  {
    std::vector<Index> size(agg.n_aggregates, 0);
    for (const auto a : agg.node_to_aggregate)
    {
      ++size[a];
    }
    for (Index a = 0; a < agg.n_aggregates; ++a)
    {
      weight[a] = 1.0 / std::sqrt(static_cast<double>(size[a]));
    }
  }
  const Index n_rows = agg.n_nodes * dofs_per_node;
  std::vector<Index> offsets(n_rows + 1), cols(n_rows);
  std::vector<double> vals(n_rows);
  std::iota(offsets.begin(), offsets.end(), Index{0});
  for (Index v = 0; v < agg.n_nodes; ++v)
  {
    const auto a = agg.node_to_aggregate[v];
    for (Index d = 0; d < dofs_per_node; ++d)
    {
      cols[v * dofs_per_node + d] = a * dofs_per_node + d;
      vals[v * dofs_per_node + d] = weight[a];
    }
  }
  return CsrMatrix(n_rows, agg.n_aggregates * dofs_per_node, std::move(offsets),
                   std::move(cols), std::move(vals));
}

namespace
{

DenseVector inverse_diagonal(const CsrMatrix &A)
{
  auto d = A.diagonal();
  for (Index i = 0; i < d.size(); ++i)
  {
    if (d[i] == 0.0)
    {
      throw Error(ErrorKind::ZeroDiagonal, "zero diagonal in row " + std::to_string(i));
    }
    d[i] = 1.0 / d[i];
  }
  return d;
}

}  // namespace

CsrMatrix smooth_prolongator(const CsrMatrix &A, const CsrMatrix &P_hat, double omega)
{
  if (A.n_rows() != A.n_cols() || A.n_rows() != P_hat.n_rows())
  {
    throw Error(ErrorKind::DimensionMismatch, "smooth_prolongator shapes");
  }
  const auto dinv = inverse_diagonal(A);
  if (omega == 0.0)
  {
    return P_hat;
  }
  // D^{-1} A scaled row-wise by omega, then P = P_hat - (omega D^{-1} A) P_hat.
  std::vector<double> vals(A.values().begin(), A.values().end());
  const auto ptr = A.row_offsets();
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      vals[k] *= omega * dinv[i];
    }
  }
  const CsrMatrix scaled(A.n_rows(), A.n_cols(), std::vector<Index>(ptr.begin(), ptr.end()),
                         std::vector<Index>(A.col_indices().begin(), A.col_indices().end()),
                         std::move(vals));
  return add(P_hat, matmat(scaled, P_hat), 1.0, -1.0);
}

double estimate_spectral_radius(const CsrMatrix &A, int iterations)
{
  const auto dinv = inverse_diagonal(A);
  const Index n = A.n_rows();
  if (n == 0)
  {
    return 0.0;
  }
  // Deterministic, non-symmetric start vector so no eigencomponent is missed by symmetry.
  DenseVector x(n), y(n);
  for (Index i = 0; i < n; ++i)
  {
    x[i] = 1.0 + static_cast<double>(i % 7) / 7.0;
  }
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it)
  {
    const double nx = norm2(x);
    for (auto &v : x)
    {
      v /= nx;
    }
    spmv(A, x, y);
    for (Index i = 0; i < n; ++i)
    {
      y[i] *= dinv[i];
    }
    lambda = norm2(y);
    std::swap(x, y);
    if (lambda == 0.0)
    {
      break;
    }
  }
  return lambda;
}

double default_prolongator_damping(const CsrMatrix &A)
{
  const double rho = estimate_spectral_radius(A);
  return rho > 0.0 ? 4.0 / (3.0 * rho) : 0.0;
}

CsrMatrix restriction_from_prolongator(const CsrMatrix &P)
{
  return transpose(P);
}

std::pair<BlockMatrix, BlockMatrix> block_diagonal_transfer(const std::vector<TransferPair> &pairs)
{
  if (pairs.empty())
  {
    throw Error(ErrorKind::InvalidArgument, "block_diagonal_transfer needs at least one pair");
  }
  std::vector<Index> fine, coarse;
  for (const auto &p : pairs)
  {
    if (!p.P || !p.R || p.R->n_rows() != p.P->n_cols() || p.R->n_cols() != p.P->n_rows())
    {
      throw Error(ErrorKind::DimensionMismatch, "transfer pair with inconsistent P and R");
    }
    fine.push_back(p.P->n_rows());
    coarse.push_back(p.P->n_cols());
  }
  BlockMatrix P(fine, coarse), R(coarse, fine);
  for (Index b = 0; b < pairs.size(); ++b)
  {
    P.set(b, b, pairs[b].P);
    R.set(b, b, pairs[b].R);
  }
  return {std::move(P), std::move(R)};
}

BlockTransfer shared_transfer(const TransferPair &pair, Index n_blocks)
{
  return BlockTransfer{std::vector<TransferPair>(n_blocks, pair)};
}

BlockTransfer shared_transfer(const TransferPair &pair, std::span<const Index> block_rows)
{
  for (Index b = 0; b < block_rows.size(); ++b)
  {
    if (block_rows[b] != pair.P->n_rows())
    {
      throw Error(ErrorKind::DimensionMismatch,
                  "shared transfer has " + std::to_string(pair.P->n_rows()) +
                      " fine rows but block " + std::to_string(b) + " has " +
                      std::to_string(block_rows[b]));
    }
  }
  return shared_transfer(pair, block_rows.size());
}

}  // namespace blockamg
