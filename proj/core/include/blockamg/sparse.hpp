// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_SPARSE_HPP
#define BLOCKAMG_SPARSE_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace blockamg
{

using Index = std::size_t;
using DenseVector = std::vector<double>;

struct Triplet
{
  Index row;
  Index col;
  double value;
};

//
// Compressed sparse row matrix. Column indices are strictly increasing within each row
// and there are no duplicate entries; every constructor validates this. Instances are
// immutable once built.
//
class CsrMatrix
{
public:
  struct RowView
  {
    std::span<const Index> cols;
    std::span<const double> values;
  };

  // Empty 0 x 0 matrix.
  CsrMatrix() : row_offsets_(1, 0) {}

  CsrMatrix(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
            std::vector<Index> col_indices, std::vector<double> values);

  static CsrMatrix identity(Index n);
  static CsrMatrix zero(Index n_rows, Index n_cols);

  // Entries with equal (row, col) are summed. Explicit zeros are kept.
  static CsrMatrix from_triplets(Index n_rows, Index n_cols, std::vector<Triplet> entries);

  Index n_rows() const noexcept { return n_rows_; }
  Index n_cols() const noexcept { return n_cols_; }
  Index nnz() const noexcept { return col_indices_.size(); }

  std::span<const Index> row_offsets() const noexcept { return row_offsets_; }
  std::span<const Index> col_indices() const noexcept { return col_indices_; }
  std::span<const double> values() const noexcept { return values_; }

  RowView row(Index i) const noexcept
  {
    const auto b = row_offsets_[i], e = row_offsets_[i + 1];
    return {std::span<const Index>(col_indices_).subspan(b, e - b),
            std::span<const double>(values_).subspan(b, e - b)};
  }

  // Value of entry (i, j), 0 if structurally absent.
  double at(Index i, Index j) const;
  bool contains(Index i, Index j) const;
  DenseVector diagonal() const;

  bool operator==(const CsrMatrix &other) const = default;

private:
  Index n_rows_ = 0;
  Index n_cols_ = 0;
  std::vector<Index> row_offsets_;
  std::vector<Index> col_indices_;
  std::vector<double> values_;
};

// y = A x
DenseVector spmv(const CsrMatrix &A, std::span<const double> x);
void spmv(const CsrMatrix &A, std::span<const double> x, std::span<double> y);
// r = b - A x
void residual(const CsrMatrix &A, std::span<const double> x, std::span<const double> b,
              std::span<double> r);

CsrMatrix transpose(const CsrMatrix &A);

// Sparse product. Entries that cancel to 0.0 stay in the pattern; use drop_small() to
// remove them explicitly.
CsrMatrix matmat(const CsrMatrix &A, const CsrMatrix &B);

// R * A * P, evaluated as (R * A) * P.
CsrMatrix triple_product_rap(const CsrMatrix &R, const CsrMatrix &A, const CsrMatrix &P);

CsrMatrix scale(const CsrMatrix &A, double alpha);
// alpha * A + beta * B on the union pattern.
CsrMatrix add(const CsrMatrix &A, const CsrMatrix &B, double alpha = 1.0, double beta = 1.0);
// Removes entries with |a_ij| <= tol. Diagonal entries are always kept.
CsrMatrix drop_small(const CsrMatrix &A, double tol);
// Rows/cols [r0, r0+nr) x [c0, c0+nc), reindexed from zero.
CsrMatrix submatrix(const CsrMatrix &A, Index r0, Index nr, Index c0, Index nc);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
// y += alpha x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

struct BlockVector
{
  std::vector<DenseVector> blocks;

  BlockVector() = default;
  explicit BlockVector(std::span<const Index> sizes);
  explicit BlockVector(std::vector<DenseVector> b) : blocks(std::move(b)) {}

  Index n_blocks() const noexcept { return blocks.size(); }
  DenseVector &operator[](Index i) { return blocks[i]; }
  const DenseVector &operator[](Index i) const { return blocks[i]; }
  std::vector<Index> sizes() const;
  Index total_size() const;
  void set_zero();

  bool operator==(const BlockVector &) const = default;
};

double dot(const BlockVector &x, const BlockVector &y);
double norm2(const BlockVector &x);
void axpy(double alpha, const BlockVector &x, BlockVector &y);

// Stacked (block-major) conversion between a BlockVector and one flat vector.
DenseVector concatenate(const BlockVector &x);
BlockVector split_vector(std::span<const double> x, std::span<const Index> sizes);

//
// Grid of optional sparse blocks. An absent block is the zero matrix and is never
// materialized. Blocks are shared immutable matrices so transfer blocks can alias.
//
class BlockMatrix
{
public:
  using BlockPtr = std::shared_ptr<const CsrMatrix>;

  BlockMatrix() = default;
  BlockMatrix(std::vector<Index> row_sizes, std::vector<Index> col_sizes);

  Index n_block_rows() const noexcept { return row_sizes_.size(); }
  Index n_block_cols() const noexcept { return col_sizes_.size(); }
  const std::vector<Index> &row_sizes() const noexcept { return row_sizes_; }
  const std::vector<Index> &col_sizes() const noexcept { return col_sizes_; }
  Index total_rows() const;
  Index total_cols() const;

  bool has(Index i, Index j) const { return blocks_[i * n_block_cols() + j] != nullptr; }
  // nullptr when absent.
  const CsrMatrix *block(Index i, Index j) const { return blocks_[i * n_block_cols() + j].get(); }
  const BlockPtr &shared_block(Index i, Index j) const { return blocks_[i * n_block_cols() + j]; }

  void set(Index i, Index j, CsrMatrix A);
  void set(Index i, Index j, BlockPtr A);
  void clear(Index i, Index j);

  // Sum of nnz over present blocks.
  Index nnz() const;

private:
  std::vector<Index> row_sizes_;
  std::vector<Index> col_sizes_;
  std::vector<BlockPtr> blocks_;
};

BlockVector block_apply(const BlockMatrix &A, const BlockVector &x);
// r = b - A x, blockwise
BlockVector block_residual(const BlockMatrix &A, const BlockVector &x, const BlockVector &b);
// Blockwise R_ii * A_ij * P_jj for block-diagonal R and P. Absent blocks stay absent.
BlockMatrix block_galerkin(const BlockMatrix &R, const BlockMatrix &A, const BlockMatrix &P);
// Wrap a scalar matrix as a 1 x 1 block matrix.
BlockMatrix as_block(CsrMatrix A);

enum class DofLayout
{
  Interleaved,  // node-major: all fields of node 0, then node 1, ...
  Stacked,      // field-major: all of block 0, then all of block 1, ...
};

//
// Maps monolithic DoF indices to (block, local index). Within a block DoFs are always
// node-major: local = node * dofs_per_node[b] + component.
//
struct DofMap
{
  Index n_nodes = 0;
  std::vector<Index> dofs_per_node;
  DofLayout layout = DofLayout::Stacked;

  Index n_blocks() const noexcept { return dofs_per_node.size(); }
  Index block_size(Index b) const { return n_nodes * dofs_per_node[b]; }
  std::vector<Index> block_sizes() const;
  Index total() const;
  Index global_index(Index block, Index local) const;

  struct Location
  {
    Index block;
    Index local;
  };
  Location locate(Index global) const;
};

BlockMatrix split_monolithic(const CsrMatrix &A, const DofMap &map);
CsrMatrix merge_blocks(const BlockMatrix &A, const DofMap &map);
// Stacked merge using the block sizes of A; works for blocks with unequal node counts.
CsrMatrix merge_blocks(const BlockMatrix &A);

BlockVector split_vector(std::span<const double> x, const DofMap &map);
DenseVector merge_vector(const BlockVector &x, const DofMap &map);

}  // namespace blockamg

#endif  // BLOCKAMG_SPARSE_HPP
