// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_HIERARCHY_HPP
#define BLOCKAMG_HIERARCHY_HPP

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "blockamg/aggregation.hpp"
#include "blockamg/dense_lu.hpp"
#include "blockamg/smoothers.hpp"
#include "blockamg/sparse.hpp"

namespace blockamg
{

enum class TransferKind
{
  Tentative,
  Smoothed,
};

struct SetupParams
{
  Index max_levels = 10;
  // Coarsening stops once the merged operator has at most this many rows.
  Index coarse_size = 100;
  Index target_size = 3;
  TransferKind transfer = TransferKind::Tentative;
  // Smoothed-aggregation damping; 0 selects 4 / (3 rho(D^{-1} A)) per block.
  double prolongator_damping = 0.0;
  bool normalize_transfers = false;
  bool clone_aggregates = false;
  bool share_transfers = false;
  SmootherSpec smoother;
  // Smoother applications before and after the coarse correction.
  Index pre_smooth = 1;
  Index post_smooth = 1;
  double drop_tol = 0.0;
  // Co-located DoFs per node for each block; empty means one per block.
  std::vector<Index> dofs_per_node;

  void validate(Index n_blocks) const;
};

struct Level
{
  Index index = 0;
  BlockMatrix A;
  // Block-diagonal transfers to the next level; absent (zero blocks) on the coarsest level.
  BlockMatrix P;
  BlockMatrix R;
  std::vector<Aggregation> aggregates;
  std::vector<Index> dofs_per_node;
  std::shared_ptr<const BlockSmoother> smoother;

  bool is_coarsest() const { return P.n_block_rows() == 0; }
};

//
// Multigrid hierarchy over an N x N block operator (N = 1 for scalar problems). Each level
// stores its Galerkin operator, block-diagonal transfers and smoother; the coarsest level is
// solved directly with a dense LU of the merged operator. Immutable after setup, so
// concurrent applications on distinct vectors are safe.
//
class Hierarchy
{
public:
  const std::vector<Level> &levels() const noexcept { return levels_; }
  Index n_levels() const noexcept { return levels_.size(); }
  const Level &finest() const { return levels_.front(); }

  // sum_l nnz(A_l) / nnz(A_0) over all blocks.
  double operator_complexity() const;

  // One V-cycle for A x = b starting from x_in.
  BlockVector vcycle(const BlockVector &b, const BlockVector &x_in) const;
  // One V-cycle from a zero initial guess; a fixed linear map of r.
  BlockVector apply_preconditioner(const BlockVector &r) const;
  // Same on stacked (block 0, then block 1, ...) flat vectors.
  void apply_preconditioner(std::span<const double> r, std::span<double> z) const;

  void write_report(std::ostream &out) const;
  std::string report() const;

private:
  friend Hierarchy setup_block_hierarchy(const BlockMatrix &A, const SetupParams &p);

  void cycle(Index level, const BlockVector &b, BlockVector &x) const;

  std::vector<Level> levels_;
  DenseLu coarse_solver_;
  Index pre_smooth_ = 1;
  Index post_smooth_ = 1;
};

// Scalar pipeline: amalgamate, aggregate, tentative P (optionally smoothed), R = P^T, RAP.
Hierarchy setup_scalar_hierarchy(const CsrMatrix &A, const SetupParams &p);

// Block pipeline. Block 0 is aggregated from its own graph; other blocks either aggregate
// their own graph or clone block 0's aggregates (clone_aggregates, co-located blocks only).
// share_transfers reuses P00/R00 on every block. The coarse operator is the blockwise
// Galerkin product, so off-diagonal coupling blocks persist on every level.
Hierarchy setup_block_hierarchy(const BlockMatrix &A, const SetupParams &p);

}  // namespace blockamg

#endif  // BLOCKAMG_HIERARCHY_HPP
