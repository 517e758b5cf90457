// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_TRANSFER_HPP
#define BLOCKAMG_TRANSFER_HPP

#include <memory>
#include <utility>
#include <vector>

#include "blockamg/aggregation.hpp"
#include "blockamg/sparse.hpp"

namespace blockamg
{

// Prolongation (fine x coarse) and restriction (coarse x fine) for one physics block.
struct TransferPair
{
  std::shared_ptr<const CsrMatrix> P;
  std::shared_ptr<const CsrMatrix> R;

  static TransferPair from_prolongator(CsrMatrix P);
};

// Diagonal transfer blocks, one pair per physics block. Off-diagonal blocks are zero.
struct BlockTransfer
{
  std::vector<TransferPair> diag;

  BlockMatrix prolongation() const;
  BlockMatrix restriction() const;
};

// Piecewise-constant interpolation per solution component. DoF d of node v maps to DoF d of
// aggregate(v) with weight 1, or 1/sqrt(|aggregate|) when normalize is set. Both fine and
// coarse DoFs are node-major (interleaved within the block).
CsrMatrix tentative_prolongator(const Aggregation &agg, Index dofs_per_node,
                                bool normalize = false);

// (I - omega D^{-1} A) P_hat with D = diag(A).
CsrMatrix smooth_prolongator(const CsrMatrix &A, const CsrMatrix &P_hat, double omega);

// Power-iteration estimate of the spectral radius of D^{-1} A.
double estimate_spectral_radius(const CsrMatrix &A, int iterations = 20);

// The usual smoothed-aggregation damping, 4 / (3 rho(D^{-1} A)).
double default_prolongator_damping(const CsrMatrix &A);

CsrMatrix restriction_from_prolongator(const CsrMatrix &P);

// diag(P00, P11, ...) and diag(R00, R11, ...).
std::pair<BlockMatrix, BlockMatrix> block_diagonal_transfer(const std::vector<TransferPair> &pairs);

// One pair aliased on every diagonal block. block_rows lists the fine size of each block and
// must all equal the pair's fine size.
BlockTransfer shared_transfer(const TransferPair &pair, Index n_blocks);
BlockTransfer shared_transfer(const TransferPair &pair, std::span<const Index> block_rows);

}  // namespace blockamg

#endif  // BLOCKAMG_TRANSFER_HPP
