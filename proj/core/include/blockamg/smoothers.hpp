// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_SMOOTHERS_HPP
#define BLOCKAMG_SMOOTHERS_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockamg/sparse.hpp"

namespace blockamg
{

enum class SmootherKind
{
  Jacobi,
  GaussSeidel,
  Ilu0,
  SchwarzIlu0,
  BlockGaussSeidel,
};

std::string_view to_string(SmootherKind kind);
SmootherKind parse_smoother_kind(std::string_view name);

//
// Declarative smoother configuration. For BlockGaussSeidel, damping is the block update
// damping and sub_solvers holds one spec per diagonal block, each applied from a zero
// initial guess to approximately solve its block.
//
struct SmootherSpec
{
  SmootherKind kind = SmootherKind::GaussSeidel;
  Index sweeps = 1;
  double damping = 1.0;
  std::vector<SmootherSpec> sub_solvers;
  Index schwarz_domains = 1;

  // Throws InvalidArgument. n_diag_blocks is only checked for BlockGaussSeidel.
  void validate(Index n_diag_blocks) const;

  static SmootherSpec point(SmootherKind kind, double damping = 1.0, Index sweeps = 1);
  // Block Gauss-Seidel with Schwarz ILU(0) sub-solves on every block.
  static SmootherSpec block_gauss_seidel(Index n_blocks, double damping = 1.0,
                                         Index sweeps = 1, Index schwarz_domains = 1);
};

// ILU(0) factors: L strictly lower with implicit unit diagonal, U upper with its diagonal.
struct Ilu0Factors
{
  CsrMatrix L;
  CsrMatrix U;
};

// Gaussian elimination restricted to pattern(A) in natural row order. Throws ZeroDiagonal
// for a structurally missing diagonal and ZeroPivot when |u_ii| < 1e-14 max_i |a_ii|.
Ilu0Factors ilu0_factor(const CsrMatrix &A);
// z = U^{-1} L^{-1} r
DenseVector ilu0_apply(const Ilu0Factors &f, std::span<const double> r);
void ilu0_apply(const Ilu0Factors &f, std::span<const double> r, std::span<double> z);

// Non-overlapping additive Schwarz: contiguous row ranges, each factored with ILU(0) on its
// diagonal sub-block and applied independently (block Jacobi across domains).
class SchwarzIlu0
{
public:
  SchwarzIlu0(const CsrMatrix &A, Index n_domains);

  Index n_domains() const noexcept { return factors_.size(); }
  // Start row of each domain plus a final end marker.
  const std::vector<Index> &domain_offsets() const noexcept { return offsets_; }
  const Ilu0Factors &domain(Index d) const { return factors_[d]; }

  DenseVector apply(std::span<const double> r) const;
  void apply(std::span<const double> r, std::span<double> z) const;

private:
  std::vector<Index> offsets_;
  std::vector<Ilu0Factors> factors_;
};

inline SchwarzIlu0 schwarz_ilu0_factor(const CsrMatrix &A, Index n_domains)
{
  return SchwarzIlu0(A, n_domains);
}

// Damped Jacobi or forward Gauss-Seidel applied `sweeps` times starting from x.
DenseVector point_sweep(SmootherKind kind, const CsrMatrix &A, std::span<const double> b,
                        std::span<const double> x, double damping, Index sweeps);

//
// Stationary relaxation on a scalar operator. smooth() performs the configured sweeps
// starting from the iterate passed in x.
//
class Relaxation
{
public:
  virtual ~Relaxation() = default;
  virtual void smooth(std::span<const double> b, std::span<double> x) const = 0;
};

// Builds Jacobi, Gauss-Seidel, ILU(0) or Schwarz ILU(0) relaxation. Factorizations happen
// here, once.
std::unique_ptr<Relaxation> make_relaxation(std::shared_ptr<const CsrMatrix> A,
                                            const SmootherSpec &spec);

// Relaxation on a block system.
class BlockSmoother
{
public:
  virtual ~BlockSmoother() = default;
  virtual void smooth(const BlockVector &b, BlockVector &x) const = 0;
};

//
// Damped block Gauss-Seidel. Each sweep visits the diagonal blocks in order:
//   r_i  = b_i - sum_j A_ij x_j        (uses blocks already updated in this sweep)
//   x~_i = approximate solve of A_ii x~_i = r_i with sub-solver i from zero
//   x_i += damping * x~_i
//
class BlockGaussSeidel : public BlockSmoother
{
public:
  BlockGaussSeidel(const BlockMatrix &A, const SmootherSpec &spec);
  void smooth(const BlockVector &b, BlockVector &x) const override;

private:
  BlockMatrix A_;
  Index sweeps_;
  double damping_;
  std::vector<std::unique_ptr<Relaxation>> sub_;
};

// BlockGaussSeidel for kind BlockGaussSeidel; any other kind relaxes the merged (stacked)
// monolithic operator.
std::unique_ptr<BlockSmoother> make_block_smoother(const BlockMatrix &A, const SmootherSpec &spec);

// Block Gauss-Seidel from the zero initial guess.
BlockVector block_gs_sweep(const BlockMatrix &A, const BlockVector &b, const SmootherSpec &spec);

// The same update rules as above, started from x_in.
DenseVector smoother_as_iteration(const CsrMatrix &A, std::span<const double> b,
                                  std::span<const double> x_in, const SmootherSpec &spec);
BlockVector smoother_as_iteration(const BlockMatrix &A, const BlockVector &b,
                                  const BlockVector &x_in, const SmootherSpec &spec);

}  // namespace blockamg

#endif  // BLOCKAMG_SMOOTHERS_HPP
