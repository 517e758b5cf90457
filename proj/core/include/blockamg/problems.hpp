// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_PROBLEMS_HPP
#define BLOCKAMG_PROBLEMS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blockamg/sparse.hpp"

namespace blockamg
{

// Structured-grid finite-difference generators on the unit square with Dirichlet boundary
// nodes eliminated. Grid node (i, j), 0 <= i, j < n, has index j * n + i; h = 1 / (n + 1).

struct Wind
{
  double x = 0.0;
  double y = 0.0;
};

// 5-point Laplacian: diagonal 4, neighbors -1.
CsrMatrix poisson2d(Index n);

// epsilon * poisson2d(n) plus first-order upwind convection: for each wind component v the
// diagonal gains |v| h and the upwind neighbor -|v| h.
CsrMatrix convdiff2d(Index n, double epsilon, Wind wind);

// Centered pressure gradient (p_{+} - p_{-}) / 2 per velocity component; 2n^2 x n^2 with
// velocity DoFs interleaved per node.
CsrMatrix gradient2d(Index n);

//
// Stabilized saddle-point pair [[J, G], [-G^T, tau L]]: block 0 holds both velocity
// components (interleaved, convdiff2d each), block 1 the pressure. The (1,1) block is always
// present, with all-zero values when tau = 0.
//
BlockMatrix saddle2d(Index n, double epsilon, Wind wind, double tau);

enum class CouplingKind
{
  NodeLocal,   // Z = gamma I, Y = -gamma I on velocity/induction DoFs
  Convective,  // Z = gamma (backward x-difference), Y = -Z^T
};

// A block system plus the number of co-located DoFs per node in each block.
struct BlockSystem
{
  BlockMatrix A;
  std::vector<Index> dofs_per_node;
};

//
// Coupled 2x2 system mirroring a fluid/electromagnetic split: block 0 is a velocity-pressure
// saddle2d group, block 1 a structurally identical induction/Lagrange-multiplier group, both
// with 3 DoFs per node (two vector components, one scalar) on the same n x n grid. A01 and
// A10 couple the vector components with strength gamma; gamma = 0 leaves them absent.
//
BlockSystem coupled_mhd_like(Index n, double epsilon, Wind wind, double tau, double gamma,
                             CouplingKind coupling = CouplingKind::NodeLocal);

//
// Mixed-resolution variant: block 0 on a (2n-1) x (2n-1) grid, block 1 on n x n, coarse node
// (I, J) co-located with fine node (2I, 2J). Coupling blocks are gamma-scaled bilinear
// interpolation weights between the two grids (A01 = gamma W, A10 = -gamma W^T). The node
// counts differ, so aggregates cannot be cloned between blocks.
//
BlockSystem coupled_mixed_resolution(Index n, double epsilon, Wind wind, double tau,
                                     double gamma);

struct ManufacturedProblem
{
  DenseVector b;
  DenseVector x_true;
};

// x_true is a deterministic pseudo-random unit vector drawn from seed; b = A x_true. Block
// operators use the stacked layout.
ManufacturedProblem manufactured_rhs(const CsrMatrix &A, std::uint64_t seed);
ManufacturedProblem manufactured_rhs(const BlockMatrix &A, std::uint64_t seed);

enum class ProblemKind
{
  Poisson2d,
  ConvDiff2d,
  Saddle2d,
  CoupledMhdLike,
  CoupledMixedResolution,
};

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

struct ProblemSpec
{
  ProblemKind kind = ProblemKind::Poisson2d;
  Index n = 16;
  double epsilon = 1.0;
  Wind velocity{1.0, 0.5};
  double tau = 0.05;
  double gamma = 0.0;
  CouplingKind coupling = CouplingKind::NodeLocal;
  std::uint64_t seed = 1;

  // Throws Config on violated parameter ranges.
  void validate() const;
};

BlockSystem generate(const ProblemSpec &spec);

}  // namespace blockamg

#endif  // BLOCKAMG_PROBLEMS_HPP
