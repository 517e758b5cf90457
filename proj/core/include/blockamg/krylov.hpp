// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_KRYLOV_HPP
#define BLOCKAMG_KRYLOV_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "blockamg/sparse.hpp"

namespace blockamg
{

// y = Op(x). Must be linear; x and y never alias.
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

LinearOperator make_operator(const CsrMatrix &A);

enum class SolveStatus
{
  Converged,
  MaxIterations,
  Breakdown,
};

struct SolveStats
{
  // Number of Krylov iterations (operator applications after the initial residual).
  Index iterations = 0;
  // ||b - A x_k|| / ||b|| per iteration, starting with the initial residual. Entries inside a
  // restart cycle are the GMRES least-squares estimates; the first entry of every cycle and
  // the final entry are true residuals.
  std::vector<double> relative_residuals;
  bool converged = false;
  SolveStatus status = SolveStatus::MaxIterations;
  double setup_seconds = 0.0;
  double solve_seconds = 0.0;

  double final_relative_residual() const { return relative_residuals.back(); }
};

struct GmresParams
{
  double tol = 1e-8;
  Index max_iter = 1000;
  Index restart = 50;
  // Store preconditioned directions (FGMRES) so a varying preconditioner is allowed.
  bool flexible = false;
};

struct GmresResult
{
  DenseVector x;
  SolveStats stats;
};

//
// Right-preconditioned restarted GMRES with modified Gram-Schmidt Arnoldi. Solves
// A M^{-1} u = b, x = M^{-1} u, so reported residuals are unpreconditioned. Starts from x0
// when given, else zero. Breakdown (an Arnoldi vector that underflows before convergence)
// is reported through SolveStatus::Breakdown.
//
GmresResult gmres(const LinearOperator &op, const LinearOperator *precond,
                  std::span<const double> b, const GmresParams &params,
                  std::span<const double> x0 = {});

// "iter,relres" CSV history.
void write_convergence_history(std::ostream &out, const SolveStats &stats);

}  // namespace blockamg

#endif  // BLOCKAMG_KRYLOV_HPP
