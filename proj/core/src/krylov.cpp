// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/krylov.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "blockamg/error.hpp"

namespace blockamg
{

LinearOperator make_operator(const CsrMatrix &A)
{
  return [&A](std::span<const double> x, std::span<double> y) { spmv(A, x, y); };
}

namespace
{

void givens(double a, double b, double &c, double &s)
{
  if (b == 0.0)
  {
    c = 1.0;
    s = 0.0;
    return;
  }
  const double r = std::hypot(a, b);
  c = a / r;
  s = b / r;
}

}  // namespace

GmresResult gmres(const LinearOperator &op, const LinearOperator *precond,
                  std::span<const double> b, const GmresParams &params,
                  std::span<const double> x0)
{
  if (!(params.tol > 0.0) || params.restart < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "GMRES needs tol > 0 and restart >= 1");
  }
  const Index n = b.size();
  if (!x0.empty() && x0.size() != n)
  {
    throw Error(ErrorKind::DimensionMismatch, "GMRES initial guess length");
  }
  GmresResult result;
  auto &x = result.x;
  auto &stats = result.stats;
  x.assign(n, 0.0);

  const double bnorm = norm2(b);
  if (bnorm == 0.0)
  {
    stats.relative_residuals.push_back(0.0);
    stats.converged = true;
    stats.status = SolveStatus::Converged;
    return result;
  }
  if (!x0.empty())
  {
    x.assign(x0.begin(), x0.end());
  }

  const Index m = params.restart;
  std::vector<DenseVector> V(m + 1, DenseVector(n)), Z;
  if (params.flexible && precond)
  {
    Z.assign(m, DenseVector(n));
  }
  std::vector<double> H((m + 1) * m), cs(m), sn(m), g(m + 1), y(m);
  const auto h = [&H, m](Index i, Index j) -> double & { return H[j * (m + 1) + i]; };
  DenseVector r(n), w(n), z(n);

  bool breakdown = false;
  for (;;)
  {
    op(x, r);
    for (Index i = 0; i < n; ++i)
    {
      r[i] = b[i] - r[i];
    }
    const double beta = norm2(r);
    const double rel = beta / bnorm;
    if (stats.relative_residuals.empty())
    {
      stats.relative_residuals.push_back(rel);
    }
    else
    {
      stats.relative_residuals.back() = rel;
    }
    if (rel <= params.tol)
    {
      stats.converged = true;
      stats.status = SolveStatus::Converged;
      break;
    }
    if (breakdown)
    {
      stats.status = SolveStatus::Breakdown;
      break;
    }
    if (stats.iterations >= params.max_iter)
    {
      stats.status = SolveStatus::MaxIterations;
      break;
    }

    for (Index i = 0; i < n; ++i)
    {
      V[0][i] = r[i] / beta;
    }
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;
    Index k = 0;
    while (k < m && stats.iterations < params.max_iter)
    {
      const Index j = k;
      auto &zj = Z.empty() ? z : Z[j];
      if (precond)
      {
        (*precond)(V[j], zj);
      }
      else
      {
        zj = V[j];
      }
      op(zj, w);
      const double wnorm = norm2(w);
      for (Index i = 0; i <= j; ++i)
      {
        h(i, j) = dot(w, V[i]);
        axpy(-h(i, j), V[i], w);
      }
      h(j + 1, j) = norm2(w);
      const bool lucky = !(h(j + 1, j) > 1e-14 * wnorm);
      if (!lucky)
      {
        for (Index i = 0; i < n; ++i)
        {
          V[j + 1][i] = w[i] / h(j + 1, j);
        }
      }
      for (Index i = 0; i < j; ++i)
      {
        const double t = cs[i] * h(i, j) + sn[i] * h(i + 1, j);
        h(i + 1, j) = -sn[i] * h(i, j) + cs[i] * h(i + 1, j);
        h(i, j) = t;
      }
      givens(h(j, j), h(j + 1, j), cs[j], sn[j]);
      h(j, j) = cs[j] * h(j, j) + sn[j] * h(j + 1, j);
      h(j + 1, j) = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];

      ++stats.iterations;
      ++k;
      stats.relative_residuals.push_back(std::abs(g[j + 1]) / bnorm);
      if (lucky || h(j, j) == 0.0)
      {
        breakdown = true;
        break;
      }
      if (std::abs(g[j + 1]) / bnorm <= params.tol)
      {
        break;
      }
    }

    // Back substitution on the k x k triangle; a zero diagonal (singular least-squares
    // system) truncates the update.
    Index used = k;
    while (used > 0 && h(used - 1, used - 1) == 0.0)
    {
      --used;
    }
    for (Index i = used; i-- > 0;)
    {
      double s = g[i];
      for (Index l = i + 1; l < used; ++l)
      {
        s -= h(i, l) * y[l];
      }
      y[i] = s / h(i, i);
    }
    if (!Z.empty())
    {
      for (Index i = 0; i < used; ++i)
      {
        axpy(y[i], Z[i], x);
      }
    }
    else
    {
      std::fill(w.begin(), w.end(), 0.0);
      for (Index i = 0; i < used; ++i)
      {
        axpy(y[i], V[i], w);
      }
      if (precond)
      {
        (*precond)(w, z);
        axpy(1.0, z, x);
      }
      else
      {
        axpy(1.0, w, x);
      }
    }
  }
  return result;
}

void write_convergence_history(std::ostream &out, const SolveStats &stats)
{
  out << "iter,relres\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Index i = 0; i < stats.relative_residuals.size(); ++i)
  {
    out << i << ',' << stats.relative_residuals[i] << '\n';
  }
}

}  // namespace blockamg
