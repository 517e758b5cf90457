// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one [PASS]/[FAIL] line per criterion, non-zero exit if any fails.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <sstream>
#include <string>

#include <blockamg/aggregation.hpp>
#include <blockamg/error.hpp>
#include <blockamg/hierarchy.hpp>
#include <blockamg/krylov.hpp>
#include <blockamg/problems.hpp>
#include <blockamg/smoothers.hpp>
#include <blockamg/transfer.hpp>

#include "oracle.hpp"

namespace
{

using namespace blockamg;
using oracle::Dense;
using oracle::to_dense;
namespace fs = std::filesystem;

class Criterion
{
public:
  void check(bool ok, const std::string &what)
  {
    if (!ok && ok_)
    {
      first_failure_ = what;
    }
    ok_ = ok_ && ok;
  }
  void note(const std::string &text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  bool ok() const { return ok_; }
  std::string summary() const { return ok_ ? notes_ : first_failure_; }

private:
  bool ok_ = true;
  std::string first_failure_;
  std::string notes_;
};

// Symmetric, strictly diagonally dominant with positive diagonal, hence SPD: every Galerkin
// product with a full-rank transfer stays non-singular.
Dense random_spd(Index n, double density, std::mt19937_64 &rng)
{
  Dense B = to_dense(oracle::random_sparse(n, n, density, rng));
  Dense S = B + B.transpose();
  for (Eigen::Index i = 0; i < S.rows(); ++i)
  {
    S(i, i) = 0.0;
    S(i, i) = S.row(i).cwiseAbs().sum() + 1.0;
  }
  return S;
}

BlockMatrix split2(const Dense &D, Index n0)
{
  const auto n1 = static_cast<Index>(D.rows()) - n0;
  return split_monolithic(oracle::from_dense(D), DofMap{1, {n0, n1}, DofLayout::Stacked});
}

double galerkin_error(const Hierarchy &h)
{
  double err = 0.0;
  for (Index l = 0; l + 1 < h.n_levels(); ++l)
  {
    const auto &L = h.levels()[l];
    err = std::max(err, oracle::max_abs_diff(to_dense(h.levels()[l + 1].A),
                                             to_dense(L.R) * to_dense(L.A) * to_dense(L.P)));
  }
  return err;
}

Criterion ac1()
{
  Criterion c;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t)
  {
    const Index n = 4 + rng() % 61;
    // Direct product with a random aggregation.
    const auto A = oracle::random_sparse(n, n, 0.15, rng);
    const auto agg = oracle::random_aggregation(n, 1 + rng() % (n / 2 + 1), rng);
    auto P = tentative_prolongator(agg, 1, t % 2 == 0);
    if (t % 3 == 0)
    {
      P = smooth_prolongator(oracle::random_diag_dominant(n, 0.15, rng), P, 0.6);
    }
    const auto R = restriction_from_prolongator(P);
    const double e1 =
        oracle::max_abs_diff(to_dense(triple_product_rap(R, A, P)), to_dense(R) * to_dense(A) * to_dense(P));
    // Stored levels of a constructed hierarchy.
    SetupParams p;
    p.coarse_size = 3;
    p.target_size = 2 + rng() % 3;
    p.transfer = t % 2 == 0 ? TransferKind::Tentative : TransferKind::Smoothed;
    const auto h = setup_scalar_hierarchy(oracle::from_dense(random_spd(n, 0.1, rng)), p);
    worst = std::max({worst, e1, galerkin_error(h)});
  }
  c.check(worst <= 1e-12, "scalar Galerkin error " + std::to_string(worst));

  // Block systems: A01 on every coarse level equals R00 A01 P11 and stays non-zero.
  double block_worst = 0.0;
  bool coupling_everywhere = true;
  for (int t = 0; t < 50; ++t)
  {
    const Index n0 = 8 + rng() % 40, n1 = 8 + rng() % 24;
    const auto A = split2(random_spd(n0 + n1, 0.12, rng), n0);
    SetupParams p;
    p.coarse_size = 6;
    p.dofs_per_node = {1, 1};
    p.smoother = SmootherSpec::block_gauss_seidel(2);
    p.transfer = t % 2 == 0 ? TransferKind::Tentative : TransferKind::Smoothed;
    const auto h = setup_block_hierarchy(A, p);
    coupling_everywhere = coupling_everywhere && h.n_levels() >= 2;
    for (Index l = 0; l + 1 < h.n_levels(); ++l)
    {
      const auto &L = h.levels()[l];
      const auto &C = h.levels()[l + 1].A;
      if (!C.has(0, 1) || !C.has(1, 0))
      {
        coupling_everywhere = false;
        continue;
      }
      coupling_everywhere = coupling_everywhere && oracle::nonzeros(*C.block(0, 1)) > 0;
      block_worst = std::max(
          {block_worst,
           oracle::max_abs_diff(to_dense(*C.block(0, 1)), to_dense(*L.R.block(0, 0)) *
                                                              to_dense(*L.A.block(0, 1)) *
                                                              to_dense(*L.P.block(1, 1))),
           oracle::max_abs_diff(to_dense(*C.block(1, 0)), to_dense(*L.R.block(1, 1)) *
                                                              to_dense(*L.A.block(1, 0)) *
                                                              to_dense(*L.P.block(0, 0))),
           oracle::max_abs_diff(to_dense(C), to_dense(L.R) * to_dense(L.A) * to_dense(L.P))});
    }
  }
  c.check(block_worst <= 1e-12, "block Galerkin error " + std::to_string(block_worst));
  c.check(coupling_everywhere, "coupling block missing on a coarse level");
  std::ostringstream note;
  note << "200 scalar + 50 block systems, max error " << std::max(worst, block_worst);
  c.note(note.str());
  return c;
}

// Literal transcription: x := 0; per sweep solve block 0 with x1 old, then block 1 with the
// updated x0. sub[i] maps a residual to the sub-solver's correction.
using SubSolve = std::function<Dense(const Dense &)>;

std::pair<Dense, Dense> algorithm1(const Dense &A00, const Dense &A01, const Dense &A10,
                                   const Dense &A11, const Dense &b0, const Dense &b1,
                                   const SubSolve &s0, const SubSolve &s1, double omega,
                                   int sweeps, bool jacobi)
{
  Dense x0 = Dense::Zero(b0.rows(), 1), x1 = Dense::Zero(b1.rows(), 1);
  for (int s = 0; s < sweeps; ++s)
  {
    const Dense x0_old = x0;
    const Dense r0 = b0 - A00 * x0 - A01 * x1;
    x0 = x0 + omega * s0(r0);
    const Dense r1 = b1 - A10 * (jacobi ? x0_old : x0) - A11 * x1;
    x1 = x1 + omega * s1(r1);
  }
  return {x0, x1};
}

// k relaxation sweeps from a zero start with splitting matrix M.
SubSolve splitting_solve(const Dense &A, const Dense &M, int k)
{
  return [A, Minv = Dense(M.inverse()), k](const Dense &r)
  {
    Dense y = Dense::Zero(r.rows(), 1);
    for (int s = 0; s < k; ++s)
    {
      y += Minv * (r - A * y);
    }
    return y;
  };
}

Criterion ac2()
{
  Criterion c;
  std::mt19937_64 rng(202);
  double worst = 0.0, min_gap = 1e300;
  for (int t = 0; t < 200; ++t)
  {
    const Index n0 = 1 + rng() % 9, n1 = 1 + rng() % (16 - n0);
    // Dense diagonal blocks: ILU(0) on a full pattern is an exact LU, so sub-solves are exact.
    Dense D = oracle::to_dense(oracle::random_diag_dominant(n0 + n1, 1.0, rng));
    D.topRightCorner(n0, n1) = to_dense(oracle::random_sparse(n0, n1, 0.5, rng));
    D.bottomLeftCorner(n1, n0) = to_dense(oracle::random_sparse(n1, n0, 0.5, rng));
    D(0, n0) = 0.7;  // coupling is never empty
    D(n0, 0) = -0.4;
    const auto A = split2(D, n0);
    const Dense A00 = D.topLeftCorner(n0, n0), A01 = D.topRightCorner(n0, n1);
    const Dense A10 = D.bottomLeftCorner(n1, n0), A11 = D.bottomRightCorner(n1, n1);
    const auto bv = oracle::random_vector(n0 + n1, rng);
    const Dense b = oracle::to_vec(bv);
    const Dense b0 = b.topRows(n0), b1 = b.bottomRows(n1);

    const double omegas[] = {0.5, 1.0, 1.3};
    const double omega = omegas[t % 3];
    const int sweeps = 1 + static_cast<int>(t % 3);
    auto spec = SmootherSpec::block_gauss_seidel(2, omega, static_cast<Index>(sweeps));
    SubSolve s0, s1;
    switch (t % 3)
    {
      case 0:  // exact ILU(0)
        spec.sub_solvers.assign(2, SmootherSpec::point(SmootherKind::Ilu0));
        s0 = [inv = Dense(A00.inverse())](const Dense &r) { return Dense(inv * r); };
        s1 = [inv = Dense(A11.inverse())](const Dense &r) { return Dense(inv * r); };
        break;
      case 1:  // one Gauss-Seidel sweep and two damped Jacobi sweeps
      {
        spec.sub_solvers = {SmootherSpec::point(SmootherKind::GaussSeidel),
                            SmootherSpec::point(SmootherKind::Jacobi, 0.7, 2)};
        s0 = splitting_solve(A00, Dense(A00.triangularView<Eigen::Lower>()), 1);
        s1 = splitting_solve(A11, Dense(Dense(A11.diagonal().asDiagonal()) / 0.7), 2);
        break;
      }
      default:  // Schwarz ILU(0) with a single domain, two sweeps
      {
        spec.sub_solvers.assign(2, SmootherSpec::point(SmootherKind::SchwarzIlu0, 1.0, 2));
        s0 = splitting_solve(A00, A00, 2);
        s1 = splitting_solve(A11, A11, 2);
        break;
      }
    }
    const auto x = block_gs_sweep(A, split_vector(bv, A.row_sizes()), spec);
    const auto [e0, e1] = algorithm1(A00, A01, A10, A11, b0, b1, s0, s1, omega, sweeps, false);
    Dense expected(n0 + n1, 1);
    expected << e0, e1;
    worst = std::max(worst, oracle::max_abs_diff(Dense(oracle::to_vec(concatenate(x))), expected));
    const auto [j0, j1] = algorithm1(A00, A01, A10, A11, b0, b1, s0, s1, omega, sweeps, true);
    Dense jac(n0 + n1, 1);
    jac << j0, j1;
    min_gap = std::min(min_gap, oracle::max_abs_diff(jac, expected));
  }
  c.check(worst <= 1e-12, "block GS mismatch " + std::to_string(worst));
  c.check(min_gap > 1e-8, "block-Jacobi oracle indistinguishable");
  std::ostringstream note;
  note << "200 systems <= 16x16, max diff " << worst << ", min block-Jacobi gap " << min_gap;
  c.note(note.str());
  return c;
}

NodeGraph random_graph(Index n, std::mt19937_64 &rng)
{
  NodeGraph g{n, std::vector<std::vector<Index>>(n)};
  const double p = std::uniform_real_distribution<double>(0.0, 6.0)(rng) / static_cast<double>(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Index i = 0; i < n; ++i)
  {
    for (Index j = i + 1; j < n; ++j)
    {
      if (u(rng) < p)
      {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

Criterion ac3()
{
  Criterion c;
  std::mt19937_64 rng(303);
  for (int t = 0; t < 500; ++t)
  {
    const Index n = 1 + rng() % 200;
    const auto g = random_graph(n, rng);
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    if (t % 2 == 1)
    {
      std::shuffle(order.begin(), order.end(), rng);
    }
    const auto a = aggregate_greedy(g, 1 + rng() % 8, order);
    c.check(oracle::is_partition(a), "graph " + std::to_string(t) + " is not partitioned");
    c.check(clone_aggregation(a, n) == a, "clone differs from its source");
  }
  // Co-located blocks with different DoF counts per node keep their ratio on every level.
  Index levels_checked = 0;
  for (Index n : {6, 10, 16})
  {
    SetupParams p;
    p.clone_aggregates = true;
    p.coarse_size = 30;
    p.smoother = SmootherSpec::block_gauss_seidel(2);
    p.dofs_per_node = {2, 1};
    const auto saddle = saddle2d(n, 1.0, {1.0, 0.5}, 0.05);
    const auto hs = setup_block_hierarchy(saddle, p);
    p.dofs_per_node = {3, 3};
    const auto coupled = coupled_mhd_like(n, 1.0, {1.0, 0.5}, 0.05, 1.0);
    const auto hc = setup_block_hierarchy(coupled.A, p);
    c.check(hs.n_levels() >= 2 && hc.n_levels() >= 2, "hierarchy did not coarsen");
    for (const auto *h : {&hs, &hc})
    {
      const auto &s0 = h->levels()[0].A.row_sizes();
      for (const auto &L : h->levels())
      {
        const auto &s = L.A.row_sizes();
        c.check(s[0] * s0[1] == s[1] * s0[0], "DoF ratio changed on level " + std::to_string(L.index));
        ++levels_checked;
      }
    }
  }
  c.note("500 random graphs, " + std::to_string(levels_checked) + " cloned levels checked");
  return c;
}

Index solve_iterations(const CsrMatrix &A, const Hierarchy *h, Index max_iter, bool *converged)
{
  const auto prob = manufactured_rhs(A, 1);
  GmresParams params;
  params.max_iter = max_iter;
  const LinearOperator M = [h](std::span<const double> r, std::span<double> z)
  { h->apply_preconditioner(r, z); };
  const auto res = gmres(make_operator(A), h ? &M : nullptr, prob.b, params);
  *converged = res.stats.converged && res.stats.final_relative_residual() <= 1e-8;
  return res.stats.iterations;
}

Criterion ac4()
{
  Criterion c;
  std::vector<Index> its;
  for (Index n : {32, 64, 128})
  {
    SetupParams p;
    p.transfer = TransferKind::Smoothed;
    p.target_size = 5;
    p.smoother = SmootherSpec::point(SmootherKind::GaussSeidel);
    const auto A = poisson2d(n);
    const auto h = setup_scalar_hierarchy(A, p);
    bool conv = false;
    its.push_back(solve_iterations(A, &h, 1000, &conv));
    c.check(conv && its.back() <= 30, "n=" + std::to_string(n) + " took " + std::to_string(its.back()));
  }
  const double ratio = static_cast<double>(its[2]) / static_cast<double>(its[0]);
  c.check(ratio <= 1.5, "iteration ratio " + std::to_string(ratio));
  std::ostringstream note;
  note << "n_L = " << its[0] << "/" << its[1] << "/" << its[2] << ", ratio " << ratio;
  c.note(note.str());
  return c;
}

SetupParams coupled_setup(bool clone)
{
  SetupParams p;
  p.clone_aggregates = clone;
  p.dofs_per_node = {3, 3};
  p.smoother = SmootherSpec::block_gauss_seidel(2);
  p.smoother.sub_solvers.assign(2, SmootherSpec::point(SmootherKind::Ilu0));
  return p;
}

Criterion ac5()
{
  Criterion c;
  const auto sys = coupled_mhd_like(16, 1.0, {1.0, 0.5}, 0.05, 1.0);
  const auto merged = merge_blocks(sys.A);
  const auto h = setup_block_hierarchy(sys.A, coupled_setup(true));
  bool conv = false;
  const auto mono = solve_iterations(merged, &h, 100, &conv);
  c.check(conv && mono <= 100, "monolithic AMG took " + std::to_string(mono));
  bool plain_conv = true;
  solve_iterations(merged, nullptr, 100, &plain_conv);
  c.check(!plain_conv, "unpreconditioned GMRES(50) converged within 100 iterations");
  BlockMatrix decoupled = sys.A;
  decoupled.clear(0, 1);
  decoupled.clear(1, 0);
  const auto hd = setup_block_hierarchy(decoupled, coupled_setup(true));
  bool diag_conv = false;
  const auto diag = solve_iterations(merged, &hd, 1000, &diag_conv);
  std::ostringstream note;
  note << "monolithic n_L = " << mono << ", unpreconditioned not converged in 100, block_diagonal n_L = "
       << diag << (diag_conv ? "" : " (not converged)");
  c.note(note.str());
  return c;
}

Criterion ac6()
{
  Criterion c;
  const Index n = 8;
  const auto sys = coupled_mixed_resolution(n, 1.0, {1.0, 0.5}, 0.05, 1.0);
  const auto h = setup_block_hierarchy(sys.A, coupled_setup(false));
  c.check(h.n_levels() >= 2, "no coarse level");
  const auto &L0 = h.levels()[0];
  c.check(L0.P.block(0, 0)->n_rows() == 3 * (2 * n - 1) * (2 * n - 1) &&
              L0.P.block(1, 1)->n_rows() == 3 * n * n,
          "transfer shapes do not match the two grids");
  c.check(L0.aggregates[0].n_nodes != L0.aggregates[1].n_nodes, "blocks share one aggregation");
  bool conv = false;
  const auto its = solve_iterations(merge_blocks(sys.A), &h, 150, &conv);
  c.check(conv && its <= 150, "mixed-resolution solve took " + std::to_string(its));
  std::string diagnostic;
  try
  {
    setup_block_hierarchy(sys.A, coupled_setup(true));
  }
  catch (const Error &e)
  {
    if (e.kind() == ErrorKind::NotCoLocated)
    {
      diagnostic = e.what();
    }
  }
  c.check(!diagnostic.empty(), "clone_aggregates was not rejected");
  c.note("n_L = " + std::to_string(its) + ", " + std::to_string(h.n_levels()) +
         " levels, clone rejected: " + diagnostic);
  return c;
}

template <class Map>
double superposition_error(Map map, Index n_b, Index n_x, std::mt19937_64 &rng)
{
  const auto b1 = oracle::random_vector(n_b, rng), b2 = oracle::random_vector(n_b, rng);
  const auto x1 = oracle::random_vector(n_x, rng), x2 = oracle::random_vector(n_x, rng);
  const double alpha = -1.7;
  auto scaled = [](DenseVector v, double a)
  {
    for (auto &e : v)
    {
      e *= a;
    }
    return v;
  };
  auto sum = [](DenseVector a, const DenseVector &b)
  {
    axpy(1.0, b, a);
    return a;
  };
  const auto y1 = map(b1, x1), y2 = map(b2, x2);
  const double hom = oracle::max_abs_diff(map(scaled(b1, alpha), scaled(x1, alpha)), scaled(y1, alpha));
  const double add = oracle::max_abs_diff(map(sum(b1, b2), sum(x1, x2)), sum(y1, y2));
  return std::max(hom, add);
}

Criterion ac7()
{
  Criterion c;
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t)
  {
    const Index n = 6 + rng() % 27;
    const auto A = oracle::from_dense(random_spd(n, 0.2, rng));
    for (const auto kind : {SmootherKind::Jacobi, SmootherKind::GaussSeidel, SmootherKind::Ilu0,
                            SmootherKind::SchwarzIlu0})
    {
      auto spec = SmootherSpec::point(kind, 0.9, 2);
      spec.schwarz_domains = 3;
      worst = std::max(worst, superposition_error([&](const DenseVector &b, const DenseVector &x)
                                                  { return smoother_as_iteration(A, b, x, spec); },
                                                  n, n, rng));
    }
    const Index n0 = n / 2 + 1;
    const auto B = split2(random_spd(n, 0.2, rng), n0);
    auto bgs = SmootherSpec::block_gauss_seidel(2, 0.8, 2);
    bgs.sub_solvers[1] = SmootherSpec::point(SmootherKind::GaussSeidel);
    worst = std::max(worst, superposition_error(
                                [&](const DenseVector &b, const DenseVector &x)
                                {
                                  return concatenate(smoother_as_iteration(
                                      B, split_vector(b, B.row_sizes()), split_vector(x, B.col_sizes()), bgs));
                                },
                                n, n, rng));
    SetupParams p;
    p.coarse_size = 4;
    p.target_size = 2;
    p.dofs_per_node = {1, 1};
    p.smoother = bgs;
    const auto h = setup_block_hierarchy(B, p);
    c.check(h.n_levels() >= 2, "V-cycle test hierarchy has one level");
    worst = std::max(worst, superposition_error(
                                [&](const DenseVector &b, const DenseVector &x)
                                {
                                  return concatenate(h.vcycle(split_vector(b, B.row_sizes()),
                                                              split_vector(x, B.col_sizes())));
                                },
                                n, n, rng));
  }
  c.check(worst <= 1e-12, "superposition error " + std::to_string(worst));

  SetupParams p;
  p.coarse_size = 4;
  p.target_size = 2;
  p.max_levels = 2;
  const auto h = setup_scalar_hierarchy(oracle::from_dense(oracle::laplace1d(8)), p);
  Dense E(8, 8);
  const BlockVector zero(std::vector<Index>{8});
  for (Index j = 0; j < 8; ++j)
  {
    BlockVector e(std::vector<Index>{8});
    e[0][j] = 1.0;
    E.col(static_cast<Eigen::Index>(j)) = oracle::to_vec(h.vcycle(zero, e)[0]);
  }
  const double rho = E.eigenvalues().cwiseAbs().maxCoeff();
  c.check(h.n_levels() == 2 && rho < 1.0, "two-level spectral radius " + std::to_string(rho));
  std::ostringstream note;
  note << "max superposition error " << worst << ", two-level rho = " << rho;
  c.note(note.str());
  return c;
}

Criterion ac8()
{
  Criterion c;
  std::mt19937_64 rng(808);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t)
  {
    const Index n = 2 + rng() % 30;
    Dense D = Dense::Zero(n, n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Index i = 0; i < n; ++i)
    {
      D(i, i) = 3.0 + u(rng);
      if (i > 0)
      {
        D(i, i - 1) = u(rng);
        D(i - 1, i) = u(rng);
      }
    }
    const auto f = ilu0_factor(oracle::from_dense(D));
    Dense L = Dense::Identity(n, n), U = D;
    for (Index k = 0; k < n; ++k)
    {
      for (Index i = k + 1; i < n; ++i)
      {
        L(i, k) = U(i, k) / U(k, k);
        U.row(i) -= L(i, k) * U.row(k);
      }
    }
    worst = std::max({worst, oracle::max_abs_diff(Dense::Identity(n, n) + to_dense(f.L), L),
                      oracle::max_abs_diff(to_dense(f.U), U)});
  }
  c.check(worst <= 1e-12, "tridiagonal ILU(0) vs dense LU " + std::to_string(worst));

  std::vector<CsrMatrix> tested{poisson2d(4), poisson2d(9), convdiff2d(7, 0.05, {1.0, -0.3}),
                                merge_blocks(saddle2d(4, 1.0, {1.0, 0.5}, 0.05),
                                             DofMap{16, {2, 1}, DofLayout::Interleaved})};
  for (int t = 0; t < 30; ++t)
  {
    tested.push_back(oracle::random_diag_dominant(5 + rng() % 40, 0.15, rng));
  }
  for (const auto &A : tested)
  {
    const auto f = ilu0_factor(A);
    bool contained = true;
    for (const auto *M : {&f.L, &f.U})
    {
      for (Index i = 0; i < M->n_rows(); ++i)
      {
        for (Index j : M->row(i).cols)
        {
          contained = contained && A.contains(i, j);
        }
      }
    }
    c.check(contained, "ILU(0) factor outside the pattern of A");
  }

  const CsrMatrix zero_pivots[] = {
      CsrMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}),
      CsrMatrix::from_triplets(3, 3, {{0, 0, 2}, {0, 1, 4}, {1, 0, 1}, {1, 1, 2}, {2, 2, 1}}),
      CsrMatrix::from_triplets(1, 1, {{0, 0, 0.0}})};
  for (const auto &A : zero_pivots)
  {
    bool raised = false;
    try
    {
      ilu0_factor(A);
    }
    catch (const Error &e)
    {
      raised = e.kind() == ErrorKind::ZeroPivot;
    }
    c.check(raised, "zero pivot not reported");
  }
  std::ostringstream note;
  note << "50 tridiagonal factorizations (max diff " << worst << "), " << tested.size()
       << " pattern checks, 3 zero-pivot inputs";
  c.note(note.str());
  return c;
}

std::string read_file(const fs::path &p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Criterion ac9()
{
  Criterion c;
  const fs::path dir = fs::temp_directory_path() / "blockamg_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "problem.kind = coupled_mhd_like\nproblem.n = 8\nproblem.gamma = 1\n"
           "mg.clone_aggregates = true\nsolver.tol = 1e-8\n";
  }
  std::string rows[2];
  for (int run = 0; run < 2; ++run)
  {
    const auto tag = std::to_string(run);
    const std::string cmd = std::string("\"") + BLOCKAMG_CLI_PATH + "\" solve --config \"" +
                            (dir / "run.cfg").string() + "\" --set output.csv=" +
                            (dir / ("runs" + tag + ".csv")).string() +
                            " --set output.solution=" + (dir / ("x" + tag + ".mtx")).string() +
                            " > " + (dir / ("stdout" + tag)).string();
    c.check(std::system(cmd.c_str()) == 0, "CLI run " + tag + " failed");
    std::ifstream csv(dir / ("runs" + tag + ".csv"));
    std::string header;
    std::getline(csv, header);
    std::getline(csv, rows[run]);
    c.check(header == "kind,n,gamma,preconditioner,levels,operator_complexity,n_L,t_Se,t_So,t_Sigma,converged",
            "CSV header '" + header + "'");
  }
  auto n_l = [](const std::string &row)
  {
    std::istringstream ss(row);
    std::string field;
    for (int i = 0; i <= 6; ++i)
    {
      std::getline(ss, field, ',');
    }
    return field;
  };
  c.check(!rows[0].empty() && n_l(rows[0]) == n_l(rows[1]), "n_L differs between runs");
  const auto x0 = read_file(dir / "x0.mtx"), x1 = read_file(dir / "x1.mtx");
  c.check(!x0.empty() && x0 == x1, "solution files differ");
  c.note("n_L = " + n_l(rows[0]) + " both runs, solution files identical (" + std::to_string(x0.size()) +
         " bytes)");
  fs::remove_all(dir);
  return c;
}

}  // namespace

int main()
{
  const std::pair<const char *, std::function<Criterion()>> criteria[] = {
      {"AC1 Galerkin coarse operators", ac1},
      {"AC2 block Gauss-Seidel fidelity", ac2},
      {"AC3 aggregation partitions and cloning", ac3},
      {"AC4 mesh-robust Poisson convergence", ac4},
      {"AC5 monolithic benefit on coupled system", ac5},
      {"AC6 mixed-resolution blocks", ac6},
      {"AC7 smoother and V-cycle linearity", ac7},
      {"AC8 ILU(0) correctness", ac8},
      {"AC9 CLI reproducibility", ac9},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria)
  {
    Criterion c;
    try
    {
      c = run();
    }
    catch (const std::exception &e)
    {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << name << ": " << c.summary() << std::endl;
    failures += c.ok() ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
