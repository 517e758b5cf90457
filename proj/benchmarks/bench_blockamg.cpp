// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <blockamg/hierarchy.hpp>
#include <blockamg/krylov.hpp>
#include <blockamg/problems.hpp>
#include <blockamg/smoothers.hpp>
#include <blockamg/transfer.hpp>

namespace
{

using namespace blockamg;

void BM_Spmv(benchmark::State &state)
{
  const auto A = poisson2d(static_cast<Index>(state.range(0)));
  const DenseVector x(A.n_cols(), 1.0);
  DenseVector y(A.n_rows());
  for (auto _ : state)
  {
    spmv(A, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(A.nnz()));
}
BENCHMARK(BM_Spmv)->Arg(64)->Arg(256);

void BM_TripleProduct(benchmark::State &state)
{
  const auto A = poisson2d(static_cast<Index>(state.range(0)));
  const auto agg = aggregate_greedy(amalgamate(A, 1), 3);
  const auto P = tentative_prolongator(agg, 1);
  const auto R = transpose(P);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(triple_product_rap(R, A, P));
  }
}
BENCHMARK(BM_TripleProduct)->Arg(64)->Arg(256);

void BM_Ilu0Factor(benchmark::State &state)
{
  const auto A = convdiff2d(static_cast<Index>(state.range(0)), 0.1, {1.0, 0.5});
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(ilu0_factor(A));
  }
}
BENCHMARK(BM_Ilu0Factor)->Arg(64)->Arg(256);

SetupParams coupled_params()
{
  SetupParams p;
  p.clone_aggregates = true;
  p.dofs_per_node = {3, 3};
  // Undamped block Gauss-Seidel amplifies smooth coupled modes at n = 32; 0.5 keeps the
  // solve benchmark convergent at every size.
  p.smoother = SmootherSpec::block_gauss_seidel(2, 0.5);
  return p;
}

void BM_ScalarSetup(benchmark::State &state)
{
  const auto A = poisson2d(static_cast<Index>(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(setup_scalar_hierarchy(A, SetupParams{}));
  }
}
BENCHMARK(BM_ScalarSetup)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BlockSetup(benchmark::State &state)
{
  const auto sys = coupled_mhd_like(static_cast<Index>(state.range(0)), 1.0, {1.0, 0.5}, 0.05, 1.0);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(setup_block_hierarchy(sys.A, coupled_params()));
  }
}
BENCHMARK(BM_BlockSetup)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_BlockVcycle(benchmark::State &state)
{
  const auto sys = coupled_mhd_like(static_cast<Index>(state.range(0)), 1.0, {1.0, 0.5}, 0.05, 1.0);
  const auto h = setup_block_hierarchy(sys.A, coupled_params());
  const DenseVector r(sys.A.total_rows(), 1.0);
  DenseVector z(r.size());
  for (auto _ : state)
  {
    h.apply_preconditioner(r, z);
    benchmark::DoNotOptimize(z.data());
  }
}
BENCHMARK(BM_BlockVcycle)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CoupledSolve(benchmark::State &state)
{
  const auto sys = coupled_mhd_like(static_cast<Index>(state.range(0)), 1.0, {1.0, 0.5}, 0.05, 1.0);
  const auto A = merge_blocks(sys.A);
  const auto rhs = manufactured_rhs(A, 1);
  const auto h = setup_block_hierarchy(sys.A, coupled_params());
  const LinearOperator M = [&h](std::span<const double> r, std::span<double> z)
  { h.apply_preconditioner(r, z); };
  for (auto _ : state)
  {
    const auto res = gmres(make_operator(A), &M, rhs.b, GmresParams{});
    state.counters["iterations"] = static_cast<double>(res.stats.iterations);
  }
}
BENCHMARK(BM_CoupledSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
