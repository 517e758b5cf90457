// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include <blockamg/error.hpp>
#include <blockamg/problems.hpp>
#include <blockamg/smoothers.hpp>

#include "oracle.hpp"

namespace blockamg
{
namespace
{

using oracle::Dense;
using oracle::to_dense;

TEST(Poisson, SinglePoint)
{
  EXPECT_EQ(to_dense(poisson2d(1)), Dense::Constant(1, 1, 4.0));
}

TEST(Poisson, TwoByTwo)
{
  const Dense D = to_dense(poisson2d(2));
  ASSERT_EQ(D.rows(), 4);
  for (int i = 0; i < 4; ++i)
  {
    EXPECT_EQ(D(i, i), 4.0);
    int off = 0;
    for (int j = 0; j < 4; ++j)
    {
      if (j != i && D(i, j) != 0.0)
      {
        EXPECT_EQ(D(i, j), -1.0);
        ++off;
      }
    }
    EXPECT_EQ(off, 2);
  }
}

TEST(Poisson, Symmetric)
{
  for (Index n : {1, 2, 3, 7, 16, 33, 64})
  {
    const auto A = poisson2d(n);
    EXPECT_EQ(transpose(A), A);
    EXPECT_EQ(A.nnz(), 5 * n * n - 4 * n);
  }
}

TEST(ConvDiff, PureDiffusionIsScaledPoisson)
{
  EXPECT_EQ(to_dense(convdiff2d(4, 0.3, {0.0, 0.0})), 0.3 * to_dense(poisson2d(4)));
}

TEST(ConvDiff, UpwindStencil)
{
  const Index n = 3;
  const double h = 1.0 / 4.0, eps = 0.5;
  const auto A = convdiff2d(n, eps, {1.0, 0.0});
  // Center node 4 = (1,1): west neighbor 3 is upwind for positive x-wind.
  EXPECT_DOUBLE_EQ(A.at(4, 4), 4.0 * eps + h);
  EXPECT_DOUBLE_EQ(A.at(4, 3), -eps - h);
  EXPECT_DOUBLE_EQ(A.at(4, 5), -eps);
  EXPECT_DOUBLE_EQ(A.at(4, 1), -eps);
  EXPECT_DOUBLE_EQ(A.at(4, 7), -eps);
  const auto B = convdiff2d(n, eps, {0.0, -2.0});
  EXPECT_DOUBLE_EQ(B.at(4, 4), 4.0 * eps + 2.0 * h);
  EXPECT_DOUBLE_EQ(B.at(4, 7), -eps - 2.0 * h);
  EXPECT_DOUBLE_EQ(B.at(4, 1), -eps);
}

TEST(ConvDiff, RowSumsNonNegative)
{
  const auto A = convdiff2d(9, 0.01, {1.0, -0.7});
  const DenseVector ones(A.n_cols(), 1.0);
  for (double s : spmv(A, ones))
  {
    EXPECT_GE(s, -1e-15);
  }
}

TEST(Saddle, DimensionsAndZeroStabilization)
{
  const Index n = 4;
  const auto A = saddle2d(n, 1.0, {1.0, 0.5}, 0.0);
  EXPECT_EQ(A.row_sizes(), (std::vector<Index>{2 * n * n, n * n}));
  ASSERT_TRUE(A.has(1, 1));
  EXPECT_EQ(oracle::nonzeros(*A.block(1, 1)), 0u);
  EXPECT_EQ(to_dense(*A.block(1, 0)), -to_dense(*A.block(0, 1)).transpose());
}

TEST(Saddle, StabilizedMergedFactorsWithIlu)
{
  const auto A = saddle2d(5, 1.0, {1.0, 0.5}, 0.05);
  const auto M = merge_blocks(A, DofMap{25, {2, 1}, DofLayout::Interleaved});
  for (double d : M.diagonal())
  {
    EXPECT_NE(d, 0.0);
  }
  EXPECT_NO_THROW(ilu0_factor(M));
}

TEST(Gradient, CenteredDifferences)
{
  const auto G = gradient2d(3);
  EXPECT_EQ(G.n_rows(), 18u);
  EXPECT_EQ(G.n_cols(), 9u);
  // x-component at center node 4 couples to east (5) and west (3).
  EXPECT_EQ(G.at(8, 5), 0.5);
  EXPECT_EQ(G.at(8, 3), -0.5);
  EXPECT_EQ(G.at(9, 7), 0.5);
  EXPECT_EQ(G.at(9, 1), -0.5);
}

TEST(CoupledMhdLike, DecoupledAndSizes)
{
  const Index n = 4;
  const auto off = coupled_mhd_like(n, 1.0, {1.0, 0.5}, 0.1, 0.0);
  EXPECT_FALSE(off.A.has(0, 1));
  EXPECT_FALSE(off.A.has(1, 0));
  const auto on = coupled_mhd_like(n, 1.0, {1.0, 0.5}, 0.1, 1.0);
  EXPECT_EQ(on.A.total_rows(), 6 * n * n);
  EXPECT_EQ(on.dofs_per_node, (std::vector<Index>{3, 3}));
  EXPECT_EQ(merge_blocks(on.A).n_rows(), 6 * n * n);
}

TEST(CoupledMhdLike, CouplingPatternsAreTransposed)
{
  for (const auto kind : {CouplingKind::NodeLocal, CouplingKind::Convective})
  {
    const auto sys = coupled_mhd_like(5, 1.0, {1.0, 0.5}, 0.1, 0.7, kind);
    const Dense A01 = to_dense(*sys.A.block(0, 1));
    const Dense A10 = to_dense(*sys.A.block(1, 0));
    EXPECT_EQ((A10.array() != 0.0).matrix(), (A01.transpose().array() != 0.0).matrix());
    EXPECT_EQ(A10, -A01.transpose());
    // Only vector components couple; the scalar (third) DoF of every node is untouched.
    for (Eigen::Index i = 2; i < A01.rows(); i += 3)
    {
      EXPECT_EQ(A01.row(i).cwiseAbs().sum(), 0.0);
      EXPECT_EQ(A01.col(i).cwiseAbs().sum(), 0.0);
    }
  }
}

TEST(MixedResolution, Sizes)
{
  const auto sys = coupled_mixed_resolution(2, 1.0, {1.0, 0.5}, 0.1, 1.0);
  EXPECT_EQ(sys.A.row_sizes(), (std::vector<Index>{27, 12}));
  EXPECT_EQ(sys.A.block(0, 1)->n_rows(), 27u);
  EXPECT_EQ(sys.A.block(0, 1)->n_cols(), 12u);
  const auto off = coupled_mixed_resolution(2, 1.0, {1.0, 0.5}, 0.1, 0.0);
  EXPECT_FALSE(off.A.has(0, 1));
  EXPECT_FALSE(off.A.has(1, 0));
  EXPECT_THROW(coupled_mixed_resolution(1, 1.0, {1.0, 0.5}, 0.1, 1.0), Error);
}

TEST(MixedResolution, InterpolationWeightsPartitionUnity)
{
  // Interior fine nodes far from the boundary receive weights summing to gamma per component.
  const auto sys = coupled_mixed_resolution(4, 1.0, {1.0, 0.5}, 0.1, 1.0);
  const Dense W = to_dense(*sys.A.block(0, 1));
  const Index m = 7;
  const Index fine = 3 * m + 3;  // grid node (3,3)
  EXPECT_NEAR(W.row(static_cast<Eigen::Index>(3 * fine)).sum(), 1.0, 1e-15);
  EXPECT_NEAR(W.row(static_cast<Eigen::Index>(3 * fine + 1)).sum(), 1.0, 1e-15);
}

TEST(Manufactured, ConsistentAndDeterministic)
{
  const auto A = poisson2d(6);
  const auto p = manufactured_rhs(A, 42);
  EXPECT_NEAR(norm2(p.x_true), 1.0, 1e-15);
  DenseVector r(A.n_rows());
  residual(A, p.x_true, p.b, r);
  EXPECT_LE(norm2(r), 1e-14);
  EXPECT_EQ(manufactured_rhs(A, 42).b, p.b);
  EXPECT_NE(manufactured_rhs(A, 43).b, p.b);
  const auto sys = coupled_mhd_like(3, 1.0, {1.0, 0.5}, 0.1, 1.0);
  EXPECT_EQ(manufactured_rhs(sys.A, 5).b, manufactured_rhs(merge_blocks(sys.A), 5).b);
}

TEST(Manufactured, SolutionAccuracyOnPoisson)
{
  const auto A = poisson2d(12);
  const auto p = manufactured_rhs(A, 1);
  const oracle::Vec x = to_dense(A).llt().solve(oracle::to_vec(p.b));
  EXPECT_LE((x - oracle::to_vec(p.x_true)).norm(), 1e-10);
}

TEST(ProblemSpec, ParseValidateGenerate)
{
  for (const auto k : {ProblemKind::Poisson2d, ProblemKind::ConvDiff2d, ProblemKind::Saddle2d,
                       ProblemKind::CoupledMhdLike, ProblemKind::CoupledMixedResolution})
  {
    EXPECT_EQ(parse_problem_kind(to_string(k)), k);
    ProblemSpec s;
    s.kind = k;
    s.n = 3;
    s.gamma = 1.0;
    const auto sys = generate(s);
    EXPECT_EQ(sys.dofs_per_node.size(), sys.A.n_block_rows());
  }
  EXPECT_THROW(parse_problem_kind("heat"), Error);
  ProblemSpec bad;
  bad.n = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = ProblemSpec{};
  bad.epsilon = -1.0;
  EXPECT_THROW(bad.validate(), Error);
}

}  // namespace
}  // namespace blockamg
