// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/problems.hpp"

#include <cmath>
#include <random>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

namespace
{

struct Stencil
{
  double center;
  double west, east, south, north;
};

CsrMatrix five_point(Index n, const Stencil &s)
{
  std::vector<Triplet> t;
  t.reserve(5 * n * n);
  for (Index j = 0; j < n; ++j)
  {
    for (Index i = 0; i < n; ++i)
    {
      const Index k = j * n + i;
      if (j > 0)
      {
        t.push_back({k, k - n, s.south});
      }
      if (i > 0)
      {
        t.push_back({k, k - 1, s.west});
      }
      t.push_back({k, k, s.center});
      if (i + 1 < n)
      {
        t.push_back({k, k + 1, s.east});
      }
      if (j + 1 < n)
      {
        t.push_back({k, k + n, s.north});
      }
    }
  }
  return CsrMatrix::from_triplets(n * n, n * n, std::move(t));
}

// Scalar n^2 operator expanded to `comps` interleaved components, one copy per component.
CsrMatrix interleave_components(const CsrMatrix &A, Index comps)
{
  std::vector<Triplet> t;
  t.reserve(A.nnz() * comps);
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto r = A.row(i);
    for (Index c = 0; c < comps; ++c)
    {
      for (Index k = 0; k < r.cols.size(); ++k)
      {
        t.push_back({i * comps + c, r.cols[k] * comps + c, r.values[k]});
      }
    }
  }
  return CsrMatrix::from_triplets(A.n_rows() * comps, A.n_cols() * comps, std::move(t));
}

// Embeds a (2 comps per node) x (comps per node) matrix into the 3-per-node group layout.
CsrMatrix embed_vector_rows(const CsrMatrix &A, Index row_nodes, Index col_nodes,
                            Index col_comps_src)
{
  std::vector<Triplet> t;
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const Index node = i / 2, comp = i % 2;
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      const Index cn = r.cols[k] / col_comps_src, cc = r.cols[k] % col_comps_src;
      t.push_back({node * 3 + comp, cn * 3 + cc, r.values[k]});
    }
  }
  return CsrMatrix::from_triplets(row_nodes * 3, col_nodes * 3, std::move(t));
}

// Velocity-pressure group merged node-major: (u_x, u_y, p) per node.
CsrMatrix saddle_group(Index n, double epsilon, Wind wind, double tau)
{
  const auto S = saddle2d(n, epsilon, wind, tau);
  return merge_blocks(S, DofMap{n * n, {2, 1}, DofLayout::Interleaved});
}

// Bilinear weights from an n x n grid to the (2n-1) x (2n-1) grid sharing its even nodes.
CsrMatrix bilinear_weights(Index n)
{
  const Index m = 2 * n - 1;
  const auto weights_1d = [](Index i)
  {
    std::vector<std::pair<Index, double>> w;
    if (i % 2 == 0)
    {
      w.emplace_back(i / 2, 1.0);
    }
    else
    {
      w.emplace_back((i - 1) / 2, 0.5);
      w.emplace_back((i + 1) / 2, 0.5);
    }
    return w;
  };
  std::vector<Triplet> t;
  for (Index j = 0; j < m; ++j)
  {
    for (Index i = 0; i < m; ++i)
    {
      for (const auto &[cj, wj] : weights_1d(j))
      {
        for (const auto &[ci, wi] : weights_1d(i))
        {
          t.push_back({j * m + i, cj * n + ci, wi * wj});
        }
      }
    }
  }
  return CsrMatrix::from_triplets(m * m, n * n, std::move(t));
}

void require_grid(Index n, Index min_n)
{
  if (n < min_n)
  {
    throw Error(ErrorKind::InvalidArgument,
                "grid parameter n = " + std::to_string(n) + " below minimum " +
                    std::to_string(min_n));
  }
}

}  // namespace

CsrMatrix poisson2d(Index n)
{
  require_grid(n, 1);
  return five_point(n, {4.0, -1.0, -1.0, -1.0, -1.0});
}

CsrMatrix convdiff2d(Index n, double epsilon, Wind wind)
{
  require_grid(n, 1);
  if (!(epsilon > 0.0))
  {
    throw Error(ErrorKind::InvalidArgument, "diffusion coefficient must be positive");
  }
  const double h = 1.0 / static_cast<double>(n + 1);
  const double cx = std::abs(wind.x) * h, cy = std::abs(wind.y) * h;
  Stencil s{4.0 * epsilon + cx + cy, -epsilon, -epsilon, -epsilon, -epsilon};
  (wind.x > 0.0 ? s.west : s.east) -= cx;
  (wind.y > 0.0 ? s.south : s.north) -= cy;
  return five_point(n, s);
}

CsrMatrix gradient2d(Index n)
{
  require_grid(n, 1);
  std::vector<Triplet> t;
  for (Index j = 0; j < n; ++j)
  {
    for (Index i = 0; i < n; ++i)
    {
      const Index k = j * n + i;
      if (i > 0)
      {
        t.push_back({2 * k, k - 1, -0.5});
      }
      if (i + 1 < n)
      {
        t.push_back({2 * k, k + 1, 0.5});
      }
      if (j > 0)
      {
        t.push_back({2 * k + 1, k - n, -0.5});
      }
      if (j + 1 < n)
      {
        t.push_back({2 * k + 1, k + n, 0.5});
      }
    }
  }
  return CsrMatrix::from_triplets(2 * n * n, n * n, std::move(t));
}

BlockMatrix saddle2d(Index n, double epsilon, Wind wind, double tau)
{
  if (tau < 0.0)
  {
    throw Error(ErrorKind::InvalidArgument, "stabilization scale must be non-negative");
  }
  const Index nodes = n * n;
  BlockMatrix S({2 * nodes, nodes}, {2 * nodes, nodes});
  S.set(0, 0, interleave_components(convdiff2d(n, epsilon, wind), 2));
  auto G = gradient2d(n);
  S.set(1, 0, scale(transpose(G), -1.0));
  S.set(0, 1, std::move(G));
  S.set(1, 1, scale(poisson2d(n), tau));
  return S;
}

BlockSystem coupled_mhd_like(Index n, double epsilon, Wind wind, double tau, double gamma,
                             CouplingKind coupling)
{
  if (gamma < 0.0)
  {
    throw Error(ErrorKind::InvalidArgument, "coupling strength must be non-negative");
  }
  const Index nodes = n * n;
  const Index size = 3 * nodes;
  BlockSystem sys{BlockMatrix({size, size}, {size, size}), {3, 3}};
  auto group = std::make_shared<const CsrMatrix>(saddle_group(n, epsilon, wind, tau));
  sys.A.set(0, 0, group);
  sys.A.set(1, 1, group);
  if (gamma == 0.0)
  {
    return sys;
  }
  CsrMatrix Z;
  if (coupling == CouplingKind::NodeLocal)
  {
    Z = scale(CsrMatrix::identity(2 * nodes), gamma);
  }
  else
  {
    // Backward difference in x on each vector component.
    std::vector<Triplet> t;
    for (Index j = 0; j < n; ++j)
    {
      for (Index i = 0; i < n; ++i)
      {
        const Index k = j * n + i;
        for (Index c = 0; c < 2; ++c)
        {
          t.push_back({2 * k + c, 2 * k + c, gamma});
          if (i > 0)
          {
            t.push_back({2 * k + c, 2 * (k - 1) + c, -gamma});
          }
        }
      }
    }
    Z = CsrMatrix::from_triplets(2 * nodes, 2 * nodes, std::move(t));
  }
  auto A01 = embed_vector_rows(Z, nodes, nodes, 2);
  sys.A.set(1, 0, scale(transpose(A01), -1.0));
  sys.A.set(0, 1, std::move(A01));
  return sys;
}

BlockSystem coupled_mixed_resolution(Index n, double epsilon, Wind wind, double tau,
                                     double gamma)
{
  require_grid(n, 2);
  if (gamma < 0.0)
  {
    throw Error(ErrorKind::InvalidArgument, "coupling strength must be non-negative");
  }
  const Index m = 2 * n - 1;
  const Index fine = 3 * m * m, coarse = 3 * n * n;
  BlockSystem sys{BlockMatrix({fine, coarse}, {fine, coarse}), {3, 3}};
  sys.A.set(0, 0, saddle_group(m, epsilon, wind, tau));
  sys.A.set(1, 1, saddle_group(n, epsilon, wind, tau));
  if (gamma == 0.0)
  {
    return sys;
  }
  const auto W = interleave_components(bilinear_weights(n), 2);
  auto A01 = embed_vector_rows(scale(W, gamma), m * m, n * n, 2);
  sys.A.set(1, 0, scale(transpose(A01), -1.0));
  sys.A.set(0, 1, std::move(A01));
  return sys;
}

ManufacturedProblem manufactured_rhs(const CsrMatrix &A, std::uint64_t seed)
{
  if (A.n_rows() != A.n_cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "manufactured_rhs needs a square operator");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ManufacturedProblem p;
  p.x_true.resize(A.n_cols());
  for (auto &v : p.x_true)
  {
    v = dist(rng);
  }
  const double nrm = norm2(p.x_true);
  if (nrm > 0.0)
  {
    for (auto &v : p.x_true)
    {
      v /= nrm;
    }
  }
  p.b = spmv(A, p.x_true);
  return p;
}

ManufacturedProblem manufactured_rhs(const BlockMatrix &A, std::uint64_t seed)
{
  return manufactured_rhs(merge_blocks(A), seed);
}

std::string_view to_string(ProblemKind kind)
{
  switch (kind)
  {
    case ProblemKind::Poisson2d:
      return "poisson2d";
    case ProblemKind::ConvDiff2d:
      return "convdiff2d";
    case ProblemKind::Saddle2d:
      return "saddle2d";
    case ProblemKind::CoupledMhdLike:
      return "coupled_mhd_like";
    case ProblemKind::CoupledMixedResolution:
      return "coupled_mixed_resolution";
  }
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name)
{
  for (auto k : {ProblemKind::Poisson2d, ProblemKind::ConvDiff2d, ProblemKind::Saddle2d,
                 ProblemKind::CoupledMhdLike, ProblemKind::CoupledMixedResolution})
  {
    if (to_string(k) == name)
    {
      return k;
    }
  }
  throw Error(ErrorKind::Config, "unknown problem kind '" + std::string(name) + "'");
}

void ProblemSpec::validate() const
{
  const Index min_n = kind == ProblemKind::CoupledMixedResolution ? 2 : 1;
  if (n < min_n)
  {
    throw Error(ErrorKind::Config, "problem.n must be at least " + std::to_string(min_n));
  }
  if (!(epsilon > 0.0))
  {
    throw Error(ErrorKind::Config, "problem.epsilon must be positive");
  }
  if (tau < 0.0)
  {
    throw Error(ErrorKind::Config, "problem.tau must be non-negative");
  }
  if (gamma < 0.0)
  {
    throw Error(ErrorKind::Config, "problem.gamma must be non-negative");
  }
}

BlockSystem generate(const ProblemSpec &spec)
{
  spec.validate();
  switch (spec.kind)
  {
    case ProblemKind::Poisson2d:
      return {as_block(poisson2d(spec.n)), {1}};
    case ProblemKind::ConvDiff2d:
      return {as_block(convdiff2d(spec.n, spec.epsilon, spec.velocity)), {1}};
    case ProblemKind::Saddle2d:
      return {saddle2d(spec.n, spec.epsilon, spec.velocity, spec.tau), {2, 1}};
    case ProblemKind::CoupledMhdLike:
      return coupled_mhd_like(spec.n, spec.epsilon, spec.velocity, spec.tau, spec.gamma,
                              spec.coupling);
    case ProblemKind::CoupledMixedResolution:
      return coupled_mixed_resolution(spec.n, spec.epsilon, spec.velocity, spec.tau, spec.gamma);
  }
  throw Error(ErrorKind::Config, "unhandled problem kind");
}

}  // namespace blockamg
