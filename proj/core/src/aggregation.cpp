// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

namespace
{

constexpr Index unaggregated = std::numeric_limits<Index>::max();

}  // namespace

Index NodeGraph::n_edges() const
{
  Index n = 0;
  for (const auto &adj : adjacency)
  {
    n += adj.size();
  }
  return n / 2;
}

NodeGraph amalgamate(const CsrMatrix &A, Index dofs_per_node, DofLayout layout,
                     double drop_tol)
{
  if (A.n_rows() != A.n_cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "amalgamate requires a square matrix");
  }
  if (dofs_per_node == 0 || A.n_rows() % dofs_per_node != 0)
  {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix size " + std::to_string(A.n_rows()) + " not divisible by " +
                    std::to_string(dofs_per_node) + " DoFs per node");
  }
  if (drop_tol < 0.0)
  {
    throw Error(ErrorKind::InvalidArgument, "negative drop tolerance");
  }
  const Index n_nodes = A.n_rows() / dofs_per_node;
  const auto node_of = [&](Index dof)
  { return layout == DofLayout::Interleaved ? dof / dofs_per_node : dof % n_nodes; };

  const auto diag = A.diagonal();
  NodeGraph g{n_nodes, std::vector<std::vector<Index>>(n_nodes)};
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto u = node_of(i);
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      const auto j = r.cols[k];
      const auto v = node_of(j);
      if (u == v)
      {
        continue;
      }
      if (drop_tol > 0.0 &&
          !(std::abs(r.values[k]) > drop_tol * std::sqrt(std::abs(diag[i] * diag[j]))))
      {
        continue;
      }
      g.adjacency[u].push_back(v);
      g.adjacency[v].push_back(u);
    }
  }
  for (auto &adj : g.adjacency)
  {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

std::vector<std::vector<Index>> Aggregation::members() const
{
  std::vector<std::vector<Index>> m(n_aggregates);
  for (Index v = 0; v < n_nodes; ++v)
  {
    m[node_to_aggregate[v]].push_back(v);
  }
  return m;
}

Aggregation aggregate_greedy(const NodeGraph &g, Index target_size,
                             std::span<const Index> seed_order)
{
  if (target_size == 0)
  {
    throw Error(ErrorKind::InvalidArgument, "aggregate target size must be at least 1");
  }
  if (!seed_order.empty() && seed_order.size() != g.n_nodes)
  {
    throw Error(ErrorKind::DimensionMismatch, "seed order length differs from node count");
  }
  Aggregation agg;
  agg.n_nodes = g.n_nodes;
  agg.node_to_aggregate.assign(g.n_nodes, unaggregated);
  auto &owner = agg.node_to_aggregate;

  const auto has_free_neighbor = [&](Index v)
  {
    return std::any_of(g.adjacency[v].begin(), g.adjacency[v].end(),
                       [&](Index w) { return owner[w] == unaggregated; });
  };

  // Phase 1: breadth-first growth from roots.
  std::deque<Index> frontier;
  for (Index k = 0; k < g.n_nodes; ++k)
  {
    const auto root = seed_order.empty() ? k : seed_order[k];
    if (owner[root] != unaggregated || !has_free_neighbor(root))
    {
      continue;
    }
    const auto id = agg.root_nodes.size();
    agg.root_nodes.push_back(root);
    owner[root] = id;
    Index size = 1;
    frontier.assign(1, root);
    while (!frontier.empty() && size < target_size)
    {
      const auto v = frontier.front();
      frontier.pop_front();
      for (const auto w : g.adjacency[v])
      {
        if (size == target_size)
        {
          break;
        }
        if (owner[w] == unaggregated)
        {
          owner[w] = id;
          frontier.push_back(w);
          ++size;
        }
      }
    }
  }

  // Phase 2: attach leftovers. Aggregate ids increase with root visit order, so the lowest
  // root index is found by comparing root node ids explicitly.
  const auto n_phase1 = agg.root_nodes.size();
  std::vector<Index> joined(g.n_nodes, unaggregated);
  for (Index v = 0; v < g.n_nodes; ++v)
  {
    if (owner[v] != unaggregated)
    {
      continue;
    }
    Index best = unaggregated;
    for (const auto w : g.adjacency[v])
    {
      const auto a = owner[w];
      if (a != unaggregated && a < n_phase1 &&
          (best == unaggregated || agg.root_nodes[a] < agg.root_nodes[best]))
      {
        best = a;
      }
    }
    joined[v] = best;
  }
  for (Index v = 0; v < g.n_nodes; ++v)
  {
    if (joined[v] != unaggregated)
    {
      owner[v] = joined[v];
    }
  }

  // Phase 3: isolated nodes.
  for (Index v = 0; v < g.n_nodes; ++v)
  {
    if (owner[v] == unaggregated)
    {
      owner[v] = agg.root_nodes.size();
      agg.root_nodes.push_back(v);
    }
  }
  agg.n_aggregates = agg.root_nodes.size();
  return agg;
}

Aggregation clone_aggregation(const Aggregation &src, Index target_nodes)
{
  if (target_nodes != src.n_nodes)
  {
    throw Error(ErrorKind::NotCoLocated,
                "cannot clone an aggregation of " + std::to_string(src.n_nodes) +
                    " nodes onto a block with " + std::to_string(target_nodes) +
                    " nodes; cloning requires co-located DoFs");
  }
  return src;
}

void validate(const Aggregation &agg)
{
  if (agg.node_to_aggregate.size() != agg.n_nodes || agg.root_nodes.size() != agg.n_aggregates)
  {
    throw Error(ErrorKind::InvalidArgument, "aggregation array lengths inconsistent");
  }
  std::vector<Index> count(agg.n_aggregates, 0);
  for (Index v = 0; v < agg.n_nodes; ++v)
  {
    const auto a = agg.node_to_aggregate[v];
    if (a >= agg.n_aggregates)
    {
      throw Error(ErrorKind::InvalidArgument, "node " + std::to_string(v) + " not aggregated");
    }
    ++count[a];
  }
  for (Index a = 0; a < agg.n_aggregates; ++a)
  {
    if (count[a] == 0)
    {
      throw Error(ErrorKind::InvalidArgument, "aggregate " + std::to_string(a) + " is empty");
    }
    const auto root = agg.root_nodes[a];
    if (root >= agg.n_nodes || agg.node_to_aggregate[root] != a)
    {
      throw Error(ErrorKind::InvalidArgument,
                  "root of aggregate " + std::to_string(a) + " lies outside it");
    }
  }
}

void write_aggregation(std::ostream &out, const Aggregation &agg)
{
  for (Index v = 0; v < agg.n_nodes; ++v)
  {
    out << v << ' ' << agg.node_to_aggregate[v] << '\n';
  }
}

Aggregation read_aggregation(std::istream &in)
{
  std::vector<Index> map;
  std::string line;
  while (std::getline(in, line))
  {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
    {
      continue;
    }
    Index v = 0, a = 0;
    if (!(std::istringstream(line) >> v >> a) || v != map.size())
    {
      throw Error(ErrorKind::Io, "malformed aggregation line: " + line);
    }
    map.push_back(a);
  }
  Aggregation agg;
  agg.n_nodes = map.size();
  agg.n_aggregates = map.empty() ? 0 : *std::max_element(map.begin(), map.end()) + 1;
  agg.root_nodes.assign(agg.n_aggregates, unaggregated);
  // Roots are not stored in the dump; the lowest member stands in.
  for (Index v = map.size(); v-- > 0;)
  {
    agg.root_nodes[map[v]] = v;
  }
  agg.node_to_aggregate = std::move(map);
  validate(agg);
  return agg;
}

}  // namespace blockamg
