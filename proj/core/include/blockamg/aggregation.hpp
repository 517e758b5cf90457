// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_AGGREGATION_HPP
#define BLOCKAMG_AGGREGATION_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "blockamg/sparse.hpp"

namespace blockamg
{

// Undirected node graph with sorted adjacency lists. Self loops are excluded.
struct NodeGraph
{
  Index n_nodes = 0;
  std::vector<std::vector<Index>> adjacency;

  Index n_edges() const;
};

//
// Collapse a DoF-level matrix to its node graph. Nodes u != v are adjacent when some DoF of
// u couples to some DoF of v. With drop_tol == 0 every stored entry counts (the graph is the
// node-collapsed sparsity pattern); otherwise an entry counts only when
// |a_ij| > drop_tol * sqrt(|a_ii| |a_jj|). The result is symmetrized by union.
//
NodeGraph amalgamate(const CsrMatrix &A, Index dofs_per_node,
                     DofLayout layout = DofLayout::Interleaved, double drop_tol = 0.0);

// Partition of nodes into aggregates. node_to_aggregate[v] is in [0, n_aggregates) for every
// node and root_nodes[a] is the seed node of aggregate a.
struct Aggregation
{
  Index n_nodes = 0;
  Index n_aggregates = 0;
  std::vector<Index> node_to_aggregate;
  std::vector<Index> root_nodes;

  std::vector<std::vector<Index>> members() const;
  bool operator==(const Aggregation &) const = default;
};

//
// Greedy aggregation in three phases:
//  1. Visit nodes in seed_order (natural order when empty). An unaggregated node with at
//     least one unaggregated neighbor becomes a root and grows breadth-first over
//     unaggregated nodes, lowest index first, until the aggregate holds target_size nodes.
//  2. Each remaining node joins the adjacent aggregate with the lowest root index.
//  3. Nodes with no neighbors become singleton aggregates.
// Deterministic; every phase-1 aggregate is connected in g.
//
Aggregation aggregate_greedy(const NodeGraph &g, Index target_size = 3,
                             std::span<const Index> seed_order = {});

// Reuse src for a co-located block with target_nodes nodes. Throws NotCoLocated when the
// node counts differ.
Aggregation clone_aggregation(const Aggregation &src, Index target_nodes);
inline Aggregation clone_aggregation(const Aggregation &src)
{
  return clone_aggregation(src, src.n_nodes);
}

// Throws InvalidArgument describing the first violated partition condition.
void validate(const Aggregation &agg);

// Text dump, one "node_id aggregate_id" line per node.
void write_aggregation(std::ostream &out, const Aggregation &agg);
Aggregation read_aggregation(std::istream &in);

}  // namespace blockamg

#endif  // BLOCKAMG_AGGREGATION_HPP
