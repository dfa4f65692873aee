#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dafos {

using NodeId = std::int64_t;

// Immutable compressed-sparse-row adjacency. Neighbor lists are sorted
// ascending and duplicate-free; self-loops are dropped at construction
// (self-inclusion is the sampler's job). Safe to share across threads once
// built.
struct CsrGraph {
  std::int64_t num_nodes = 0;
  std::vector<std::int64_t> offsets;  // length num_nodes + 1
  std::vector<NodeId> targets;        // out-neighbors, concatenated

  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(targets.size());
  }

  std::int64_t degree(NodeId v) const {
    return offsets[static_cast<std::size_t>(v) + 1] -
           offsets[static_cast<std::size_t>(v)];
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    auto begin = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v)]);
    auto end = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v) + 1]);
    return {targets.data() + begin, end - begin};
  }

  bool has_edge(NodeId u, NodeId v) const;
};

struct NodeScores {
  std::vector<double> scores;  // length num_nodes, non-negative
};

// Builds a CSR graph from an edge list. Duplicates and self-loops are
// dropped; with symmetrize both (u,v) and (v,u) are stored. Throws
// std::invalid_argument naming the offending edge when an id is out of
// range.
CsrGraph build_csr(const std::vector<std::pair<NodeId, NodeId>>& edges,
                   std::int64_t num_nodes, bool symmetrize);

// Structural importance used for seed ordering: score = degree.
// Kept as a named hook so richer scoring functions can slot in later.
enum class ScoringFunction { degree };

NodeScores node_scores(const CsrGraph& graph,
                       ScoringFunction fn = ScoringFunction::degree);

}  // namespace dafos
