#include "dafos/csr_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dafos {

bool CsrGraph::has_edge(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

CsrGraph build_csr(const std::vector<std::pair<NodeId, NodeId>>& edges,
                   std::int64_t num_nodes, bool symmetrize) {
  if (num_nodes < 0) throw std::invalid_argument("build_csr: negative num_nodes");

  std::vector<std::pair<NodeId, NodeId>> directed;
  directed.reserve(edges.size() * (symmetrize ? 2 : 1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes) {
      std::ostringstream msg;
      msg << "build_csr: edge (" << u << ", " << v << ") at index " << i
          << " out of range for num_nodes=" << num_nodes;
      throw std::invalid_argument(msg.str());
    }
    if (u == v) continue;  // input self-loops dropped
    directed.emplace_back(u, v);
    if (symmetrize) directed.emplace_back(v, u);
  }

  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  CsrGraph graph;
  graph.num_nodes = num_nodes;
  graph.offsets.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
  graph.targets.reserve(directed.size());
  for (const auto& [u, v] : directed) {
    graph.offsets[static_cast<std::size_t>(u) + 1]++;
    graph.targets.push_back(v);
  }
  for (std::size_t i = 1; i < graph.offsets.size(); ++i)
    graph.offsets[i] += graph.offsets[i - 1];
  return graph;
}

NodeScores node_scores(const CsrGraph& graph, ScoringFunction fn) {
  NodeScores result;
  result.scores.resize(static_cast<std::size_t>(graph.num_nodes));
  switch (fn) {
    case ScoringFunction::degree:
      for (NodeId v = 0; v < graph.num_nodes; ++v)
        result.scores[static_cast<std::size_t>(v)] =
            static_cast<double>(graph.degree(v));
      break;
  }
  return result;
}

}  // namespace dafos
