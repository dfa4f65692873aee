#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dafos/csr_graph.hpp"
#include "dafos/matrix.hpp"

namespace dafos {

enum class Split : std::uint8_t { train, val, test };

std::string split_name(Split s);
Split parse_split(const std::string& name);

// A graph plus everything needed to train on it. Immutable after
// construction; safe to share across concurrent readers.
struct DatasetBundle {
  CsrGraph graph;
  Matrix features;              // num_nodes x feat_dim
  std::vector<int> labels;      // class ids in [0, num_classes)
  std::vector<Split> splits;    // per-node tag

  int num_classes() const;
  std::vector<NodeId> split_ids(Split s) const;
  void validate() const;  // throws on shape mismatches
};

struct SbmGraph {
  CsrGraph graph;
  std::vector<int> blocks;  // block id per node
};

// Stochastic block model: each unordered pair sampled independently with
// the block-dependent probability. Undirected simple graph, deterministic
// per seed. Blocks are contiguous ranges of node ids, balanced to within
// one node.
SbmGraph gen_sbm(std::int64_t num_nodes, int num_blocks, double p_intra,
                 double p_inter, std::uint64_t seed);

// Preferential attachment (Barabasi-Albert): seed clique of m+1 nodes, each
// arrival attaches m edges to distinct existing nodes picked proportionally
// to degree. Connected and heavy-tailed; deterministic per seed.
CsrGraph gen_preferential_attachment(std::int64_t num_nodes, std::int64_t m,
                                     std::uint64_t seed);

struct PlantedFeatures {
  Matrix features;
  std::vector<int> labels;
};

// label = block id; feature row = unit centroid of its class plus i.i.d.
// Gaussian noise of std noise_sigma. Centroids are orthogonal unit basis
// vectors, which requires feat_dim >= num_blocks.
PlantedFeatures gen_planted_features(const CsrGraph& graph,
                                     const std::vector<int>& block_assignment,
                                     std::int64_t feat_dim, double noise_sigma,
                                     std::uint64_t seed);

// Graph-distance Voronoi partition from k seeded center nodes: block id =
// nearest center (ties to the lowest center index). Gives structurally
// coherent labels on generators that have no planted communities.
std::vector<int> voronoi_blocks(const CsrGraph& graph, int k,
                                std::uint64_t seed);

// Random disjoint train/val/test assignment by fractions; covers all nodes.
std::vector<Split> assign_splits(std::int64_t num_nodes, double train_frac,
                                 double val_frac, std::uint64_t seed);

// Dataset directory format: graph.edges ("u<TAB>v" per line with a
// "# nodes=<n> symmetrize=<0|1>" header), features.csv, labels.csv,
// splits.csv. load(save(b)) is structurally identical to b. Parse errors
// name the file and line number.
void save_dataset(const DatasetBundle& bundle,
                  const std::filesystem::path& dir);
DatasetBundle load_dataset(const std::filesystem::path& dir);

// Remaps arbitrary node ids to dense [0, n) in order of first appearance.
// Returns the dense edge list plus original ids indexed by new id.
struct RemappedEdges {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> original_ids;
};
RemappedEdges remap_ids(const std::vector<std::pair<NodeId, NodeId>>& edges);

}  // namespace dafos
