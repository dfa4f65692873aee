#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dafos/csr_graph.hpp"
#include "dafos/rng.hpp"

namespace dafos {

// fanouts[l-1] governs sampling for GNN layer l; layer 1 consumes raw
// features, the last layer emits logits.
struct FanoutSchedule {
  std::vector<std::int64_t> fanouts;

  std::int64_t depth() const {
    return static_cast<std::int64_t>(fanouts.size());
  }
  void validate() const;  // all entries >= 1
};

// Bipartite sampled subgraph for one layer. Every dst also appears in
// src_ids (self-inclusion); dst ids occupy the leading src positions in
// their given order. Edges are (src index, dst index) pairs grouped by dst.
struct Block {
  std::vector<NodeId> src_ids;
  std::vector<NodeId> dst_ids;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;

  std::int64_t num_src() const { return static_cast<std::int64_t>(src_ids.size()); }
  std::int64_t num_dst() const { return static_cast<std::int64_t>(dst_ids.size()); }
  // incident edge count per dst (self edge included)
  std::vector<std::int32_t> dst_edge_counts() const;
};

struct SeedOrderPolicy {
  enum class Mode { score_warmup, shuffle };
  Mode mode = Mode::score_warmup;
  std::int64_t warmup_epochs = 3;
};

// Uniform without-replacement sample of min(degree, fanout) neighbors per
// dst, plus one self edge. Throws on duplicate dst ids.
Block sample_block(const CsrGraph& graph, std::span<const NodeId> dst_ids,
                   std::int64_t fanout, Rng& rng);

// Full-neighborhood variant (fanout = infinity); deterministic, no RNG.
Block full_block(const CsrGraph& graph, std::span<const NodeId> dst_ids);

// Layered expansion, built outermost-first: dst of the last block = seeds,
// dst of block l = src of block l+1. The returned list is ordered layer
// 1..L so a forward pass consumes it front-to-back. Layer l draws from an
// RNG stream derived as (stream_seed, layer l), making results independent
// of construction schedule.
std::vector<Block> build_blocks(const CsrGraph& graph,
                                std::span<const NodeId> seeds,
                                const FanoutSchedule& schedule,
                                std::uint64_t stream_seed);

// Full-neighborhood layered expansion for inference.
std::vector<Block> build_full_blocks(const CsrGraph& graph,
                                     std::span<const NodeId> seeds,
                                     std::int64_t depth);

// Warmup epochs order train ids by score descending (ties by ascending id);
// afterwards a uniform random permutation. Epochs are 1-based.
std::vector<NodeId> order_seeds(const NodeScores& scores,
                                std::span<const NodeId> train_ids,
                                std::int64_t epoch,
                                const SeedOrderPolicy& policy, Rng& rng);

// Consecutive order-preserving chunks; the final batch may be short.
std::vector<std::vector<NodeId>> make_batches(std::span<const NodeId> ordered_ids,
                                              std::int64_t batch_size);

}  // namespace dafos
