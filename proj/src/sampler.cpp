#include "dafos/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dafos {

void FanoutSchedule::validate() const {
  if (fanouts.empty())
    throw std::invalid_argument("fanout schedule must not be empty");
  for (std::int64_t f : fanouts)
    if (f < 1) throw std::invalid_argument("fanouts must be >= 1");
}

std::vector<std::int32_t> Block::dst_edge_counts() const {
  std::vector<std::int32_t> counts(dst_ids.size(), 0);
  for (const auto& [s, d] : edges) counts[static_cast<std::size_t>(d)]++;
  return counts;
}

namespace {

// Shared body for sampled and full blocks. fanout < 0 means take all
// neighbors (no RNG consumed, neighbors kept in CSR order).
Block make_block(const CsrGraph& graph, std::span<const NodeId> dst_ids,
                 std::int64_t fanout, Rng* rng) {
  Block block;
  block.dst_ids.assign(dst_ids.begin(), dst_ids.end());
  block.src_ids.assign(dst_ids.begin(), dst_ids.end());

  std::unordered_map<NodeId, std::int32_t> src_index;
  src_index.reserve(dst_ids.size() * 2);
  for (std::size_t i = 0; i < dst_ids.size(); ++i) {
    auto [it, inserted] =
        src_index.emplace(dst_ids[i], static_cast<std::int32_t>(i));
    if (!inserted)
      throw std::invalid_argument("sample_block: duplicate dst id " +
                                  std::to_string(dst_ids[i]));
  }
  auto intern = [&](NodeId v) {
    auto [it, inserted] = src_index.emplace(
        v, static_cast<std::int32_t>(block.src_ids.size()));
    if (inserted) block.src_ids.push_back(v);
    return it->second;
  };

  std::vector<NodeId> pool;
  for (std::size_t d = 0; d < dst_ids.size(); ++d) {
    NodeId dst = dst_ids[d];
    if (dst < 0 || dst >= graph.num_nodes)
      throw std::invalid_argument("sample_block: dst id " +
                                  std::to_string(dst) + " out of range");
    auto dst_idx = static_cast<std::int32_t>(d);
    auto nbrs = graph.neighbors(dst);
    auto deg = static_cast<std::int64_t>(nbrs.size());

    if (fanout < 0 || fanout >= deg) {
      for (NodeId v : nbrs) block.edges.emplace_back(intern(v), dst_idx);
    } else {
      // partial Fisher-Yates over a copy of the neighbor slice
      pool.assign(nbrs.begin(), nbrs.end());
      for (std::int64_t i = 0; i < fanout; ++i) {
        auto j = i + static_cast<std::int64_t>(
                         rng->uniform_int(static_cast<std::uint64_t>(deg - i)));
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(j)]);
        block.edges.emplace_back(intern(pool[static_cast<std::size_t>(i)]),
                                 dst_idx);
      }
    }
    block.edges.emplace_back(dst_idx, dst_idx);  // self edge
  }
  return block;
}

}  // namespace

Block sample_block(const CsrGraph& graph, std::span<const NodeId> dst_ids,
                   std::int64_t fanout, Rng& rng) {
  if (fanout < 1) throw std::invalid_argument("sample_block: fanout < 1");
  if (dst_ids.empty())
    throw std::invalid_argument("sample_block: empty dst list");
  return make_block(graph, dst_ids, fanout, &rng);
}

Block full_block(const CsrGraph& graph, std::span<const NodeId> dst_ids) {
  if (dst_ids.empty())
    throw std::invalid_argument("full_block: empty dst list");
  return make_block(graph, dst_ids, -1, nullptr);
}

std::vector<Block> build_blocks(const CsrGraph& graph,
                                std::span<const NodeId> seeds,
                                const FanoutSchedule& schedule,
                                std::uint64_t stream_seed) {
  schedule.validate();
  std::int64_t depth = schedule.depth();
  std::vector<Block> blocks(static_cast<std::size_t>(depth));
  std::vector<NodeId> dst(seeds.begin(), seeds.end());
  for (std::int64_t layer = depth; layer >= 1; --layer) {
    Rng rng(derive_stream(stream_seed, {static_cast<std::uint64_t>(layer)}));
    Block& block = blocks[static_cast<std::size_t>(layer - 1)];
    block = sample_block(graph, dst,
                         schedule.fanouts[static_cast<std::size_t>(layer - 1)],
                         rng);
    dst = block.src_ids;
  }
  return blocks;
}

std::vector<Block> build_full_blocks(const CsrGraph& graph,
                                     std::span<const NodeId> seeds,
                                     std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("build_full_blocks: depth < 1");
  std::vector<Block> blocks(static_cast<std::size_t>(depth));
  std::vector<NodeId> dst(seeds.begin(), seeds.end());
  for (std::int64_t layer = depth; layer >= 1; --layer) {
    Block& block = blocks[static_cast<std::size_t>(layer - 1)];
    block = full_block(graph, dst);
    dst = block.src_ids;
  }
  return blocks;
}

std::vector<NodeId> order_seeds(const NodeScores& scores,
                                std::span<const NodeId> train_ids,
                                std::int64_t epoch,
                                const SeedOrderPolicy& policy, Rng& rng) {
  if (epoch < 1) throw std::invalid_argument("order_seeds: epoch < 1");
  std::vector<NodeId> order(train_ids.begin(), train_ids.end());
  if (policy.mode == SeedOrderPolicy::Mode::score_warmup &&
      epoch <= policy.warmup_epochs) {
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      double sa = scores.scores[static_cast<std::size_t>(a)];
      double sb = scores.scores[static_cast<std::size_t>(b)];
      if (sa != sb) return sa > sb;
      return a < b;
    });
  } else {
    rng.shuffle(order);
  }
  return order;
}

std::vector<std::vector<NodeId>> make_batches(std::span<const NodeId> ordered_ids,
                                              std::int64_t batch_size) {
  if (batch_size < 1) throw std::invalid_argument("make_batches: batch_size < 1");
  std::vector<std::vector<NodeId>> batches;
  for (std::size_t begin = 0; begin < ordered_ids.size();
       begin += static_cast<std::size_t>(batch_size)) {
    std::size_t end = std::min(ordered_ids.size(),
                               begin + static_cast<std::size_t>(batch_size));
    batches.emplace_back(ordered_ids.begin() + static_cast<std::ptrdiff_t>(begin),
                         ordered_ids.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return batches;
}

}  // namespace dafos
