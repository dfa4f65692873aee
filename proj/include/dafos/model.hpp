#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dafos/matrix.hpp"
#include "dafos/sampler.hpp"

#include "json.hpp"

namespace dafos {

// sum reproduces the raw aggregation rule; mean divides by the incident
// edge count so activation scale stays independent of fanout.
enum class Aggregator { mean, sum };

Aggregator parse_aggregator(const std::string& name);
std::string aggregator_name(Aggregator agg);

// Weight matrices only, no bias terms. weights[0] is feat_dim x hidden,
// the last is hidden x num_classes.
struct GcnParams {
  std::vector<Matrix> weights;

  std::int64_t depth() const { return static_cast<std::int64_t>(weights.size()); }
  void validate_chain() const;  // shapes chain, entries finite
};

// Glorot-uniform init, deterministic per seed. layer_dims lists
// feat_dim, hidden..., num_classes.
GcnParams init_params(std::span<const std::int64_t> layer_dims,
                      std::uint64_t seed);

// Backprop bookkeeping. Holds a pointer to the blocks used; the caller
// keeps them alive until backward() is done.
struct ForwardCache {
  const std::vector<Block>* blocks = nullptr;
  Aggregator aggregator = Aggregator::mean;
  Matrix input;                     // gathered H^0, rows = src of block 1
  std::vector<Matrix> aggregated;   // per layer: aggregation output
  std::vector<Matrix> outputs;      // per layer: post-activation (last = logits)
};

// Per dst i at layer l: aggregate incident src rows of H^(l-1), multiply by
// weights[l-1], ReLU on hidden layers, no activation on logits.
// Feature rows must cover all src ids of block 1.
std::pair<Matrix, ForwardCache> forward(const std::vector<Block>& blocks,
                                        const Matrix& features,
                                        const GcnParams& params,
                                        Aggregator aggregator);

struct LossResult {
  double loss = 0.0;
  Matrix probabilities;  // softmax rows
};

// Mean negative log softmax probability of the true class, with
// max-subtraction stabilization. Never NaN for finite logits.
LossResult cross_entropy(const Matrix& logits, std::span<const int> labels);

// Analytic gradient of the mean cross-entropy w.r.t. every weight matrix,
// routed back through block edges and the aggregator's 1/count factor.
std::vector<Matrix> backward(const ForwardCache& cache, const GcnParams& params,
                             std::span<const int> labels);

enum class OptimizerKind { adam, sgd };

OptimizerKind parse_optimizer(const std::string& name);
std::string optimizer_name(OptimizerKind kind);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::adam;
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct OptimizerState {
  std::vector<Matrix> first_moment;
  std::vector<Matrix> second_moment;
  std::int64_t step = 0;
};

OptimizerState init_optimizer_state(const GcnParams& params);

// Bias-corrected Adam (or plain SGD). Throws on non-finite gradients so
// divergence surfaces instead of corrupting the parameters.
void optimizer_step(GcnParams& params, const std::vector<Matrix>& grads,
                    OptimizerState& state, const OptimizerConfig& config);

// argmax per row, ties to the lowest class id
std::vector<int> predict(const Matrix& logits);

// Micro-averaged F1 via pooled confusion counts. For single-label
// multiclass this equals accuracy.
double micro_f1(std::span<const int> predictions, std::span<const int> labels);

// Versioned checkpoint container; doubles round-trip exactly.
nlohmann::json params_to_json(const GcnParams& params);
GcnParams params_from_json(const nlohmann::json& blob);
nlohmann::json optimizer_state_to_json(const OptimizerState& state);
OptimizerState optimizer_state_from_json(const nlohmann::json& blob);

}  // namespace dafos
