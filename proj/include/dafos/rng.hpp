#pragma once

#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace dafos {

// splitmix64 core (Vigna 2015, public domain). Chosen over std engines so
// that streams are cheap to derive and the bit stream is identical on every
// platform we build on.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic substream keys. Every random decision in the engine draws
// from a stream derived as derive_stream(seed, {tag, ...indices}) so results
// do not depend on evaluation order or thread schedule.
namespace stream {
constexpr std::uint64_t kWeightInit = 1;
constexpr std::uint64_t kSeedOrder = 2;
constexpr std::uint64_t kBlockSample = 3;
constexpr std::uint64_t kValSubsample = 4;
constexpr std::uint64_t kSbm = 5;
constexpr std::uint64_t kPrefAttach = 6;
constexpr std::uint64_t kFeatures = 7;
constexpr std::uint64_t kSplits = 8;
constexpr std::uint64_t kVoronoi = 9;
}  // namespace stream

inline std::uint64_t derive_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  splitmix64_next(state);
  for (std::uint64_t word : path) {
    state ^= word + 0x9E3779B97F4A7C15ULL + (state << 6) + (state >> 2);
    splitmix64_next(state);
  }
  return state;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound); Lemire's multiply-shift with rejection.
  std::uint64_t uniform_int(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Standard normal via Box-Muller; always consumes exactly two words.
  double normal() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace dafos
