#pragma once

#include <cmath>
#include <cstdint>

namespace df {

// Deterministic counter-free RNG built on splitmix64. Self-contained so that
// streams are reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

  // Standard normal via Box-Muller. Draws two uniforms per call; no cached
  // spare, so the stream position is a pure function of the call count.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
};

// Derives independent stream seeds from a master seed and a tag path.
// Used so that concurrent workers (per prompt, per rollout, ...) consume
// disjoint streams regardless of scheduling order.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t stream_seed(uint64_t master, uint64_t tag) { return mix_seed(master, tag); }
inline uint64_t stream_seed(uint64_t master, uint64_t tag, uint64_t a) {
  return mix_seed(mix_seed(master, tag), a);
}
inline uint64_t stream_seed(uint64_t master, uint64_t tag, uint64_t a, uint64_t b) {
  return mix_seed(mix_seed(mix_seed(master, tag), a), b);
}
inline uint64_t stream_seed(uint64_t master, uint64_t tag, uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(mix_seed(mix_seed(master, tag), a), b), c);
}

// Stream tags for the training harness. Centralized so distinct subsystems
// can never collide.
namespace stream {
constexpr uint64_t kTaskPool = 1;
constexpr uint64_t kWarmstart = 2;
constexpr uint64_t kRollout = 3;
constexpr uint64_t kRepairSample = 4;
constexpr uint64_t kReference = 5;
constexpr uint64_t kCounterfactual = 6;
constexpr uint64_t kRepairDataset = 7;
constexpr uint64_t kRepairRl = 8;
constexpr uint64_t kParamInit = 9;
constexpr uint64_t kEval = 10;
constexpr uint64_t kMaskbench = 11;
constexpr uint64_t kTextFilter = 12;
constexpr uint64_t kHitRate = 13;
}  // namespace stream

}  // namespace df
