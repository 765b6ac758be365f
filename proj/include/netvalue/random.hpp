#pragma once

#include <cstdint>
#include <random>

namespace netvalue {

// One reproducible random stream: a master seed plus the index of the
// repetition that owns the stream. Every random draw of a generation run
// is a pure function of this pair.
struct RngSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic uniform source. std::uniform_*_distribution output is
// implementation-defined, so the helpers below draw raw engine words and
// map them to uniforms themselves; a given RngSeed yields the same stream
// on every standard library.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(derive_stream(seed)) {}

  // Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), unbiased via rejection. Requires n > 0.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t word = engine_();
      if (word >= threshold) return word % n;
    }
  }

 private:
  static std::uint64_t derive_stream(RngSeed seed) {
    std::uint64_t state = seed.master_seed;
    std::uint64_t mixed = detail::splitmix64(state);
    state ^= 0x9E3779B97F4A7C15ULL * (seed.stream_index + 1);
    mixed ^= detail::splitmix64(state);
    return mixed;
  }

  std::mt19937_64 engine_;
};

}  // namespace netvalue
