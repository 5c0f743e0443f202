#pragma once

#include <cstdint>

namespace slnrect {

/// Small deterministic generator (splitmix64). Platform independent, unlike
/// the standard distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Uniform nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long v = uniform(1, bound);
    return (next() & 1U) ? v : -v;
  }

private:
  std::uint64_t state_;
};

/// Independent stream for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return r.next();
}

}  // namespace slnrect
