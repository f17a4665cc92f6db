#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cscf
{

/// Seeded uniform stream. Uses std::mt19937_64 (whose output sequence is
/// fixed by the standard) and converts to doubles by hand, because the
/// standard distributions are implementation-defined and would break
/// cross-platform reproducibility.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n); n must be positive.
  std::size_t index(std::size_t n)
  {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t v = engine_();
    while (v >= limit) {
      v = engine_();
    }
    return static_cast<std::size_t>(v % bound);
  }

  std::uint64_t next_u64() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace cscf
