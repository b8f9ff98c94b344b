#pragma once

#include "neu/triple.hpp"

#include <cstdint>

namespace neu {

/// SplitMix64. Portable and cheap to seed per case, so randomized checks
/// give the same draws whatever the thread schedule.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent stream for case `index` of the check identified by `salt`.
  static SeededRng for_case(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) noexcept
  {
    SeededRng mix(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    mix.next();
    SeededRng out(mix.next() ^ (index * 0xD1B54A32D192ED03ULL));
    out.next();
    return out;
  }

  std::uint64_t next() noexcept
  {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept { return n == 0 ? 0 : next() % n; }

  /// Uniform draw from the simplex t + i + f = 1.
  Triple triple()
  {
    double a = uniform();
    double b = uniform();
    if (a > b) {
      const double tmp = a;
      a = b;
      b = tmp;
    }
    return make_triple(a, b - a, 1.0 - b);
  }

private:
  std::uint64_t state_;
};

}  // namespace neu
