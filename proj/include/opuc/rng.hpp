#ifndef OPUC_RNG_HPP
#define OPUC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace opuc {

/// Counter-based SplitMix64: draw k of stream `seed` is mix(seed * G + k * G'),
/// so any draw can be reproduced without replaying the stream.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t next_u64() { return mix(mix(seed_) ^ (counter_++ * 0xd1342543de82ef95ULL)); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform angle on the circle.
  std::complex<double> unit() { return std::polar(1.0, 2.0 * M_PI * uniform()); }

  /// Uniform in the disk of the given radius.
  std::complex<double> disk(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * M_PI * uniform());
  }

  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace opuc

#endif  // OPUC_RNG_HPP
