#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace seqnorm {

/// Counter-based pseudo-random generator. Every draw is a pure function of
/// (seed, stream, counter), so parallel restarts are reproducible and
/// independent streams never interleave.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return mix(seed_, stream_, counter_++); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1), safe as a log argument.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (hand-rolled: libstdc++ distributions are
  /// not bit-stable across platforms).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform_open();
    double v = uniform_open();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::vector<double> gauss_vec(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = gauss();
    return out;
  }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
    // splitmix64-style finalizer over the concatenated state words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z ^= counter + 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    z = (z + counter) * 0x2545f4914f6cdd1dULL;
    z = (z ^ (z >> 28)) * 0x9e3779b97f4a7c15ULL;
    return z ^ (z >> 32);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace seqnorm
