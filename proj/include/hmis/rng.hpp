#pragma once

#include <cstdint>

namespace hmis {

/// Counter-based randomness: every draw is a pure function of
/// (key, counter), so the order in which vertices or trials are processed
/// never changes the outcome.
class CounterStream {
 public:
  explicit constexpr CounterStream(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  /// Independent sub-stream, e.g. one per round, retry or trial.
  constexpr CounterStream derive(std::uint64_t tag) const { return CounterStream(Key{mix(key_ + mix(tag + kGolden))}); }

  constexpr std::uint64_t bits(std::uint64_t counter) const { return mix(key_ ^ mix(counter * kGolden + 1)); }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(std::uint64_t counter, double p) const { return uniform(counter) < p; }

  constexpr std::uint64_t key() const { return key_; }

  /// splitmix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  struct Key {
    std::uint64_t value;
  };
  explicit constexpr CounterStream(Key k) : key_(k.value) {}

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
};

}  // namespace hmis
