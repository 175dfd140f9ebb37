#pragma once

#include <cstdint>

namespace proxforce {

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the k-th draw of stream s under seed is a pure
/// function of (seed, s, k), so work split into streams reproduces the same
/// numbers whatever the thread count or execution order.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(splitmix64_mix(splitmix64_mix(seed) + stream * kGolden +
                            0x632be59bd9b4e019ULL)) {}

  constexpr std::uint64_t next() noexcept {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * kGolden);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace proxforce
