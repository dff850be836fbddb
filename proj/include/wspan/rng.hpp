#pragma once

// Counter-based random streams.
//
// Every random draw in the library is a pure function of (seed, stream,
// index), so results do not depend on call order, thread scheduling, or the
// standard library's distribution implementations. The mixing function is
// SplitMix64 (Steele, Lea, Flood 2014).
//
//   draw(seed, stream, index) = mix(mix(seed ^ mix(stream + 1)) + index * G)
//
// where mix is the SplitMix64 finalizer and G = 0x9e3779b97f4a7c15. Generators
// reserve one stream per purpose (edge presence, edge weights, point
// coordinates, level sampling) and use the edge or vertex index as `index`.

#include <cstdint>

namespace wspan {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(splitmix64(seed ^ splitmix64(stream + 1))) {}

  constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
    return splitmix64(key_ + index * kGolden);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t index) const noexcept {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(std::uint64_t index, double p) const noexcept {
    return p >= 1.0 || uniform(index) < p;
  }

 private:
  std::uint64_t key_;
};

// Stream ids used across the library.
namespace streams {
inline constexpr std::uint64_t kEdgePresence = 1;
inline constexpr std::uint64_t kEdgeWeight = 2;
inline constexpr std::uint64_t kPoints = 3;
inline constexpr std::uint64_t kTreeParent = 4;
inline constexpr std::uint64_t kLevelSample = 16;  // + level index
inline constexpr std::uint64_t kEmulatorSample = 64;
inline constexpr std::uint64_t kSubsetSample = 65;
}  // namespace streams

}  // namespace wspan
