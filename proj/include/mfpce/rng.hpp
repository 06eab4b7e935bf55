#pragma once

#include <cstdint>

namespace mfpce {

// Splittable counter-style generator built on the splitmix64 finalizer.
// Every stochastic routine in the library takes an explicit 64-bit seed and
// derives decorrelated child streams from it, so results are reproducible
// bit-for-bit regardless of evaluation order or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ kInit)) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform draw strictly inside (0, 1); never returns an endpoint, so it is
  // safe to feed into inverse-CDF transforms.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  double normal();  // standard normal via inverse CDF (see normal.hpp)

  // Child stream decorrelated from this seed; pure function of (seed, key).
  static Rng stream(std::uint64_t seed, std::uint64_t key) {
    return Rng(mix(seed + kGamma * (key + 1)) ^ kStream);
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
    return mix(seed + kGamma * (key + 1));
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kInit = 0x243f6a8885a308d3ull;
  static constexpr std::uint64_t kStream = 0x452821e638d01377ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace mfpce
