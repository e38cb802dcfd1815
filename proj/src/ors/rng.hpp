#pragma once

#include <cstdint>
#include <string_view>

namespace ors {

// Deterministic 64-bit stream: SplitMix64 (Steele, Lea, Flood 2014), seeded
// with splitmix_mix(seed ^ fnv1a64(purpose)). Instances touched by different
// purposes never share state, so adding a generator does not perturb
// existing streams. All derived draws (unit doubles, bounded ints, normals)
// are computed from the raw stream with fixed formulas; std::random
// distributions are avoided because their output is not pinned by the
// standard.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::string_view purpose);

  std::uint64_t next_u64();

  // Uniform in [0,1): top 53 bits scaled by 2^-53.
  double next_unit();

  // Uniform in [0,n), n >= 1, via rejection below the largest multiple of n.
  std::uint64_t next_below(std::uint64_t n);

  bool next_bool(double probability);

  // Standard normal via Box-Muller; pairs are cached.
  double next_normal();

  static std::uint64_t mix(std::uint64_t x);
  static std::uint64_t fnv1a64(std::string_view s);

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace ors
