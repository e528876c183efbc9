#pragma once

#include <cstdint>
#include <vector>

#include "riemann/decomp.hpp"

namespace riemann {

enum class Domain { general, einstein };

/// SplitMix64. Small, fixed, and fully specified so that sample sets are
/// reproducible from a seed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int bound = 9;
  Domain domain = Domain::general;
};

/// Random integer FBlocks. Entries of A_plus, A_minus (symmetric) and B are
/// uniform in [-bound, bound]; B = 0 for the Einstein domain. A_minus(3,3)
/// is then overwritten so that tr A_minus = tr A_plus, which can push it
/// outside the bound.
///
/// `stream` selects an independent substream, so sample k of a run is
/// random_fblocks(cfg, k) regardless of how many samples are drawn.
FBlocks<Rational> random_fblocks(const GenConfig& cfg, std::uint64_t stream = 0);

std::vector<FBlocks<Rational>> random_samples(const GenConfig& cfg, std::size_t count,
                                              std::uint64_t first_stream = 0);

}  // namespace riemann
