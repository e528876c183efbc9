#include "riemann/gen.hpp"

namespace riemann {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

FBlocks<Rational> random_fblocks(const GenConfig& cfg, std::uint64_t stream) {
  if (cfg.bound < 0) throw InputError("bound must be non-negative");
  // Substream seed: mix the run seed with the stream index through one
  // SplitMix64 step each so nearby (seed, stream) pairs decorrelate.
  SplitMix64 mixer(cfg.seed);
  const std::uint64_t base = mixer.next();
  SplitMix64 rng(base ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  const std::int64_t b = cfg.bound;
  auto draw = [&] { return Rational(rng.uniform(-b, b)); };

  Mat3<Rational> ap, am, mixed = Mat3<Rational>::Zero();
  for (Mat3<Rational>* m : {&ap, &am})
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) (*m)(i, j) = (*m)(j, i) = draw();
  if (cfg.domain == Domain::general)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mixed(i, j) = draw();
  am(2, 2) = ap.trace() - am(0, 0) - am(1, 1);
  return FBlocks<Rational>(ap, am, mixed);
}

std::vector<FBlocks<Rational>> random_samples(const GenConfig& cfg, std::size_t count,
                                              std::uint64_t first_stream) {
  std::vector<FBlocks<Rational>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_fblocks(cfg, first_stream + k));
  return out;
}

}  // namespace riemann
