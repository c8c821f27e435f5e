#ifndef REPSTAT_RNG_HPP
#define REPSTAT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace repstat {

/// Counter-based splittable pseudo-random generator.
///
/// A stream is identified by (seed, stream_id). The same pair always yields
/// the same sequence of raw 64-bit draws; distinct stream_ids select
/// statistically independent substreams, so replicate r of a simulation can
/// deterministically own stream_id = r regardless of how replicates are
/// scheduled across threads.
///
/// The generator is SplitMix-style: a 64-bit counter advanced by a per-stream
/// odd increment, pushed through an avalanching finalizer. Integer output is
/// bit-identical across platforms; derived floating-point draws depend only
/// on IEEE double arithmetic.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    const std::uint64_t h = mix(seed ^ 0xa3c59ac2f0b42712ULL);
    state_ = mix(h + mix(stream_id + kGolden));
    gamma_ = mix(state_ + kGolden) | 1ULL;
  }

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += gamma_);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), unbiased (rejection on the wraparound
  /// residue). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  /// Standard normal draw (Box-Muller, second value cached).
  double next_normal() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    if (u1 == 0.0) u1 = 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t gamma_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace repstat

#endif  // REPSTAT_RNG_HPP
