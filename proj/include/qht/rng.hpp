#ifndef QHT_RNG_HPP
#define QHT_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qht {

// SplitMix64 output function. Used to derive independent per-trial seeds
// from a master seed by counter: sub_seed(seed, k) is the k-th element of
// the SplitMix64 stream started at `seed`. O(1) per call, so trial k can be
// seeded without touching trials 0..k-1.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + index * 0x9E3779B97F4A7C15ULL);
}

// Deterministic random source pinned for reproducibility: mt19937_64 for
// bits (bit-exact across platforms per the C++ standard), uniforms from the
// top 53 bits, normals via Box-Muller. The std <random> distributions are
// implementation-defined and deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on (0, 1].
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  // One standard-normal pair per call (Box-Muller).
  std::complex<double> normal_pair() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qht

#endif  // QHT_RNG_HPP
