#ifndef SMR_RNG_HPP
#define SMR_RNG_HPP

#include <cmath>
#include <cstdint>

namespace smr {

// Deterministic counter-based PRNG (splitmix64 core). The standard library's
// distributions are implementation-defined, and the CLI promises byte-identical
// output for identical seeds, so all randomness in the library flows through
// this generator.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0,1); never returns exactly 0 so it is safe inside log().
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Standard normal via Box-Muller; draws two uniforms per call (no caching, so
  // the stream position is a pure function of the call count).
  double next_gaussian() {
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

// Stream derivation: mixes a stream index into a seed so that parallel or
// retried phases get decorrelated, reproducible substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  rng g(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
  return g.next_u64();
}

}  // namespace smr

#endif  // SMR_RNG_HPP
