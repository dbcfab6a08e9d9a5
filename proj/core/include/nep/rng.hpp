#ifndef NEP_RNG_HPP
#define NEP_RNG_HPP

#include <cstdint>

namespace nep {

/// Deterministic 64-bit generator (splitmix64).  The stream depends only on
/// the seed, never on the platform or standard library, so seeded scenario
/// runs produce identical output everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, m).
  std::uint64_t below(std::uint64_t m) { return next_u64() % m; }

 private:
  std::uint64_t state_;
};

}  // namespace nep

#endif  // NEP_RNG_HPP
