#pragma once

#include <complex>
#include <cstdint>

namespace h2v {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so parallel consumers can pull from disjoint
// counter ranges and still reproduce bit-identical results for a seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t raw(std::uint64_t stream, std::uint64_t counter) const {
    return mix(seed_ ^ mix(stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull) ^
               mix(counter + 0x9e3779b97f4a7c15ull));
  }

  // Uniform in (0,1).
  double uniform(std::uint64_t stream, std::uint64_t counter) const {
    return (static_cast<double>(raw(stream, counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(std::uint64_t stream, std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(stream, counter);
  }

  // Standard normal via Box-Muller; one value per (stream, counter).
  double normal(std::uint64_t stream, std::uint64_t counter) const;

  // Standard complex Gaussian: E|u|^2 = 1.
  std::complex<double> complex_gaussian(std::uint64_t stream, std::uint64_t counter) const {
    return {normal(stream, 2 * counter) * 0.7071067811865476,
            normal(stream, 2 * counter + 1) * 0.7071067811865476};
  }

  // Uniform on the closed disc of given radius.
  std::complex<double> disc(std::uint64_t stream, std::uint64_t counter, double radius) const;

 private:
  std::uint64_t seed_;
};

}  // namespace h2v
