#include "h2v/rng.hpp"

#include <cmath>
#include <numbers>

namespace h2v {

double SplitRng::normal(std::uint64_t stream, std::uint64_t counter) const {
  // Box-Muller on two uniforms derived from the same counter; the pair index
  // selects the sin/cos branch so consecutive counters stay independent.
  const std::uint64_t pair = counter / 2;
  const double u1 = uniform(stream ^ 0x5851f42d4c957f2dull, 2 * pair);
  const double u2 = uniform(stream ^ 0x5851f42d4c957f2dull, 2 * pair + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return (counter % 2 == 0) ? r * std::cos(a) : r * std::sin(a);
}

std::complex<double> SplitRng::disc(std::uint64_t stream, std::uint64_t counter,
                                    double radius) const {
  const double r = radius * std::sqrt(uniform(stream ^ 0x14057b7ef767814full, 2 * counter));
  const double a = 2.0 * std::numbers::pi * uniform(stream ^ 0x14057b7ef767814full, 2 * counter + 1);
  return std::polar(r, a);
}

}  // namespace h2v
