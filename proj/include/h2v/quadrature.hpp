#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "h2v/errors.hpp"
#include "h2v/eval.hpp"
#include "h2v/rng.hpp"

namespace h2v {

// One-dimensional Gauss-Hermite rule for the weight e^{-x^2}:
//   nodes come in +/- pairs with equal weights, sum of weights = sqrt(pi),
//   and the rule is exact for polynomials of degree <= 2N-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

// N in [1, 200]; nodes from a Sturm bisection on the Jacobi matrix polished
// by Newton steps, weights from the orthonormal-polynomial Christoffel sum.
QuadratureRule gauss_hermite_rule(int N);

// Exact moment of the weight: integral of x^k e^{-x^2} over the line.
double hermite_weight_moment(int k);

// Deterministic pairwise (tree) reduction; the result is independent of how
// the entries were produced, which is what makes the parallel integrators
// bit-identical to their serial references.
cplx reduce_pairwise(std::span<const cplx> v);

using IntegrandC1 = std::function<cplx(cplx)>;
using IntegrandC2 = std::function<cplx(cplx, cplx)>;
using IntegrandR2 = std::function<cplx(double, double)>;

// Integral of f(u) against the standard complex Gaussian e^{-|u|^2}/pi.
cplx integrate_std_gaussian_c1(const QuadratureRule& rule, const IntegrandC1& f);
cplx integrate_std_gaussian_c1_serial(const QuadratureRule& rule, const IntegrandC1& f);

// Integral of f(u1,u2) against e^{-|u1|^2-|u2|^2}/pi^2 on C^2 (4D tensor grid).
cplx integrate_std_gaussian_c2(const QuadratureRule& rule, const IntegrandC2& f);
cplx integrate_std_gaussian_c2_serial(const QuadratureRule& rule, const IntegrandC2& f);

// Batched variant: fn writes K values per node; results[k] collects the
// k-th integral.  Same grid, weights, and reduction order as the scalar form.
using BatchIntegrandC2 = std::function<void(cplx, cplx, std::span<cplx>)>;
void integrate_std_gaussian_c2_batch(const QuadratureRule& rule, const BatchIntegrandC2& fn,
                                     std::span<cplx> results);
using BatchIntegrandC1 = std::function<void(cplx, std::span<cplx>)>;
void integrate_std_gaussian_c1_batch(const QuadratureRule& rule, const BatchIntegrandC1& fn,
                                     std::span<cplx> results);

// Integral of f(r,s) over the plane; f must decay like a Gaussian (the grid
// reweights by e^{x^2} so integrands containing e^{-r^2-s^2} are well scaled).
cplx integrate_planar_r2(const QuadratureRule& rule, const IntegrandR2& f);

// Change of variables z1 = (u1 - sqrt(a) u2)/sqrt(1-a),
// z2 = (conj u1 + sqrt(a) conj u2)/sqrt(1-a), which turns the deformed
// Gaussian weight into the standard one.  The absolute determinant of the
// real 4x4 linearization is computed numerically and checked against its
// closed form 4a/(1-a)^2 at construction.
class MuAlphaSubstitution {
 public:
  explicit MuAlphaSubstitution(const Alpha& a);

  ComplexPoint map(cplx u1, cplx u2) const {
    const double sa = sqrt_alpha_, inv = inv_sqrt_1ma_;
    return {(u1 - sa * u2) * inv, (std::conj(u1) + sa * std::conj(u2)) * inv};
  }
  // Re(z1 z2) = (|u1|^2 - a |u2|^2)/(1-a), the exponent that reappears when
  // the deformed weight is written against the standard Gaussian.
  double re_z1z2(cplx u1, cplx u2) const {
    return (std::norm(u1) - alpha_ * std::norm(u2)) * inv_1ma_;
  }
  double jacobian_abs() const { return jacobian_abs_; }

 private:
  double alpha_, sqrt_alpha_, inv_sqrt_1ma_, inv_1ma_, jacobian_abs_;
};

// Integral of f with respect to the deformed measure
// g_alpha(z1,z2) dz1 dz2 / pi^2, by the substitution above.
// Precondition: f times the deformed weight must be Gaussian-dominated.
cplx integrate_mu_alpha(const QuadratureRule& rule, const Alpha& a, const IntegrandC2& f);

// Same family of integrals computed on a different route: the weight
//   W(z1,z2) = exp[-(1-a)/4 |conj(z2)+z1|^2 - (1-a)/(4a) |conj(z2)-z1|^2]
// is diagonalized by a rotation of the four real coordinates, so
// integral of f * W dz1 dz2 / pi^2 reduces to a plain tensor rule in z-space.
// Independent of the substitution route; used to cross-calibrate it.
cplx integrate_w19(const QuadratureRule& rule, const Alpha& a, const IntegrandC2& f);

struct MCConfig {
  long samples = 1000000;
  std::uint64_t seed = 1;
};

struct MCResult {
  cplx value{};
  double stderr_est = 0.0;
};

// Monte-Carlo under one or two standard complex Gaussians; deterministic for
// a fixed seed independent of thread count (counter-keyed sample blocks).
MCResult mc_integrate_gaussian_c1(const IntegrandC1& f, const MCConfig& cfg);
MCResult mc_integrate_gaussian_c2(const IntegrandC2& f, const MCConfig& cfg);
MCResult mc_integrate_gaussian_c1_serial(const IntegrandC1& f, const MCConfig& cfg);
MCResult mc_integrate_gaussian_c2_serial(const IntegrandC2& f, const MCConfig& cfg);

// Batched form of integrate_w19: fn receives the mapped (z1, z2) grid point.
void integrate_w19_batch(const QuadratureRule& rule, const Alpha& a, const BatchIntegrandC2& fn,
                         std::span<cplx> results);

// Importance-sampled Monte-Carlo estimate of integral of W (above) over C^2
// against dz1 dz2/pi^2, sampling z-space directly; the independent oracle for
// the substitution's Jacobian and normalization.
MCResult mc_integrate_w19(const Alpha& a, const MCConfig& cfg);

void export_rule_csv(const QuadratureRule& rule, std::ostream& out);

}  // namespace h2v
