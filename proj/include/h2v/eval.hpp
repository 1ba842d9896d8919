#pragma once

#include <complex>
#include <vector>

#include "h2v/bipoly.hpp"
#include "h2v/errors.hpp"
#include "h2v/report.hpp"

namespace h2v {

using cplx = std::complex<double>;

struct ComplexPoint {
  cplx z1{};
  cplx z2{};

  // Anti-diagonal slice in polar form: z1 = r e^{i t}, z2 = r e^{-i t}.
  static ComplexPoint polar_slice(double r, double theta) {
    return {std::polar(r, theta), std::polar(r, -theta)};
  }
};

// Deformation parameter, strictly inside (0,1), with the derived contraction
// factor lambda = sqrt((1-alpha)/(1+alpha)).
class Alpha {
 public:
  explicit Alpha(double a);

  double value() const { return a_; }
  double lambda() const { return lambda_; }
  double lambda_sq() const { return lambda_sq_; }

 private:
  double a_;
  double lambda_;
  double lambda_sq_;
};

enum class EvalMethod { direct, recurrence, hermite1d, laguerre_diagonal };

// H_{m,n}(z1,z2) by the requested method.  laguerre_diagonal is only valid on
// the slice z2 == conj(z1) and throws DomainError elsewhere.
cplx eval_hermite(const DegreePair& d, const ComplexPoint& p,
                  EvalMethod method = EvalMethod::recurrence);

// Full recurrence table H_{i,j} for i <= m, j <= n; row-major (n+1 stride).
std::vector<cplx> eval_hermite_table(const DegreePair& d, const ComplexPoint& p);

// Normalized polynomials lambda^{m+n} H_{m,n} / sqrt(m! n!), computed by a
// rescaled recurrence with no explicit factorials; safe up to m+n ~ 300.
cplx eval_hermite_normalized(const DegreePair& d, const Alpha& a, const ComplexPoint& p);
std::vector<cplx> eval_hermite_normalized_table(const DegreePair& d, const Alpha& a,
                                                const ComplexPoint& p);

// H_{m,n} / sqrt(m! n!) (the lambda = 1 normalization used on the
// anti-diagonal slice).
cplx eval_hermite_unit_normalized(const DegreePair& d, const ComplexPoint& p);
std::vector<cplx> eval_hermite_unit_normalized_table(const DegreePair& d, const ComplexPoint& p);

// Truncated exponential generating function against its closed form,
// with the series tail bounded via |H_{m,n}| <= sqrt(m!n!) e^{|z1||z2|}.
VerificationReport generating_function_check(cplx s, cplx t, const ComplexPoint& p, int order,
                                             Tolerance tol = {});

enum class PartialSum { over_first_index, over_second_index };

// Single-index generating formula: sum_m s^m/m! H_{m,n} = (z2-s)^n e^{z1 s},
// and the symmetric counterpart.
VerificationReport partial_generating_check(PartialSum which, cplx s_or_t, int fixed_index,
                                            const ComplexPoint& p, int order, Tolerance tol = {});

// |H_{m,n}(z1,z2)| <= sqrt(m! n!) e^{|z1| |z2|}, compared in log space.
VerificationReport bound_check(const DegreePair& d, const ComplexPoint& p);

// e(t) = |t^{m+n} H_{m,n}(z1/t, z2/t) - z1^m z2^n| along a decreasing t path;
// must settle monotonically below tolerance.
VerificationReport scaling_limit_check(const DegreePair& d, const ComplexPoint& p,
                                       const std::vector<double>& t_sequence, Tolerance tol = {});

// Normalized polynomials at the contraction-adapted arguments against their
// monomial limit (the limit is implemented without any 1/pi prefactor; the
// residual against the 1/pi-scaled reading is reported alongside).
VerificationReport tilde_limit_check(const DegreePair& d, cplx u1, cplx u2,
                                     const std::vector<double>& alpha_sequence, Tolerance tol = {});

// Arguments ((u1 - sqrt(a) u2)/sqrt(1-a), (conj u1 + sqrt(a) conj u2)/sqrt(1-a)).
ComplexPoint contraction_arguments(double alpha, cplx u1, cplx u2);

// Default geometric paths: t_k = 2^{-k} and alpha_k = 1 - 2^{-k}, k = 1..12.
std::vector<double> default_t_sequence(int count = 12);
std::vector<double> default_alpha_sequence(int count = 12);

}  // namespace h2v
