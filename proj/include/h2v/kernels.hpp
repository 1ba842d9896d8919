#pragma once

#include "h2v/eval.hpp"

namespace h2v {

struct KernelArgs {
  ComplexPoint z;
  ComplexPoint w;
};

// Complex value kept as mantissa * e^{log_scale} so that the exponentially
// damped functions stay representable at large arguments and degrees.
// Invariant: |mantissa| in [1, e), or exactly 0 with log_scale 0.
struct HermiteFunctionValue {
  cplx mantissa{};
  double log_scale = 0.0;

  static HermiteFunctionValue make(cplx value, double log_extra = 0.0);
  cplx to_complex() const { return mantissa * std::exp(log_scale); }
  double log_abs() const;
};

// Damped orthonormal family:
//   (1-a)/(2 sqrt a) * lambda^{m+n} e^{-z1 z2/2} H_{m,n}(z1,z2)/sqrt(m! n!).
HermiteFunctionValue hermite_function(const DegreePair& d, const Alpha& a, const ComplexPoint& p);

double hermite_function_prefactor(const Alpha& a);  // (1-a)/(2 sqrt a)

// Density of the deformed measure against Lebesgue/pi^2; strictly positive.
double weight_g_alpha(const Alpha& a, const ComplexPoint& p);

// Closed form of the reproducing kernel sum_{m,n} h_{m,n}(z) conj(h_{m,n}(w)).
cplx kernel_closed(const Alpha& a, const KernelArgs& k);

// Partial sums of the kernel series, ordered by total degree with
// compensated accumulation.
cplx kernel_truncated(const Alpha& a, const KernelArgs& k, int truncation);

// Diagonal of the kernel: sum of |h_{m,n}|^2 in closed form.
double norm_sum_closed(const Alpha& a, const ComplexPoint& p);

// Kernel built from the normalized polynomials (no exponential damping):
// closed form and partial sums.  The series converges on a neighborhood of
// the diagonal; the closed form is entire.
cplx tilde_kernel_closed(const Alpha& a, const KernelArgs& k);
cplx tilde_kernel_truncated(const Alpha& a, const KernelArgs& k, int truncation);

// Kernel of the unitary map onto the Bargmann space:
//   (1-a)/(2 sqrt a) exp[-wbar1 wbar2/2 + lambda(z1 wbar1 + z2 wbar2) - lambda^2 z1 z2].
cplx bargmann_kernel_A(const Alpha& a, const ComplexPoint& z, cplx wbar1, cplx wbar2);

// Monomial orthonormal basis of the Bargmann space, z1^m z2^n / sqrt(m! n!),
// evaluated by stepwise products (no explicit factorials).
cplx phi_basis(const DegreePair& d, const ComplexPoint& p);

// Two-variable Bargmann reproducing kernel exp(z1 wbar1 + z2 wbar2).
cplx bargmann_kernel_B2(const KernelArgs& k);

}  // namespace h2v
