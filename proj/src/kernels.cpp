#include "h2v/kernels.hpp"

#include <cmath>

namespace h2v {

namespace {

struct KahanC {
  cplx sum{};
  cplx comp{};
  void add(cplx v) {
    const cplx y = v - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// sum_{m,n<=M} A[m][n] conj(B[m][n]) by ascending total degree.
cplx degree_ordered_dot(const std::vector<cplx>& a, const std::vector<cplx>& b, int M) {
  const int stride = M + 1;
  KahanC acc;
  for (int total = 0; total <= 2 * M; ++total) {
    for (int m = std::max(0, total - M); m <= std::min(M, total); ++m) {
      const int n = total - m;
      acc.add(a[m * stride + n] * std::conj(b[m * stride + n]));
    }
  }
  return acc.sum;
}

}  // namespace

HermiteFunctionValue HermiteFunctionValue::make(cplx value, double log_extra) {
  HermiteFunctionValue r;
  if (value == cplx(0.0)) return r;
  const double s = std::log(std::abs(value)) + log_extra;
  const double k = std::floor(s);
  r.mantissa = (value / std::abs(value)) * std::exp(s - k);
  r.log_scale = k;
  return r;
}

double HermiteFunctionValue::log_abs() const {
  if (mantissa == cplx(0.0)) return -INFINITY;
  return std::log(std::abs(mantissa)) + log_scale;
}

double hermite_function_prefactor(const Alpha& a) {
  return (1.0 - a.value()) / (2.0 * std::sqrt(a.value()));
}

HermiteFunctionValue hermite_function(const DegreePair& d, const Alpha& a, const ComplexPoint& p) {
  const cplx t = p.z1 * p.z2;
  const cplx core = hermite_function_prefactor(a) * eval_hermite_normalized(d, a, p) *
                    std::exp(cplx(0.0, -0.5 * t.imag()));
  return HermiteFunctionValue::make(core, -0.5 * t.real());
}

double weight_g_alpha(const Alpha& a, const ComplexPoint& p) {
  const double al = a.value();
  const double re_t = (p.z1 * p.z2).real();
  return std::exp((1.0 + al * al) / (2.0 * al) * re_t -
                  (1.0 - al * al) / (4.0 * al) * (std::norm(p.z1) + std::norm(p.z2)));
}

cplx kernel_closed(const Alpha& a, const KernelArgs& k) {
  const double al = a.value();
  const double c = (1.0 + al * al) / (4.0 * al);
  const double dcoef = (1.0 - al * al) / (4.0 * al);
  const double pref = (1.0 - al * al) * (1.0 - al * al) / (16.0 * al * al);
  const cplx wb1 = std::conj(k.w.z1), wb2 = std::conj(k.w.z2);
  return pref * std::exp(-c * (k.z.z1 * k.z.z2 + wb1 * wb2) +
                         dcoef * (k.z.z1 * wb1 + k.z.z2 * wb2));
}

cplx kernel_truncated(const Alpha& a, const KernelArgs& k, int truncation) {
  const int M = truncation;
  const auto tz = eval_hermite_normalized_table({M, M}, a, k.z);
  const auto tw = eval_hermite_normalized_table({M, M}, a, k.w);
  const double pf = hermite_function_prefactor(a);
  const cplx damp = std::exp(-0.5 * (k.z.z1 * k.z.z2 + std::conj(k.w.z1 * k.w.z2)));
  return pf * pf * damp * degree_ordered_dot(tz, tw, M);
}

double norm_sum_closed(const Alpha& a, const ComplexPoint& p) {
  return kernel_closed(a, {p, p}).real();
}

cplx tilde_kernel_closed(const Alpha& a, const KernelArgs& k) {
  // Consistent with the series and with the damped kernel's closed form:
  // the (z1 z2 + wbar1 wbar2) coefficient is -(1-a)^2/(4a).
  const double al = a.value();
  const double pref = (1.0 + al) * (1.0 + al) / (4.0 * al);
  const double c = (1.0 - al) * (1.0 - al) / (4.0 * al);
  const double dcoef = (1.0 + al) * (1.0 - al) / (4.0 * al);
  const cplx wb1 = std::conj(k.w.z1), wb2 = std::conj(k.w.z2);
  return pref * std::exp(-c * (k.z.z1 * k.z.z2 + wb1 * wb2) +
                         dcoef * (k.z.z1 * wb1 + k.z.z2 * wb2));
}

cplx tilde_kernel_truncated(const Alpha& a, const KernelArgs& k, int truncation) {
  const int M = truncation;
  const auto tz = eval_hermite_normalized_table({M, M}, a, k.z);
  const auto tw = eval_hermite_normalized_table({M, M}, a, k.w);
  return degree_ordered_dot(tz, tw, M);
}

cplx bargmann_kernel_A(const Alpha& a, const ComplexPoint& z, cplx wbar1, cplx wbar2) {
  const double lam = a.lambda();
  return hermite_function_prefactor(a) *
         std::exp(-0.5 * wbar1 * wbar2 + lam * (z.z1 * wbar1 + z.z2 * wbar2) -
                  a.lambda_sq() * z.z1 * z.z2);
}

cplx phi_basis(const DegreePair& d, const ComplexPoint& p) {
  cplx v = 1.0;
  for (int k = 1; k <= d.m; ++k) v *= p.z1 / std::sqrt(double(k));
  for (int k = 1; k <= d.n; ++k) v *= p.z2 / std::sqrt(double(k));
  return v;
}

cplx bargmann_kernel_B2(const KernelArgs& k) {
  return std::exp(k.z.z1 * std::conj(k.w.z1) + k.z.z2 * std::conj(k.w.z2));
}

}  // namespace h2v
