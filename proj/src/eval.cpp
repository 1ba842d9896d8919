#include "h2v/eval.hpp"

#include <algorithm>
#include <cmath>

#include "dd.hpp"

namespace h2v {

namespace {

constexpr cplx kImag{0.0, 1.0};

// Kahan-compensated complex accumulator.
struct Kahan {
  cplx sum{};
  cplx comp{};
  void add(cplx v) {
    const cplx y = v - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

std::vector<cplx> pow_table(cplx z, int max) {
  std::vector<cplx> p(max + 1);
  p[0] = 1.0;
  for (int k = 1; k <= max; ++k) p[k] = p[k - 1] * z;
  return p;
}

// Binomial row C(n,0..n); all values are integers held exactly in doubles
// for n well below the 2^53 limit.
std::vector<double> binom_row(int n) {
  std::vector<double> b(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) b[k] = b[k - 1] * (n - k + 1) / k;
  return b;
}

cplx eval_direct(const DegreePair& d, const ComplexPoint& p) {
  const auto z1p = pow_table(p.z1, d.m);
  const auto z2p = pow_table(p.z2, d.n);
  const int kmax = std::min(d.m, d.n);
  // C(m,k) C(n,k) (-1)^k k!, stepped so every intermediate stays an exact
  // integer in double (the final division is always exact).
  double coeff = 1.0;
  Kahan acc;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) coeff = -coeff * ((d.m - k + 1) * (d.n - k + 1)) / k;
    acc.add(coeff * z1p[d.m - k] * z2p[d.n - k]);
  }
  return acc.sum;
}

// The composition formula cancels heavily (the partial terms can exceed the
// value by many orders), so this route runs in double-double precision.
cplx eval_hermite1d_sum(const DegreePair& d, const ComplexPoint& p) {
  using dd::Cdd;
  const int m = d.m, n = d.n, total = m + n;
  // u = (z1+z2)/2, v = (z1-z2)/(2i); both exact as double-doubles.
  const dd::Dd sr = dd::two_sum(p.z1.real(), p.z2.real());
  const dd::Dd si = dd::two_sum(p.z1.imag(), p.z2.imag());
  const dd::Dd dr = dd::two_sum(p.z1.real(), -p.z2.real());
  const dd::Dd di = dd::two_sum(p.z1.imag(), -p.z2.imag());
  const Cdd u{{0.5 * sr.hi, 0.5 * sr.lo}, {0.5 * si.hi, 0.5 * si.lo}};
  const Cdd v{{0.5 * di.hi, 0.5 * di.lo}, {-0.5 * dr.hi, -0.5 * dr.lo}};

  auto h1d = [total](Cdd x) {
    std::vector<Cdd> h(total + 1);
    h[0] = dd::from(cplx(1.0));
    if (total >= 1) h[1] = dd::mul(x, 2.0);
    for (int k = 1; k < total; ++k)
      h[k + 1] = dd::sub(dd::mul(dd::mul(x, h[k]), 2.0), dd::mul(h[k - 1], 2.0 * k));
    return h;
  };
  const auto hu = h1d(u);
  const auto hv = h1d(v);

  static constexpr cplx iu[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto bm = binom_row(m);
  const auto bn = binom_row(n);
  Cdd acc = dd::from(cplx(0.0));
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) {
      const cplx unit = iu[((m - k) % 4 + 4) % 4] * std::conj(iu[((n - l) % 4 + 4) % 4]);
      Cdd term = dd::mul(hu[k + l], hv[total - k - l]);
      term = dd::mul(term, dd::from(unit));
      acc = dd::add(acc, dd::mul(term, bm[k] * bn[l]));
    }
  }
  return std::ldexp(1.0, -total) * dd::to_complex(acc);
}

cplx eval_laguerre_diagonal(const DegreePair& d, const ComplexPoint& p) {
  using dd::Dd;
  const double scale = std::max({1.0, std::abs(p.z1), std::abs(p.z2)});
  if (std::abs(p.z2 - std::conj(p.z1)) > 1e-9 * scale)
    throw DomainError("laguerre_diagonal requires z2 == conj(z1)");
  const double x = p.z1.real(), y = p.z1.imag();
  const Dd r2 = dd::add(dd::two_prod(x, x), dd::two_prod(y, y));

  auto laguerre = [](int n, int k, Dd t) {
    Dd l0 = dd::from(1.0);
    if (n == 0) return l0;
    Dd l1 = dd::sub(dd::from(1.0 + k), t);
    for (int j = 1; j < n; ++j) {
      Dd next = dd::sub(dd::mul(dd::sub(dd::from(2.0 * j + k + 1), t), l1),
                        dd::mul(l0, dd::from(double(j + k))));
      next = dd::mul(next, dd::from(1.0 / (j + 1)));
      l0 = l1;
      l1 = next;
    }
    return l1;
  };
  auto fact = [](int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };

  if (d.m >= d.n) {
    const cplx base = std::pow(cplx(x, y), d.m - d.n);
    return (d.n % 2 == 0 ? 1.0 : -1.0) * fact(d.n) * base *
           dd::to_double(laguerre(d.n, d.m - d.n, r2));
  }
  const cplx base = std::pow(cplx(x, -y), d.n - d.m);
  return (d.m % 2 == 0 ? 1.0 : -1.0) * fact(d.m) * base *
         dd::to_double(laguerre(d.m, d.n - d.m, r2));
}

}  // namespace

Alpha::Alpha(double a) : a_(a) {
  if (!(a > 0.0) || !(a < 1.0))
    throw DomainError("deformation parameter must lie strictly inside (0,1)");
  lambda_sq_ = (1.0 - a) / (1.0 + a);
  lambda_ = std::sqrt(lambda_sq_);
}

std::vector<cplx> eval_hermite_table(const DegreePair& d, const ComplexPoint& p) {
  if (d.m < 0 || d.n < 0) throw DomainError("degree indices must be nonnegative");
  // The ladder subtracts terms that can dwarf the final value, so the table
  // is built in double-double and rounded once at the end.
  using dd::Cdd;
  const int m = d.m, n = d.n, stride = n + 1;
  const Cdd z1 = dd::from(p.z1);
  const Cdd z2 = dd::from(p.z2);
  std::vector<Cdd> t((m + 1) * stride);
  t[0] = dd::from(cplx(1.0));
  for (int j = 1; j <= n; ++j) t[j] = dd::mul(z2, t[j - 1]);
  for (int i = 0; i < m; ++i) {
    const Cdd* row = &t[i * stride];
    Cdd* next = &t[(i + 1) * stride];
    for (int j = 0; j <= n; ++j) {
      next[j] = dd::mul(z1, row[j]);
      if (j > 0) next[j] = dd::sub(next[j], dd::mul(row[j - 1], double(j)));
    }
  }
  std::vector<cplx> h((m + 1) * stride);
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = dd::to_complex(t[k]);
  return h;
}

cplx eval_hermite(const DegreePair& d, const ComplexPoint& p, EvalMethod method) {
  switch (method) {
    case EvalMethod::direct:
      return eval_direct(d, p);
    case EvalMethod::recurrence:
      return eval_hermite_table(d, p)[d.m * (d.n + 1) + d.n];
    case EvalMethod::hermite1d:
      return eval_hermite1d_sum(d, p);
    case EvalMethod::laguerre_diagonal:
      return eval_laguerre_diagonal(d, p);
  }
  return {};
}

namespace {

// Shared rescaled ladder: T_{i+1,j} = (lam z1 T_{i,j} - lam^2 sqrt(j) T_{i,j-1}) / sqrt(i+1),
// first row T_{0,j+1} = lam z2 T_{0,j} / sqrt(j+1).  lam = 1 gives the
// plain 1/sqrt(m!n!) normalization.
std::vector<cplx> normalized_table(const DegreePair& d, double lam, const ComplexPoint& p) {
  if (d.m < 0 || d.n < 0) throw DomainError("degree indices must be nonnegative");
  const int m = d.m, n = d.n, stride = n + 1;
  const double lam2 = lam * lam;
  std::vector<cplx> t((m + 1) * stride);
  t[0] = 1.0;
  for (int j = 1; j <= n; ++j) t[j] = lam * p.z2 * t[j - 1] / std::sqrt(double(j));
  for (int i = 0; i < m; ++i) {
    const cplx* row = &t[i * stride];
    cplx* next = &t[(i + 1) * stride];
    const double inv = 1.0 / std::sqrt(double(i + 1));
    for (int j = 0; j <= n; ++j) {
      cplx v = lam * p.z1 * row[j];
      if (j > 0) v -= lam2 * std::sqrt(double(j)) * row[j - 1];
      next[j] = v * inv;
    }
  }
  return t;
}

}  // namespace

std::vector<cplx> eval_hermite_normalized_table(const DegreePair& d, const Alpha& a,
                                                const ComplexPoint& p) {
  return normalized_table(d, a.lambda(), p);
}

cplx eval_hermite_normalized(const DegreePair& d, const Alpha& a, const ComplexPoint& p) {
  return eval_hermite_normalized_table(d, a, p)[d.m * (d.n + 1) + d.n];
}

std::vector<cplx> eval_hermite_unit_normalized_table(const DegreePair& d, const ComplexPoint& p) {
  return normalized_table(d, 1.0, p);
}

cplx eval_hermite_unit_normalized(const DegreePair& d, const ComplexPoint& p) {
  return eval_hermite_unit_normalized_table(d, p)[d.m * (d.n + 1) + d.n];
}

VerificationReport generating_function_check(cplx s, cplx t, const ComplexPoint& p, int order,
                                             Tolerance tol) {
  const auto h = eval_hermite_table({order, order}, p);
  const int stride = order + 1;

  std::vector<cplx> sm(order + 1), tn(order + 1);
  sm[0] = 1.0;
  tn[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    sm[k] = sm[k - 1] * s / static_cast<double>(k);
    tn[k] = tn[k - 1] * t / static_cast<double>(k);
  }
  Kahan acc;
  for (int total = 0; total <= 2 * order; ++total) {
    for (int m = std::max(0, total - order); m <= std::min(order, total); ++m) {
      const int n = total - m;
      acc.add(sm[m] * tn[n] * h[m * stride + n]);
    }
  }

  const cplx reference = std::exp(p.z1 * s + p.z2 * t - s * t);

  // Tail of the double series bounded through the growth estimate
  // |H_{m,n}| <= sqrt(m!n!) e^{|z1||z2|}.
  const double ls = std::log(std::abs(s));
  const double lt = std::log(std::abs(t));
  const double zz = std::abs(p.z1) * std::abs(p.z2);
  double tail = 0.0;
  const int far = 2 * order + 64;
  for (int m = 0; m <= far; ++m) {
    for (int n = 0; n <= far; ++n) {
      if (m <= order && n <= order) continue;
      double lg = zz;
      if (m > 0) lg += m * ls;
      if (n > 0) lg += n * lt;
      lg -= 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
      tail += std::exp(lg);
    }
  }

  auto r = make_report("generating-function", "exponential-generating-function", acc.sum,
                       reference, tol,
                       {{"s", {s.real(), s.imag()}},
                        {"t", {t.real(), t.imag()}},
                        {"z1", {p.z1.real(), p.z1.imag()}},
                        {"z2", {p.z2.real(), p.z2.imag()}},
                        {"order", order},
                        {"tail_bound", tail}});
  return r;
}

VerificationReport partial_generating_check(PartialSum which, cplx s_or_t, int fixed_index,
                                            const ComplexPoint& p, int order, Tolerance tol) {
  const bool over_first = which == PartialSum::over_first_index;
  const auto h = over_first ? eval_hermite_table({order, fixed_index}, p)
                            : eval_hermite_table({fixed_index, order}, p);
  Kahan acc;
  cplx w = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) w *= s_or_t / static_cast<double>(k);
    acc.add(w * (over_first ? h[k * (fixed_index + 1) + fixed_index] : h[fixed_index * (order + 1) + k]));
  }
  const cplx reference = over_first
                             ? std::pow(p.z2 - s_or_t, fixed_index) * std::exp(p.z1 * s_or_t)
                             : std::pow(p.z1 - s_or_t, fixed_index) * std::exp(p.z2 * s_or_t);
  return make_report(over_first ? "partial-generating-first" : "partial-generating-second",
                     "partial-generating-function", acc.sum, reference, tol,
                     {{"parameter", {s_or_t.real(), s_or_t.imag()}},
                      {"fixed_index", fixed_index},
                      {"z1", {p.z1.real(), p.z1.imag()}},
                      {"z2", {p.z2.real(), p.z2.imag()}},
                      {"order", order}});
}

VerificationReport bound_check(const DegreePair& d, const ComplexPoint& p) {
  const cplx h = eval_hermite(d, p, EvalMethod::recurrence);
  const double log_h = std::log(std::abs(h));  // -inf for an exact zero is fine
  const double log_bound = 0.5 * (std::lgamma(d.m + 1.0) + std::lgamma(d.n + 1.0)) +
                           std::abs(p.z1) * std::abs(p.z2);
  VerificationReport r;
  r.id = "growth-bound";
  r.family = "growth-bound";
  r.inputs = {{"m", d.m},
              {"n", d.n},
              {"z1", {p.z1.real(), p.z1.imag()}},
              {"z2", {p.z2.real(), p.z2.imag()}},
              {"log_abs_value", log_h},
              {"log_bound", log_bound}};
  r.computed = log_h;
  r.reference = log_bound;
  r.abs_err = std::max(0.0, log_h - log_bound);
  r.rel_err = r.abs_err;
  r.tol_abs = 1e-12 * std::max(1.0, std::abs(log_bound));
  r.tol_rel = 0.0;
  r.passed = r.abs_err <= r.tol_abs;
  return r;
}

VerificationReport scaling_limit_check(const DegreePair& d, const ComplexPoint& p,
                                       const std::vector<double>& t_sequence, Tolerance tol) {
  const int m = d.m, n = d.n, stride = n + 1;
  const cplx monomial = std::pow(p.z1, m) * std::pow(p.z2, n);

  std::vector<double> errs;
  errs.reserve(t_sequence.size());
  for (double t : t_sequence) {
    // Scaled table G_{i,j} = t^{i+j} H_{i,j}(z1/t, z2/t):
    // G_{0,j} = z2^j, G_{i+1,j} = z1 G_{i,j} - j t^2 G_{i,j-1}.
    const double t2 = t * t;
    std::vector<cplx> g((m + 1) * stride);
    g[0] = 1.0;
    for (int j = 1; j <= n; ++j) g[j] = p.z2 * g[j - 1];
    for (int i = 0; i < m; ++i) {
      const cplx* row = &g[i * stride];
      cplx* next = &g[(i + 1) * stride];
      for (int j = 0; j <= n; ++j) {
        next[j] = p.z1 * row[j];
        if (j > 0) next[j] -= static_cast<double>(j) * t2 * row[j - 1];
      }
    }
    errs.push_back(std::abs(g[m * stride + n] - monomial));
  }

  // Monotone decrease is required over the second half of the path; early
  // terms may still sit in the pre-asymptotic regime.
  bool monotone = true;
  for (std::size_t k = t_sequence.size() / 2; k + 1 < errs.size(); ++k) {
    if (errs[k + 1] > errs[k] + 1e-15 + 1e-9 * errs[k]) monotone = false;
  }

  VerificationReport r;
  r.id = "scaling-limit";
  r.family = "scaling-limit";
  r.inputs = {{"m", m},
              {"n", n},
              {"z1", {p.z1.real(), p.z1.imag()}},
              {"z2", {p.z2.real(), p.z2.imag()}},
              {"t", t_sequence},
              {"errors", errs},
              {"monotone_tail", monotone}};
  r.computed = errs.empty() ? 0.0 : errs.back();
  r.reference = 0.0;
  r.tol_abs = std::max(tol.abs, 1e-6);
  r.tol_rel = 0.0;
  r.abs_err = std::abs(r.computed);
  r.rel_err = r.abs_err;
  r.passed = monotone && r.abs_err <= r.tol_abs;
  return r;
}

ComplexPoint contraction_arguments(double alpha, cplx u1, cplx u2) {
  const double sa = std::sqrt(alpha);
  const double inv = 1.0 / std::sqrt(1.0 - alpha);
  return {(u1 - sa * u2) * inv, (std::conj(u1) + sa * std::conj(u2)) * inv};
}

VerificationReport tilde_limit_check(const DegreePair& d, cplx u1, cplx u2,
                                     const std::vector<double>& alpha_sequence, Tolerance tol) {
  const double inv_sqrt2 = 0.7071067811865476;
  const cplx lim = std::pow((u1 - u2) * inv_sqrt2, d.m) * std::pow((std::conj(u1) + std::conj(u2)) * inv_sqrt2, d.n) *
                   std::exp(-0.5 * (std::lgamma(d.m + 1.0) + std::lgamma(d.n + 1.0)));

  std::vector<double> errs, errs_pi_scaled;
  for (double a : alpha_sequence) {
    const Alpha alpha(a);
    const cplx v = eval_hermite_normalized(d, alpha, contraction_arguments(a, u1, u2));
    errs.push_back(std::abs(v - lim));
    errs_pi_scaled.push_back(std::abs(v - lim / M_PI));
  }

  bool monotone = true;
  for (std::size_t k = alpha_sequence.size() / 2; k + 1 < errs.size(); ++k) {
    if (errs[k + 1] > errs[k] + 1e-15 + 1e-9 * errs[k]) monotone = false;
  }

  VerificationReport r;
  r.id = "contraction-limit";
  r.family = "contraction-limit";
  r.inputs = {{"m", d.m},
              {"n", d.n},
              {"u1", {u1.real(), u1.imag()}},
              {"u2", {u2.real(), u2.imag()}},
              {"alpha", alpha_sequence},
              {"errors", errs},
              {"errors_pi_scaled_reading", errs_pi_scaled},
              {"monotone_tail", monotone}};
  r.computed = errs.empty() ? 0.0 : errs.back();
  r.reference = 0.0;
  r.tol_abs = std::max(tol.abs, 1e-3);
  r.tol_rel = 0.0;
  r.abs_err = std::abs(r.computed);
  r.rel_err = r.abs_err;
  r.passed = monotone && r.abs_err <= r.tol_abs;
  return r;
}

std::vector<double> default_t_sequence(int count) {
  std::vector<double> t(count);
  for (int k = 1; k <= count; ++k) t[k - 1] = std::ldexp(1.0, -k);
  return t;
}

std::vector<double> default_alpha_sequence(int count) {
  std::vector<double> a(count);
  for (int k = 1; k <= count; ++k) a[k - 1] = 1.0 - std::ldexp(1.0, -k);
  return a;
}

}  // namespace h2v
