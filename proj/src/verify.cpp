#include "h2v/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "h2v/hermite_exact.hpp"

namespace h2v {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, ...) {
  char buf[160];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

// Index pairs (m,n) with m+n <= degree, ordered by (m,n).
std::vector<DegreePair> band_pairs(int degree) {
  std::vector<DegreePair> p;
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; n + m <= degree; ++n) p.push_back({m, n});
  return p;
}

// Index pairs (m,n) with m,n <= degree.
std::vector<DegreePair> square_pairs(int degree) {
  std::vector<DegreePair> p;
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; n <= degree; ++n) p.push_back({m, n});
  return p;
}

nlohmann::ordered_json point_json(const ComplexPoint& p) {
  return {{"z1", {p.z1.real(), p.z1.imag()}}, {"z2", {p.z2.real(), p.z2.imag()}}};
}

}  // namespace

void SuiteConfig::validate() const {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  if (nodes_per_axis < max_degree + 1)
    throw DomainError("nodes_per_axis too small for exact orthogonality integrands");
  for (double a : alpha_list) Alpha{a};  // rejects endpoints
}

Reports orthogonality_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  const auto pairs = band_pairs(cfg.max_degree);
  const int stride = cfg.max_degree + 1;
  Reports out;

  for (double av : cfg.alpha_list) {
    const Alpha a(av);
    const MuAlphaSubstitution sub(a);

    std::vector<cplx> vals(pairs.size() * pairs.size());
    integrate_std_gaussian_c2_batch(
        rule,
        [&](cplx u1, cplx u2, std::span<cplx> out_vals) {
          const ComplexPoint z = sub.map(u1, u2);
          const auto table =
              eval_hermite_normalized_table({cfg.max_degree, cfg.max_degree}, a, z);
          std::size_t idx = 0;
          for (const auto& mn : pairs) {
            const cplx left = table[mn.m * stride + mn.n];
            for (const auto& pq : pairs) {
              out_vals[idx++] = left * std::conj(table[pq.m * stride + pq.n]);
            }
          }
        },
        vals);

    std::size_t idx = 0;
    for (const auto& mn : pairs) {
      for (const auto& pq : pairs) {
        const double want = (mn.m == pq.m && mn.n == pq.n) ? 1.0 : 0.0;
        auto r = make_report(
            fmt("orthonormal[a=%g,m=%d,n=%d,p=%d,q=%d]", av, mn.m, mn.n, pq.m, pq.n),
            "gaussian-orthonormality", vals[idx++], want, cfg.tol,
            {{"alpha", av}, {"m", mn.m}, {"n", mn.n}, {"p", pq.m}, {"q", pq.n}});
        out.push_back(std::move(r));
      }
    }

    // Raw deformed-weight integral at (0,0,0,0): equals 4a/(1-a)^2 and pins
    // the measure normalization and the substitution Jacobian at once.
    const double closed = 4.0 * av / ((1.0 - av) * (1.0 - av));
    const cplx raw_sub = integrate_mu_alpha(rule, a, [](cplx z1, cplx z2) {
      const cplx t = z1 * z2;
      return std::exp(cplx(-t.real(), 0.0));
    });
    out.push_back(make_report(fmt("raw-orthogonality-substitution[a=%g]", av),
                              "deformed-orthogonality", raw_sub, closed, {1e-9, 1e-9},
                              {{"alpha", av}}));

    const cplx raw_diag = integrate_w19(rule, a, [](cplx, cplx) { return cplx(1.0); });
    out.push_back(make_report(fmt("raw-orthogonality-diagonalized[a=%g]", av),
                              "deformed-orthogonality", raw_diag, closed, {1e-9, 1e-9},
                              {{"alpha", av}}));

    const auto mc = mc_integrate_w19(a, {cfg.mc_samples, cfg.seed});
    VerificationReport rmc;
    rmc.id = fmt("raw-orthogonality-mc[a=%g]", av);
    rmc.family = "deformed-orthogonality";
    rmc.inputs = {{"alpha", av}, {"samples", cfg.mc_samples}, {"stderr", mc.stderr_est}};
    rmc.computed = mc.value;
    rmc.reference = closed;
    rmc.tol_abs = 4.0 * mc.stderr_est;
    rmc.tol_rel = 0.0;
    rmc.finalize();
    out.push_back(std::move(rmc));
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

Reports hfunction_orthonormality(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  const auto pairs = band_pairs(cfg.max_degree);
  const int stride = cfg.max_degree + 1;
  Reports out;

  for (double av : cfg.alpha_list) {
    const Alpha a(av);
    const double pf2 = hermite_function_prefactor(a) * hermite_function_prefactor(a);
    std::vector<cplx> vals(pairs.size() * pairs.size());
    integrate_w19_batch(
        rule, a,
        [&](cplx z1, cplx z2, std::span<cplx> out_vals) {
          const auto table =
              eval_hermite_normalized_table({cfg.max_degree, cfg.max_degree}, a, {z1, z2});
          std::size_t idx = 0;
          for (const auto& mn : pairs) {
            const cplx left = pf2 * table[mn.m * stride + mn.n];
            for (const auto& pq : pairs)
              out_vals[idx++] = left * std::conj(table[pq.m * stride + pq.n]);
          }
        },
        vals);

    std::size_t idx = 0;
    for (const auto& mn : pairs) {
      for (const auto& pq : pairs) {
        const double want = (mn.m == pq.m && mn.n == pq.n) ? 1.0 : 0.0;
        out.push_back(make_report(
            fmt("h-orthonormal[a=%g,m=%d,n=%d,p=%d,q=%d]", av, mn.m, mn.n, pq.m, pq.n),
            "deformed-orthonormality", vals[idx++], want, cfg.tol,
            {{"alpha", av}, {"m", mn.m}, {"n", mn.n}, {"p", pq.m}, {"q", pq.n}}));
      }
    }
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

Reports ito_orthogonality(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const auto pairs = square_pairs(cfg.max_degree);
  const int stride = cfg.max_degree + 1;
  // Integrand degree reaches 4*max_degree in the real coordinates.
  const auto rule = gauss_hermite_rule(std::max(cfg.nodes_per_axis, 2 * cfg.max_degree + 1));

  std::vector<cplx> vals(pairs.size() * pairs.size());
  integrate_std_gaussian_c1_batch(
      rule,
      [&](cplx u, std::span<cplx> out_vals) {
        const auto table = eval_hermite_unit_normalized_table(
            {cfg.max_degree, cfg.max_degree}, {u, std::conj(u)});
        std::size_t idx = 0;
        for (const auto& mn : pairs) {
          const cplx left = table[mn.m * stride + mn.n];
          for (const auto& pq : pairs)
            out_vals[idx++] = left * std::conj(table[pq.m * stride + pq.n]);
        }
      },
      vals);

  Reports out;
  std::size_t idx = 0;
  for (const auto& mn : pairs) {
    for (const auto& pq : pairs) {
      const double want = (mn.m == pq.m && mn.n == pq.n) ? 1.0 : 0.0;
      out.push_back(make_report(
          fmt("ito-orthonormal[m=%d,n=%d,p=%d,q=%d]", mn.m, mn.n, pq.m, pq.n),
          "slice-orthonormality", vals[idx++], want, cfg.tol,
          {{"m", mn.m}, {"n", mn.n}, {"p", pq.m}, {"q", pq.n}}));
    }
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

namespace {

// Shared machinery for the reproducing-kernel pairing: batch-integrates
// h_{m,n}(z) conj(K(z, w)) d(mu) for all (m,n) in `pairs` at once, with the
// exponents accumulated before a single exp to avoid spurious overflow.
void reproducing_batch(const QuadratureRule& rule, const Alpha& a,
                       const std::vector<DegreePair>& pairs, int stride, const ComplexPoint& w,
                       std::span<cplx> results) {
  const double av = a.value();
  const double c = (1.0 + av * av) / (4.0 * av);
  const double dcoef = (1.0 - av * av) / (4.0 * av);
  const double kpf = (1.0 - av * av) * (1.0 - av * av) / (16.0 * av * av);
  const double pf = hermite_function_prefactor(a);
  const MuAlphaSubstitution sub(a);
  const int deg = stride - 1;

  integrate_std_gaussian_c2_batch(
      rule,
      [&](cplx u1, cplx u2, std::span<cplx> out_vals) {
        const ComplexPoint z = sub.map(u1, u2);
        const cplx t = z.z1 * z.z2;
        // -t/2 (damping in h) + Re t (from the measure substitution)
        // collapses to conj(t)/2.
        const cplx expo = 0.5 * std::conj(t) - c * (std::conj(t) + w.z1 * w.z2) +
                          dcoef * (std::conj(z.z1) * w.z1 + std::conj(z.z2) * w.z2);
        const cplx common = pf * kpf * std::exp(expo);
        const auto table = eval_hermite_normalized_table({deg, deg}, a, z);
        for (std::size_t k = 0; k < pairs.size(); ++k)
          out_vals[k] = common * table[pairs[k].m * stride + pairs[k].n];
      },
      results);
  const double jac = sub.jacobian_abs();
  for (auto& v : results) v *= jac;
}

}  // namespace

VerificationReport reproducing_property_check(const Alpha& a, const DegreePair& d,
                                              const ComplexPoint& w, const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  std::vector<DegreePair> pairs{d};
  std::vector<cplx> vals(1);
  reproducing_batch(rule, a, pairs, std::max(d.m, d.n) + 1, w, vals);
  auto r = make_report(fmt("reproducing[a=%g,m=%d,n=%d]", a.value(), d.m, d.n),
                       "reproducing-kernel", vals[0],
                       hermite_function(d, a, w).to_complex(), cfg.tol,
                       {{"alpha", a.value()}, {"m", d.m}, {"n", d.n}, {"w", point_json(w)}});
  r.runtime_ms = ms_since(t0);
  return r;
}

Reports reproducing_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  const auto pairs = square_pairs(cfg.max_degree);
  const int stride = cfg.max_degree + 1;
  SplitRng rng(cfg.seed);
  Reports out;

  for (double av : cfg.alpha_list) {
    const Alpha a(av);
    for (int pt = 0; pt < 3; ++pt) {
      const ComplexPoint w{rng.disc(31, 2 * pt, 1.5), rng.disc(31, 2 * pt + 1, 1.5)};
      std::vector<cplx> vals(pairs.size());
      reproducing_batch(rule, a, pairs, stride, w, vals);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        out.push_back(make_report(
            fmt("reproducing[a=%g,m=%d,n=%d,pt=%d]", av, pairs[k].m, pairs[k].n, pt),
            "reproducing-kernel", vals[k],
            hermite_function(pairs[k], a, w).to_complex(), cfg.tol,
            {{"alpha", av}, {"m", pairs[k].m}, {"n", pairs[k].n}, {"w", point_json(w)}}));
      }
    }
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

namespace {

void forward_batch(const QuadratureRule& rule, const Alpha& a,
                   const std::vector<DegreePair>& pairs, int stride, const ComplexPoint& z,
                   std::span<cplx> results) {
  const double pf = hermite_function_prefactor(a);
  const double lam = a.lambda();
  const double lam2 = a.lambda_sq();
  const MuAlphaSubstitution sub(a);
  const int deg = stride - 1;

  integrate_std_gaussian_c2_batch(
      rule,
      [&](cplx u1, cplx u2, std::span<cplx> out_vals) {
        const ComplexPoint wp = sub.map(u1, u2);
        // The damping of h, the conjugate damping inside the transform
        // kernel, and the substitution exponent cancel exactly.
        const cplx expo =
            lam * (z.z1 * std::conj(wp.z1) + z.z2 * std::conj(wp.z2)) - lam2 * z.z1 * z.z2;
        const cplx common = pf * pf * std::exp(expo);
        const auto table = eval_hermite_normalized_table({deg, deg}, a, wp);
        for (std::size_t k = 0; k < pairs.size(); ++k)
          out_vals[k] = common * table[pairs[k].m * stride + pairs[k].n];
      },
      results);
  const double jac = sub.jacobian_abs();
  for (auto& v : results) v *= jac;
}

}  // namespace

VerificationReport bargmann_forward_check(const Alpha& a, const DegreePair& d,
                                          const ComplexPoint& z, const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  std::vector<DegreePair> pairs{d};
  std::vector<cplx> vals(1);
  forward_batch(rule, a, pairs, std::max(d.m, d.n) + 1, z, vals);
  auto r = make_report(fmt("transform-forward[a=%g,m=%d,n=%d]", a.value(), d.m, d.n),
                       "transform-forward", vals[0], phi_basis(d, z), cfg.tol,
                       {{"alpha", a.value()}, {"m", d.m}, {"n", d.n}, {"z", point_json(z)}});
  r.runtime_ms = ms_since(t0);
  return r;
}

VerificationReport kernel_A_composition_check(const Alpha& a, const ComplexPoint& z,
                                              const ComplexPoint& w, const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  const double pf = hermite_function_prefactor(a);
  const double lam = a.lambda();
  const double lam2 = a.lambda_sq();
  const MuAlphaSubstitution sub(a);

  // A(w; conj u, conj v) conj(A(z; conj u, conj v)) with the Gaussian
  // dampings and the substitution exponent cancelled analytically.
  const cplx result =
      sub.jacobian_abs() *
      integrate_std_gaussian_c2(rule, [&](cplx g1, cplx g2) {
        const ComplexPoint uv = sub.map(g1, g2);
        const cplx expo = lam * (w.z1 * std::conj(uv.z1) + w.z2 * std::conj(uv.z2) +
                                 std::conj(z.z1) * uv.z1 + std::conj(z.z2) * uv.z2) -
                          lam2 * (w.z1 * w.z2 + std::conj(z.z1) * std::conj(z.z2));
        return pf * pf * std::exp(expo);
      });

  const cplx reference = std::exp(w.z1 * std::conj(z.z1) + w.z2 * std::conj(z.z2));
  auto r = make_report(fmt("transform-kernel-composition[a=%g]", a.value()),
                       "transform-kernel-composition", result, reference, cfg.tol,
                       {{"alpha", a.value()}, {"z", point_json(z)}, {"w", point_json(w)}});
  r.runtime_ms = ms_since(t0);
  return r;
}

namespace {

// Inverse transform of the monomial basis, under both weight readings:
// results[k] uses the full Gaussian, results[K+k] the half-exponent weight.
void inverse_batch(const QuadratureRule& rule, const Alpha& a,
                   const std::vector<DegreePair>& pairs, int stride, const ComplexPoint& p,
                   std::span<cplx> results) {
  const double pf = hermite_function_prefactor(a);
  const double lam = a.lambda();
  const double lam2 = a.lambda_sq();
  const std::size_t K = pairs.size();
  const int deg = stride - 1;

  integrate_std_gaussian_c2_batch(
      rule,
      [&](cplx z1, cplx z2, std::span<cplx> out_vals) {
        const cplx expo = -0.5 * p.z1 * p.z2 +
                          lam * (std::conj(z1) * p.z1 + std::conj(z2) * p.z2) -
                          lam2 * std::conj(z1) * std::conj(z2);
        const cplx conj_a = pf * std::exp(expo);
        const double half_weight = std::exp(0.5 * (std::norm(z1) + std::norm(z2)));
        // Monomial table z1^m z2^n / sqrt(m! n!).
        std::vector<cplx> phi(static_cast<std::size_t>(stride) * stride);
        phi[0] = 1.0;
        for (int m = 1; m <= deg; ++m)
          phi[m * stride] = phi[(m - 1) * stride] * z1 / std::sqrt(double(m));
        for (int m = 0; m <= deg; ++m)
          for (int n = 1; n <= deg; ++n)
            phi[m * stride + n] = phi[m * stride + n - 1] * z2 / std::sqrt(double(n));
        for (std::size_t k = 0; k < K; ++k) {
          const cplx v = conj_a * phi[pairs[k].m * stride + pairs[k].n];
          out_vals[k] = v;
          out_vals[K + k] = v * half_weight;
        }
      },
      results);
}

}  // namespace

VerificationReport bargmann_inverse_roundtrip(const Alpha& a, const DegreePair& d,
                                              const ComplexPoint& p, const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  std::vector<DegreePair> pairs{d};
  std::vector<cplx> vals(2);
  inverse_batch(rule, a, pairs, std::max(d.m, d.n) + 1, p, vals);
  const cplx reference = hermite_function(d, a, p).to_complex();
  auto r = make_report(fmt("transform-inverse[a=%g,m=%d,n=%d]", a.value(), d.m, d.n),
                       "transform-inverse", vals[0], reference, cfg.tol,
                       {{"alpha", a.value()},
                        {"m", d.m},
                        {"n", d.n},
                        {"p", point_json(p)},
                        {"residual_half_weight", std::abs(vals[1] - reference)}});
  r.runtime_ms = ms_since(t0);
  return r;
}

Reports bargmann_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  const auto pairs = square_pairs(cfg.max_degree);
  const int stride = cfg.max_degree + 1;
  SplitRng rng(cfg.seed);
  Reports out;

  for (double av : cfg.alpha_list) {
    const Alpha a(av);

    for (int pt = 0; pt < 3; ++pt) {
      const ComplexPoint z{rng.disc(41, 2 * pt, 2.0), rng.disc(41, 2 * pt + 1, 2.0)};
      std::vector<cplx> vals(pairs.size());
      forward_batch(rule, a, pairs, stride, z, vals);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        out.push_back(make_report(
            fmt("transform-forward[a=%g,m=%d,n=%d,pt=%d]", av, pairs[k].m, pairs[k].n, pt),
            "transform-forward", vals[k], phi_basis(pairs[k], z), cfg.tol,
            {{"alpha", av}, {"m", pairs[k].m}, {"n", pairs[k].n}, {"z", point_json(z)}}));
      }
    }

    for (int pt = 0; pt < 4; ++pt) {
      const ComplexPoint z{rng.disc(42, 2 * pt, 2.0), rng.disc(42, 2 * pt + 1, 2.0)};
      const ComplexPoint w{rng.disc(43, 2 * pt, 2.0), rng.disc(43, 2 * pt + 1, 2.0)};
      auto r = kernel_A_composition_check(a, z, w, cfg);
      r.id = fmt("transform-kernel-composition[a=%g,pt=%d]", av, pt);
      out.push_back(std::move(r));
    }

    const int inv_degree = std::min(cfg.max_degree, 3);
    const auto inv_pairs = square_pairs(inv_degree);
    for (int pt = 0; pt < 2; ++pt) {
      const ComplexPoint p{rng.disc(44, 2 * pt, 1.5), rng.disc(44, 2 * pt + 1, 1.5)};
      std::vector<cplx> vals(2 * inv_pairs.size());
      inverse_batch(rule, a, inv_pairs, inv_degree + 1, p, vals);
      for (std::size_t k = 0; k < inv_pairs.size(); ++k) {
        const cplx reference = hermite_function(inv_pairs[k], a, p).to_complex();
        out.push_back(make_report(
            fmt("transform-inverse[a=%g,m=%d,n=%d,pt=%d]", av, inv_pairs[k].m, inv_pairs[k].n,
                pt),
            "transform-inverse", vals[k], reference, cfg.tol,
            {{"alpha", av},
             {"m", inv_pairs[k].m},
             {"n", inv_pairs[k].n},
             {"p", point_json(p)},
             {"residual_half_weight", std::abs(vals[inv_pairs.size() + k] - reference)}}));
      }
    }
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

VerificationReport integral_representation_check(const DegreePair& d, const ComplexPoint& p,
                                                 const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  const auto rule = gauss_hermite_rule(cfg.nodes_per_axis);
  static constexpr cplx iu[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  // The w-power couples to z1 through e^{i z1 w}, so reproducing H_{m,n}
  // takes w^n conj(w)^m; the mirrored placement lands on H_{n,m}.
  const cplx integral = integrate_planar_r2(rule, [&](double r, double s) {
    const cplx w(r, s);
    const cplx wb = std::conj(w);
    return std::pow(w, d.n) * std::pow(wb, d.m) *
           std::exp(-w * wb + cplx(0, 1) * (p.z1 * w + p.z2 * wb));
  });
  const cplx computed =
      integral / (std::numbers::pi * iu[(d.m + d.n) % 4]);
  const cplx reference = std::exp(-p.z1 * p.z2) * eval_hermite(d, p);

  auto r = make_report(fmt("integral-representation[m=%d,n=%d]", d.m, d.n),
                       "integral-representation", computed, reference, cfg.tol,
                       {{"m", d.m}, {"n", d.n}, {"z", point_json(p)}});
  if (std::abs(p.z1) > 4.0 || std::abs(p.z2) > 4.0)
    r.warning = "argument outside the quadrature accuracy envelope (|z| <= 4)";
  r.runtime_ms = ms_since(t0);
  return r;
}

Reports integral_representation_suite(const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  SplitRng rng(cfg.seed);
  Reports out;
  SuiteConfig local = cfg;
  local.nodes_per_axis = std::max(cfg.nodes_per_axis, 64);
  for (int pt = 0; pt < 4; ++pt) {
    const ComplexPoint p{rng.disc(51, 2 * pt, 2.0), rng.disc(51, 2 * pt + 1, 2.0)};
    for (int m = 0; m <= std::min(cfg.max_degree + 2, 6); ++m) {
      for (int n = 0; n <= std::min(cfg.max_degree + 2, 6); ++n) {
        auto r = integral_representation_check({m, n}, p, local);
        r.id = fmt("integral-representation[m=%d,n=%d,pt=%d]", m, n, pt);
        out.push_back(std::move(r));
      }
    }
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

namespace {

// Cyclic Jacobi on a real symmetric matrix; enough for the small Gram checks.
std::vector<double> symmetric_eigenvalues(std::vector<double> m, int n) {
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m[p * n + q] * m[p * n + q];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = 0.5 * (m[q * n + q] - m[p * n + p]) / apq;
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k * n + p], mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p * n + k], mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = m[i * n + i];
  return eig;
}

}  // namespace

double kernel_gram_min_eigenvalue_ratio(const Alpha& a, const std::vector<ComplexPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  // Hermitian Gram embedded as a real symmetric 2n x 2n matrix.
  std::vector<double> embed(4 * static_cast<std::size_t>(n) * n, 0.0);
  double trace = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx g = kernel_closed(a, {pts[i], pts[j]});
      embed[i * 2 * n + j] = g.real();
      embed[(i + n) * 2 * n + (j + n)] = g.real();
      embed[i * 2 * n + (j + n)] = -g.imag();
      embed[(i + n) * 2 * n + j] = g.imag();
      if (i == j) trace += g.real();
    }
  }
  const auto eig = symmetric_eigenvalues(std::move(embed), 2 * n);
  double lo = INFINITY;
  for (double e : eig) lo = std::min(lo, e);
  return lo / trace;
}

Reports kernel_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  SplitRng rng(cfg.seed);
  Reports out;
  constexpr int kPoints = 50;
  constexpr int kTruncation = 60;

  for (double av : cfg.alpha_list) {
    const Alpha a(av);
    const KernelArgs origin{{0.0, 0.0}, {0.0, 0.0}};
    const double closed0 = (1.0 - av * av) * (1.0 - av * av) / (16.0 * av * av);
    out.push_back(make_report(fmt("kernel-origin[a=%g]", av), "kernel-series",
                              kernel_truncated(a, origin, kTruncation), closed0, {1e-10, 1e-12},
                              {{"alpha", av}, {"truncation", kTruncation}}));
  }

  for (int j = 0; j < kPoints; ++j) {
    const double av = cfg.alpha_list[j % cfg.alpha_list.size()];
    const Alpha a(av);
    const KernelArgs k{{rng.disc(71, 2 * j, 2.0), rng.disc(71, 2 * j + 1, 2.0)},
                       {rng.disc(72, 2 * j, 2.0), rng.disc(72, 2 * j + 1, 2.0)}};
    out.push_back(make_report(fmt("kernel-series[a=%g,pt=%d]", av, j), "kernel-series",
                              kernel_truncated(a, k, kTruncation), kernel_closed(a, k),
                              {1e-8, 0.0},
                              {{"alpha", av}, {"z", point_json(k.z)}, {"w", point_json(k.w)}}));

    // Diagonal: closed norm sum vs partial sums, and tail positivity.
    const double closed = norm_sum_closed(a, k.z);
    const double partial80 = kernel_truncated(a, {k.z, k.z}, 80).real();
    out.push_back(make_report(fmt("norm-sum[a=%g,pt=%d]", av, j), "norm-sum", partial80, closed,
                              {1e-9, 0.0}, {{"alpha", av}, {"z", point_json(k.z)}}));
    bool tail_ok = true;
    for (int M = 0; M <= 40; M += 8)
      tail_ok = tail_ok && kernel_truncated(a, {k.z, k.z}, M).real() <= closed * (1.0 + 1e-13);
    out.push_back(make_report(fmt("norm-sum-tail-positivity[a=%g,pt=%d]", av, j), "norm-sum",
                              tail_ok ? 1.0 : 0.0, 1.0, {0.0, 0.0},
                              {{"alpha", av}, {"z", point_json(k.z)}}));
  }

  // Hermitian symmetry of the closed kernels.
  for (int j = 0; j < 20; ++j) {
    const double av = cfg.alpha_list[j % cfg.alpha_list.size()];
    const Alpha a(av);
    const KernelArgs k{{rng.disc(73, 2 * j, 2.0), rng.disc(73, 2 * j + 1, 2.0)},
                       {rng.disc(74, 2 * j, 2.0), rng.disc(74, 2 * j + 1, 2.0)}};
    const KernelArgs swapped{k.w, k.z};
    const cplx lhs = kernel_closed(a, k);
    out.push_back(make_report(fmt("kernel-hermitian[a=%g,pt=%d]", av, j), "kernel-symmetry", lhs,
                              std::conj(kernel_closed(a, swapped)), {1e-12, 1e-15},
                              {{"alpha", av}}));
  }

  // Positive semidefiniteness of 6-point Gram matrices.
  for (double av : cfg.alpha_list) {
    const Alpha a(av);
    std::vector<ComplexPoint> pts(6);
    for (int i = 0; i < 6; ++i)
      pts[i] = {rng.disc(75, 2 * i, 2.0), rng.disc(75, 2 * i + 1, 2.0)};
    const double ratio = kernel_gram_min_eigenvalue_ratio(a, pts);
    VerificationReport r;
    r.id = fmt("kernel-gram-psd[a=%g]", av);
    r.family = "kernel-positivity";
    r.inputs = {{"alpha", av}, {"min_eigenvalue_over_trace", ratio}};
    r.computed = ratio;
    r.reference = 0.0;
    r.tol_abs = 1e-10;
    r.tol_rel = 0.0;
    r.abs_err = std::max(0.0, -ratio);
    r.rel_err = r.abs_err;
    r.passed = ratio >= -1e-10;
    out.push_back(std::move(r));
  }

  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

Reports series_suite(const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  SplitRng rng(cfg.seed);
  Reports out;

  {
    auto r = generating_function_check(0.5, 0.5, {1.0, 1.0}, 25, {1e-12, 1e-15});
    r.id = "generating-function[s=0.5,t=0.5]";
    out.push_back(std::move(r));
  }
  {
    auto r = generating_function_check(1.0, -1.0, {2.0, 0.0}, 30, {1e-12, 1e-15});
    r.id = "generating-function[s=1,t=-1]";
    out.push_back(std::move(r));
  }
  for (int j = 0; j < 6; ++j) {
    const cplx s = rng.disc(81, 2 * j, 0.8);
    const cplx t = rng.disc(81, 2 * j + 1, 0.8);
    const ComplexPoint p{rng.disc(82, 2 * j, 1.5), rng.disc(82, 2 * j + 1, 1.5)};
    auto r = generating_function_check(s, t, p, 30, {1e-11, 1e-13});
    r.id = fmt("generating-function[pt=%d]", j);
    out.push_back(std::move(r));

    const int fixed = static_cast<int>(rng.raw(83, j) % 4);
    auto r1 = partial_generating_check(PartialSum::over_first_index, s, fixed, p, 34,
                                       {1e-11, 1e-13});
    r1.id = fmt("partial-generating-first[pt=%d]", j);
    out.push_back(std::move(r1));
    auto r2 = partial_generating_check(PartialSum::over_second_index, t, fixed, p, 34,
                                       {1e-11, 1e-13});
    r2.id = fmt("partial-generating-second[pt=%d]", j);
    out.push_back(std::move(r2));
  }
  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

Reports kernel_limit_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  Reports out;

  // Normalized-kernel convergence to the Bargmann kernel along a -> 1.
  // Points are pinned inside the unit polydisc of the limit variables; the
  // residual scales linearly in (1-a) with a point-size-dependent constant.
  const cplx u1(0.12, 0.08), u2(-0.10, 0.05), s1(0.09, -0.11), s2(0.07, 0.10);
  const cplx xi1 = (u1 - u2) / std::numbers::sqrt2;
  const cplx xi2 = (std::conj(u1) + std::conj(u2)) / std::numbers::sqrt2;
  const cplx ze1 = (s1 - s2) / std::numbers::sqrt2;
  const cplx ze2 = (std::conj(s1) + std::conj(s2)) / std::numbers::sqrt2;
  const cplx limit = std::exp(xi1 * std::conj(ze1) + xi2 * std::conj(ze2));

  std::vector<double> errs;
  const auto alphas = default_alpha_sequence(10);
  for (double av : alphas) {
    const Alpha a(av);
    const ComplexPoint z = contraction_arguments(av, u1, u2);
    const ComplexPoint w = contraction_arguments(av, s1, s2);
    errs.push_back(std::abs(tilde_kernel_closed(a, {z, w}) - limit));
  }
  bool monotone = true;
  for (std::size_t k = 0; k + 1 < errs.size(); ++k)
    if (errs[k + 1] > errs[k] + 1e-15) monotone = false;
  {
    VerificationReport r;
    r.id = "kernel-limit-bargmann";
    r.family = "kernel-limit";
    r.inputs = {{"alpha", alphas}, {"errors", errs}, {"monotone", monotone}};
    r.computed = errs.back();
    r.reference = 0.0;
    r.tol_abs = 1e-4;
    r.tol_rel = 0.0;
    r.abs_err = errs.back();
    r.rel_err = errs.back();
    r.passed = monotone && errs.back() <= r.tol_abs;
    out.push_back(std::move(r));
  }

  // Orthonormality of the limit monomials under the standard Gaussian.
  {
    const int deg = std::min(cfg.max_degree, 3);
    const auto pairs = square_pairs(deg);
    const int stride = deg + 1;
    const auto rule = gauss_hermite_rule(std::max(cfg.nodes_per_axis, 2 * deg + 1));
    std::vector<cplx> vals(pairs.size() * pairs.size());
    integrate_std_gaussian_c2_batch(
        rule,
        [&](cplx xi_1, cplx xi_2, std::span<cplx> out_vals) {
          std::vector<cplx> phi(static_cast<std::size_t>(stride) * stride);
          phi[0] = 1.0;
          for (int m = 1; m <= deg; ++m)
            phi[m * stride] = phi[(m - 1) * stride] * xi_1 / std::sqrt(double(m));
          for (int m = 0; m <= deg; ++m)
            for (int n = 1; n <= deg; ++n)
              phi[m * stride + n] = phi[m * stride + n - 1] * xi_2 / std::sqrt(double(n));
          std::size_t idx = 0;
          for (const auto& mn : pairs) {
            const cplx left = phi[mn.m * stride + mn.n];
            for (const auto& pq : pairs)
              out_vals[idx++] = left * std::conj(phi[pq.m * stride + pq.n]);
          }
        },
        vals);
    std::size_t idx = 0;
    for (const auto& mn : pairs) {
      for (const auto& pq : pairs) {
        const double want = (mn.m == pq.m && mn.n == pq.n) ? 1.0 : 0.0;
        out.push_back(make_report(
            fmt("limit-monomial-orthonormal[m=%d,n=%d,p=%d,q=%d]", mn.m, mn.n, pq.m, pq.n),
            "kernel-limit", vals[idx++], want, cfg.tol,
            {{"m", mn.m}, {"n", mn.n}, {"p", pq.m}, {"q", pq.n}}));
      }
    }
  }

  // Scaling limit: the (1,1) case has the closed-form error t^2.
  {
    const auto ts = default_t_sequence(12);
    auto r = scaling_limit_check({1, 1}, {1.0, 1.0}, ts, {0.0, 1e-6});
    const auto errs11 = r.inputs.at("errors").get<std::vector<double>>();
    double worst = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k)
      worst = std::max(worst, std::abs(errs11[k] - ts[k] * ts[k]));
    VerificationReport rr;
    rr.id = "scaling-limit-closed-form[m=1,n=1]";
    rr.family = "scaling-limit";
    rr.inputs = r.inputs;
    rr.computed = worst;
    rr.reference = 0.0;
    rr.tol_abs = 1e-12;
    rr.tol_rel = 0.0;
    rr.abs_err = worst;
    rr.rel_err = worst;
    rr.passed = worst <= rr.tol_abs;
    out.push_back(std::move(rr));

    for (auto dp : {DegreePair{0, 0}, {2, 1}, {3, 3}}) {
      auto rs = scaling_limit_check(dp, {cplx(0.8, 0.4), cplx(-0.6, 0.9)}, ts, {0.0, 1e-5});
      rs.id = fmt("scaling-limit[m=%d,n=%d]", dp.m, dp.n);
      out.push_back(std::move(rs));
    }
  }

  // Contraction limit of the normalized family (no 1/pi), degrees <= 3.
  {
    const cplx v1(0.35, 0.20), v2(-0.25, 0.15);
    const auto path = default_alpha_sequence(10);
    for (int m = 0; m <= std::min(cfg.max_degree, 3); ++m) {
      for (int n = 0; n <= std::min(cfg.max_degree, 3); ++n) {
        auto r = tilde_limit_check({m, n}, v1, v2, path, {0.0, 1e-3});
        r.id = fmt("contraction-limit[m=%d,n=%d]", m, n);
        out.push_back(std::move(r));
      }
    }
  }

  for (auto& r : out) r.runtime_ms = ms_since(t0) / out.size();
  return out;
}

Reports identity_suite(const IdentityCaps& caps) {
  Reports out;
  struct Item {
    const char* id;
    int cap;
    bool (*run)(int, bool);
  };
  const Item items[] = {
      {"exact-threeway-construction", caps.triple, sweep_triple_equality},
      {"exact-derivative-of-gaussian", caps.rodrigues, sweep_rodrigues},
      {"exact-ladder-operators", caps.raising_lowering, sweep_raising_lowering},
      {"exact-companion-link", caps.natural_link, sweep_natural_link},
      {"exact-laguerre-slice", caps.laguerre, sweep_laguerre_identity},
      {"exact-coefficient-kronecker", caps.coefficient, sweep_coefficient_identity_18},
  };
  for (const auto& item : items) {
    const auto t0 = Clock::now();
    const bool ok = item.run(item.cap, true);
    auto r = make_report(fmt("%s[cap=%d]", item.id, item.cap), "exact-identities",
                         ok ? 1.0 : 0.0, 1.0, {0.0, 0.0}, {{"cap", item.cap}});
    r.runtime_ms = ms_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

Reports bound_suite(int samples, int max_degree, double radius, std::uint64_t seed) {
  const auto t0 = Clock::now();
  SplitRng rng(seed);
  long violations = 0;
  double worst_margin = -INFINITY;
#pragma omp parallel for schedule(static) reduction(+ : violations) reduction(max : worst_margin)
  for (int i = 0; i < samples; ++i) {
    const int m = static_cast<int>(rng.raw(61, i) % (max_degree + 1));
    const int n = static_cast<int>(rng.raw(62, i) % (max_degree + 1));
    const cplx z = rng.disc(63, i, radius);
    const auto r = bound_check({m, n}, {z, std::conj(z)});
    if (!r.passed) ++violations;
    worst_margin = std::max(worst_margin, r.computed.real() - r.reference.real());
  }
  VerificationReport r;
  r.id = fmt("growth-bound-sweep[samples=%d,deg=%d,r=%g]", samples, max_degree, radius);
  r.family = "growth-bound";
  r.inputs = {{"samples", samples},
              {"max_degree", max_degree},
              {"radius", radius},
              {"worst_log_margin", worst_margin}};
  r.computed = static_cast<double>(violations);
  r.reference = 0.0;
  r.tol_abs = 0.0;
  r.tol_rel = 0.0;
  r.abs_err = static_cast<double>(violations);
  r.rel_err = r.abs_err;
  r.passed = violations == 0;
  r.runtime_ms = ms_since(t0);
  return {r};
}

}  // namespace h2v
