#include "h2v/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>

namespace h2v {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
const double kQuarterRootPi = std::pow(kPi, -0.25);

// Orthonormal Hermite values p_0..p_n at x (weight e^{-x^2}).
void orthonormal_values(int n, double x, std::vector<double>& p) {
  p.resize(n + 1);
  p[0] = kQuarterRootPi;
  if (n >= 1) p[1] = x * std::sqrt(2.0) * kQuarterRootPi;
  for (int k = 1; k < n; ++k)
    p[k + 1] = (x * p[k] - std::sqrt(0.5 * k) * p[k - 1]) / std::sqrt(0.5 * (k + 1));
}

// Number of eigenvalues of the Jacobi matrix strictly below x (Sturm/LDL^T).
int sturm_count(int n, double x) {
  int count = 0;
  double d = -x;
  if (d < 0) ++count;
  for (int k = 1; k < n; ++k) {
    const double b2 = 0.5 * k;  // squared off-diagonal sqrt(k/2)
    double dk = -x - b2 / d;
    if (dk == 0.0) dk = -1e-300;
    if (dk < 0) ++count;
    d = dk;
  }
  return count;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int N) {
  if (N < 1 || N > 200) throw RangeError("gauss_hermite_rule: order must be in [1, 200]");
  QuadratureRule rule;
  rule.nodes.assign(N, 0.0);
  rule.weights.assign(N, 0.0);

  const double bound = std::sqrt(2.0 * N + 1.0) + 1.0;
  std::vector<double> p;

  // Upper half (strictly positive eigenvalues); the symmetric partners and
  // the odd-N central zero are filled in by reflection.
  for (int idx = (N + 1) / 2; idx < N; ++idx) {
    double lo = 0.0, hi = bound;
    for (int it = 0; it < 80 && hi - lo > 1e-15 * bound; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(N, mid) <= idx)
        lo = mid;
      else
        hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {  // Newton polish on the orthonormal form
      orthonormal_values(N, x, p);
      const double deriv = std::sqrt(2.0 * N) * p[N - 1];
      if (deriv == 0.0) break;
      x -= p[N] / deriv;
    }
    rule.nodes[idx] = x;
    rule.nodes[N - 1 - idx] = -x;
  }

  for (int i = 0; i < N; ++i) {
    if (2 * i + 1 < N) continue;  // weights mirror with the nodes
    orthonormal_values(N - 1, rule.nodes[i], p);
    double christoffel = 0.0;
    for (int k = 0; k < N; ++k) christoffel += p[k] * p[k];
    rule.weights[i] = 1.0 / christoffel;
    rule.weights[N - 1 - i] = rule.weights[i];
  }

  // Pin the zeroth moment exactly: sum of weights = sqrt(pi).
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  const double scale = kSqrtPi / wsum;
  for (double& w : rule.weights) w *= scale;
  return rule;
}

double hermite_weight_moment(int k) {
  if (k % 2 == 1) return 0.0;
  double m = std::sqrt(kPi);  // Gamma(1/2)
  for (int j = 1; 2 * j <= k; ++j) m *= 0.5 * (2 * j - 1);
  return m;
}

cplx reduce_pairwise(std::span<const cplx> v) {
  if (v.size() <= 8) {
    cplx s = 0.0;
    for (const cplx& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return reduce_pairwise(v.first(half)) + reduce_pairwise(v.subspan(half));
}

namespace {

void check_finite(const cplx& v, std::atomic<bool>& bad) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad.store(true, std::memory_order_relaxed);
}

// Shared 2D core: partial sums per x-node, fixed inner order, one pairwise
// reduction at the end.
cplx grid_c1(const QuadratureRule& rule, const IntegrandC1& f, bool parallel) {
  const int N = rule.order();
  std::vector<cplx> partials(N);
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < N; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < N; ++j) {
      const cplx v = f(cplx(rule.nodes[i], rule.nodes[j]));
      check_finite(v, bad);
      acc += rule.weights[j] * v;
    }
    partials[i] = rule.weights[i] * acc;
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  return reduce_pairwise(partials) / kPi;
}

cplx grid_c2(const QuadratureRule& rule, const IntegrandC2& f, bool parallel) {
  const int N = rule.order();
  std::vector<cplx> partials(static_cast<std::size_t>(N) * N);
  std::atomic<bool> bad{false};
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const cplx u1(rule.nodes[i], rule.nodes[j]);
      cplx acc = 0.0;
      for (int k = 0; k < N; ++k) {
        cplx inner = 0.0;
        for (int l = 0; l < N; ++l) {
          const cplx v = f(u1, cplx(rule.nodes[k], rule.nodes[l]));
          check_finite(v, bad);
          inner += rule.weights[l] * v;
        }
        acc += rule.weights[k] * inner;
      }
      partials[static_cast<std::size_t>(i) * N + j] = rule.weights[i] * rule.weights[j] * acc;
    }
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  return reduce_pairwise(partials) / (kPi * kPi);
}

}  // namespace

cplx integrate_std_gaussian_c1(const QuadratureRule& rule, const IntegrandC1& f) {
  return grid_c1(rule, f, true);
}
cplx integrate_std_gaussian_c1_serial(const QuadratureRule& rule, const IntegrandC1& f) {
  return grid_c1(rule, f, false);
}
cplx integrate_std_gaussian_c2(const QuadratureRule& rule, const IntegrandC2& f) {
  return grid_c2(rule, f, true);
}
cplx integrate_std_gaussian_c2_serial(const QuadratureRule& rule, const IntegrandC2& f) {
  return grid_c2(rule, f, false);
}

void integrate_std_gaussian_c2_batch(const QuadratureRule& rule, const BatchIntegrandC2& fn,
                                     std::span<cplx> results) {
  const int N = rule.order();
  const std::size_t K = results.size();
  const std::size_t cells = static_cast<std::size_t>(N) * N;
  std::vector<cplx> partials(K * cells);
  std::atomic<bool> bad{false};
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      // Accumulation order replicates the scalar grid exactly, so batched
      // and one-at-a-time integration agree bitwise.
      std::vector<cplx> acc(K, cplx(0.0)), inner(K), vals(K);
      const cplx u1(rule.nodes[i], rule.nodes[j]);
      for (int k = 0; k < N; ++k) {
        std::fill(inner.begin(), inner.end(), cplx(0.0));
        for (int l = 0; l < N; ++l) {
          fn(u1, cplx(rule.nodes[k], rule.nodes[l]), vals);
          for (std::size_t q = 0; q < K; ++q) {
            check_finite(vals[q], bad);
            inner[q] += rule.weights[l] * vals[q];
          }
        }
        for (std::size_t q = 0; q < K; ++q) acc[q] += rule.weights[k] * inner[q];
      }
      const double wij = rule.weights[i] * rule.weights[j];
      for (std::size_t q = 0; q < K; ++q)
        partials[q * cells + static_cast<std::size_t>(i) * N + j] = wij * acc[q];
    }
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  for (std::size_t q = 0; q < K; ++q)
    results[q] = reduce_pairwise(std::span<const cplx>(partials).subspan(q * cells, cells)) /
                 (kPi * kPi);
}

void integrate_std_gaussian_c1_batch(const QuadratureRule& rule, const BatchIntegrandC1& fn,
                                     std::span<cplx> results) {
  const int N = rule.order();
  const std::size_t K = results.size();
  std::vector<cplx> partials(K * static_cast<std::size_t>(N));
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    std::vector<cplx> acc(K, cplx(0.0)), vals(K);
    for (int j = 0; j < N; ++j) {
      fn(cplx(rule.nodes[i], rule.nodes[j]), vals);
      for (std::size_t q = 0; q < K; ++q) {
        check_finite(vals[q], bad);
        acc[q] += rule.weights[j] * vals[q];
      }
    }
    for (std::size_t q = 0; q < K; ++q)
      partials[q * N + i] = rule.weights[i] * acc[q];
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  for (std::size_t q = 0; q < K; ++q)
    results[q] =
        reduce_pairwise(std::span<const cplx>(partials).subspan(q * N, N)) / kPi;
}

cplx integrate_planar_r2(const QuadratureRule& rule, const IntegrandR2& f) {
  const int N = rule.order();
  // w_i e^{x_i^2}: computed in log space; the weights decay like e^{-x^2} so
  // the product stays O(1).
  std::vector<double> wexp(N);
  for (int i = 0; i < N; ++i) wexp[i] = std::exp(std::log(rule.weights[i]) + rule.nodes[i] * rule.nodes[i]);
  std::vector<cplx> partials(N);
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < N; ++j) {
      const cplx v = f(rule.nodes[i], rule.nodes[j]);
      check_finite(v, bad);
      acc += wexp[j] * v;
    }
    partials[i] = wexp[i] * acc;
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  return reduce_pairwise(partials);
}

MuAlphaSubstitution::MuAlphaSubstitution(const Alpha& a)
    : alpha_(a.value()),
      sqrt_alpha_(std::sqrt(a.value())),
      inv_sqrt_1ma_(1.0 / std::sqrt(1.0 - a.value())),
      inv_1ma_(1.0 / (1.0 - a.value())) {
  // Real 4x4 linearization (columns: d/dRe u1, d/dIm u1, d/dRe u2, d/dIm u2).
  double m[4][4];
  const cplx steps[4] = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  for (int c = 0; c < 4; ++c) {
    const cplx du1 = (c < 2) ? steps[c] : cplx(0.0);
    const cplx du2 = (c < 2) ? cplx(0.0) : steps[c - 2];
    const double sa = sqrt_alpha_, inv = inv_sqrt_1ma_;
    const cplx z1 = (du1 - sa * du2) * inv;
    const cplx z2 = (std::conj(du1) + sa * std::conj(du2)) * inv;
    m[0][c] = z1.real();
    m[1][c] = z1.imag();
    m[2][c] = z2.real();
    m[3][c] = z2.imag();
  }
  // |det| by Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double factor = m[r][c] / m[c][c];
      for (int cc = c; cc < 4; ++cc) m[r][cc] -= factor * m[c][cc];
    }
  }
  jacobian_abs_ = std::abs(det);
  const double closed = 4.0 * alpha_ / ((1.0 - alpha_) * (1.0 - alpha_));
  if (std::abs(jacobian_abs_ - closed) > 1e-12 * closed)
    throw DomainError("substitution Jacobian disagrees with its closed form");
}

cplx integrate_mu_alpha(const QuadratureRule& rule, const Alpha& a, const IntegrandC2& f) {
  const MuAlphaSubstitution sub(a);
  const double jac = sub.jacobian_abs();
  return jac * integrate_std_gaussian_c2(rule, [&](cplx u1, cplx u2) {
    const ComplexPoint z = sub.map(u1, u2);
    return f(z.z1, z.z2) * std::exp(sub.re_z1z2(u1, u2));
  });
}

cplx integrate_w19(const QuadratureRule& rule, const Alpha& a, const IntegrandC2& f) {
  const double al = a.value();
  const double c1 = 0.25 * (1.0 - al);
  const double c2 = 0.25 * (1.0 - al) / al;
  const double s1 = 1.0 / std::sqrt(2.0 * c1);  // scale on the c1 axes
  const double s2 = 1.0 / std::sqrt(2.0 * c2);
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double volume = 1.0 / (4.0 * c1 * c2);

  const int N = rule.order();
  std::vector<cplx> partials(static_cast<std::size_t>(N) * N);
  std::atomic<bool> bad{false};
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double up = s1 * rule.nodes[i];  // (x1+x2)/sqrt(2)
      const double um = s2 * rule.nodes[j];  // (x1-x2)/sqrt(2)
      cplx acc = 0.0;
      for (int k = 0; k < N; ++k) {
        const double vp = s2 * rule.nodes[k];  // (y1+y2)/sqrt(2)
        cplx inner = 0.0;
        for (int l = 0; l < N; ++l) {
          const double vm = s1 * rule.nodes[l];  // (y1-y2)/sqrt(2)
          const cplx z1((up + um) * inv_sqrt2, (vp + vm) * inv_sqrt2);
          const cplx z2((up - um) * inv_sqrt2, (vp - vm) * inv_sqrt2);
          const cplx v = f(z1, z2);
          check_finite(v, bad);
          inner += rule.weights[l] * v;
        }
        acc += rule.weights[k] * inner;
      }
      partials[static_cast<std::size_t>(i) * N + j] = rule.weights[i] * rule.weights[j] * acc;
    }
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  return volume * reduce_pairwise(partials) / (kPi * kPi);
}

void integrate_w19_batch(const QuadratureRule& rule, const Alpha& a, const BatchIntegrandC2& fn,
                         std::span<cplx> results) {
  const double al = a.value();
  const double c1 = 0.25 * (1.0 - al);
  const double c2 = 0.25 * (1.0 - al) / al;
  const double s1 = 1.0 / std::sqrt(2.0 * c1);
  const double s2 = 1.0 / std::sqrt(2.0 * c2);
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double volume = 1.0 / (4.0 * c1 * c2);

  const int N = rule.order();
  const std::size_t K = results.size();
  const std::size_t cells = static_cast<std::size_t>(N) * N;
  std::vector<cplx> partials(K * cells);
  std::atomic<bool> bad{false};
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      std::vector<cplx> acc(K, cplx(0.0)), inner(K), vals(K);
      const double up = s1 * rule.nodes[i];
      const double um = s2 * rule.nodes[j];
      for (int k = 0; k < N; ++k) {
        const double vp = s2 * rule.nodes[k];
        std::fill(inner.begin(), inner.end(), cplx(0.0));
        for (int l = 0; l < N; ++l) {
          const double vm = s1 * rule.nodes[l];
          const cplx z1((up + um) * inv_sqrt2, (vp + vm) * inv_sqrt2);
          const cplx z2((up - um) * inv_sqrt2, (vp - vm) * inv_sqrt2);
          fn(z1, z2, vals);
          for (std::size_t q = 0; q < K; ++q) {
            check_finite(vals[q], bad);
            inner[q] += rule.weights[l] * vals[q];
          }
        }
        for (std::size_t q = 0; q < K; ++q) acc[q] += rule.weights[k] * inner[q];
      }
      const double wij = rule.weights[i] * rule.weights[j];
      for (std::size_t q = 0; q < K; ++q)
        partials[q * cells + static_cast<std::size_t>(i) * N + j] = wij * acc[q];
    }
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  for (std::size_t q = 0; q < K; ++q)
    results[q] = volume *
                 reduce_pairwise(std::span<const cplx>(partials).subspan(q * cells, cells)) /
                 (kPi * kPi);
}

namespace {

constexpr long kBlock = 4096;

template <typename Sampler>
MCResult mc_run(long samples, Sampler&& sample, bool parallel) {
  if (samples < 1) throw RangeError("monte carlo needs at least one sample");
  const long nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<cplx> sums(nblocks);
  std::vector<double> sq(nblocks, 0.0);
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static) if (parallel)
  for (long b = 0; b < nblocks; ++b) {
    cplx s = 0.0;
    double s2 = 0.0;
    const long end = std::min(samples, (b + 1) * kBlock);
    for (long i = b * kBlock; i < end; ++i) {
      const cplx v = sample(static_cast<std::uint64_t>(i));
      check_finite(v, bad);
      s += v;
      s2 += std::norm(v);
    }
    sums[b] = s;
    sq[b] = s2;
  }
  if (bad.load()) throw IntegrationError("integrand produced a non-finite value");
  const cplx total = reduce_pairwise(sums);
  double total_sq = 0.0;
  for (double x : sq) total_sq += x;
  MCResult r;
  r.value = total / static_cast<double>(samples);
  const double var = std::max(0.0, total_sq / samples - std::norm(r.value));
  r.stderr_est = std::sqrt(var / std::max<long>(1, samples - 1));
  return r;
}

}  // namespace

MCResult mc_integrate_gaussian_c1(const IntegrandC1& f, const MCConfig& cfg) {
  SplitRng rng(cfg.seed);
  return mc_run(cfg.samples, [&](std::uint64_t i) { return f(rng.complex_gaussian(10, i)); }, true);
}
MCResult mc_integrate_gaussian_c1_serial(const IntegrandC1& f, const MCConfig& cfg) {
  SplitRng rng(cfg.seed);
  return mc_run(cfg.samples, [&](std::uint64_t i) { return f(rng.complex_gaussian(10, i)); }, false);
}
MCResult mc_integrate_gaussian_c2(const IntegrandC2& f, const MCConfig& cfg) {
  SplitRng rng(cfg.seed);
  return mc_run(
      cfg.samples,
      [&](std::uint64_t i) { return f(rng.complex_gaussian(10, i), rng.complex_gaussian(11, i)); },
      true);
}
MCResult mc_integrate_gaussian_c2_serial(const IntegrandC2& f, const MCConfig& cfg) {
  SplitRng rng(cfg.seed);
  return mc_run(
      cfg.samples,
      [&](std::uint64_t i) { return f(rng.complex_gaussian(10, i), rng.complex_gaussian(11, i)); },
      false);
}

MCResult mc_integrate_w19(const Alpha& a, const MCConfig& cfg) {
  // Proposal: iid N(0, sigma^2) on the four real coordinates with
  // sigma^2 = 2/(1-alpha), wide enough that the importance weights have
  // finite variance for any alpha in (0,1).
  const double al = a.value();
  const double sigma2 = 2.0 / (1.0 - al);
  const double sigma = std::sqrt(sigma2);
  const double c1 = 0.25 * (1.0 - al);
  const double c2 = 0.25 * (1.0 - al) / al;
  const double norm_factor = 4.0 * sigma2 * sigma2;  // (2 pi sigma^2)^2 / pi^2
  SplitRng rng(cfg.seed);
  return mc_run(
      cfg.samples,
      [&](std::uint64_t i) {
        const double x1 = sigma * rng.normal(20, i);
        const double y1 = sigma * rng.normal(21, i);
        const double x2 = sigma * rng.normal(22, i);
        const double y2 = sigma * rng.normal(23, i);
        const double q = c1 * ((x1 + x2) * (x1 + x2) + (y1 - y2) * (y1 - y2)) +
                         c2 * ((x1 - x2) * (x1 - x2) + (y1 + y2) * (y1 + y2));
        const double v2 = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
        return cplx(norm_factor * std::exp(-q + 0.5 * v2 / sigma2));
      },
      true);
}

void export_rule_csv(const QuadratureRule& rule, std::ostream& out) {
  out << "node,weight\n";
  char line[80];
  for (int i = 0; i < rule.order(); ++i) {
    std::snprintf(line, sizeof(line), "%.16g,%.16g\n", rule.nodes[i], rule.weights[i]);
    out << line;
  }
}

}  // namespace h2v
