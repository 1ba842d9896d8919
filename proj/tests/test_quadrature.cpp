#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "h2v/quadrature.hpp"

using namespace h2v;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("rule construction basics") {
  CHECK_THROWS_AS(gauss_hermite_rule(0), RangeError);
  CHECK_THROWS_AS(gauss_hermite_rule(201), RangeError);

  auto r1 = gauss_hermite_rule(1);
  REQUIRE(r1.order() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));

  auto r2 = gauss_hermite_rule(2);
  REQUIRE(r2.order() == 2);
  CHECK(r2.nodes[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(r2.nodes[0] == -r2.nodes[1]);
  CHECK(r2.weights[0] == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-14));
  CHECK(r2.weights[1] == r2.weights[0]);
}

TEST_CASE("moment exactness and symmetry") {
  for (int N : {2, 4, 8, 16, 32, 64}) {
    auto r = gauss_hermite_rule(N);
    double wsum = 0.0;
    for (int i = 0; i < N; ++i) {
      wsum += r.weights[i];
      CHECK(r.nodes[i] == -r.nodes[N - 1 - i]);
      CHECK(r.weights[i] == r.weights[N - 1 - i]);
    }
    CHECK(std::abs(wsum - kSqrtPi) <= 1e-13);

    for (int k = 0; k <= 2 * N - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < N; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = hermite_weight_moment(k);
      if (k % 2 == 1) {
        CHECK(std::abs(s) <= 1e-12 * hermite_weight_moment(k - 1));
      } else {
        CHECK(std::abs(s - exact) <= 1e-12 * exact);
      }
    }
  }
}

TEST_CASE("rule csv export") {
  auto r = gauss_hermite_rule(2);
  std::ostringstream os;
  export_rule_csv(r, os);
  // Node strings are the shortest 16-digit form of the correctly rounded
  // doubles; the weight equals sqrt(pi)/2 to the last ulp (the 16-digit
  // decimal of the true value is not itself a representable double).
  std::istringstream is(os.str());
  std::string header, row0, row1;
  std::getline(is, header);
  std::getline(is, row0);
  std::getline(is, row1);
  CHECK(header == "node,weight");
  CHECK(row0.substr(0, row0.find(',')) == "-0.7071067811865476");
  CHECK(row1.substr(0, row1.find(',')) == "0.7071067811865476");
  const double w = std::stod(row0.substr(row0.find(',') + 1));
  CHECK(std::abs(w - 0.88622692545275801365) <= 1.2e-16);
  CHECK(row0.substr(row0.find(',') + 1) == row1.substr(row1.find(',') + 1));
}

TEST_CASE("standard gaussian moments on C^2") {
  auto r = gauss_hermite_rule(8);
  CHECK(std::abs(integrate_std_gaussian_c2(r, [](cplx, cplx) { return cplx(1.0); }) - 1.0) < 1e-14);
  CHECK(std::abs(integrate_std_gaussian_c2(r, [](cplx u1, cplx) { return cplx(std::norm(u1)); }) -
                 1.0) < 1e-13);
  CHECK(std::abs(integrate_std_gaussian_c2(
            r, [](cplx u1, cplx u2) { return u1 * u1 * std::conj(u2); })) < 1e-14);
}

TEST_CASE("tensor rule is exact for polynomial integrands") {
  SplitRng rng(0xbeef01u);
  auto r_small = gauss_hermite_rule(4);
  auto r_big = gauss_hermite_rule(12);
  for (std::uint64_t t = 0; t < 10; ++t) {
    // Random polynomial in (u1, conj u1, u2, conj u2) of total degree <= 6.
    struct Term {
      int a, b, c, d;
      double coef;
    };
    std::vector<Term> terms;
    for (int q = 0; q < 5; ++q) {
      Term tm;
      tm.a = static_cast<int>(rng.raw(1, 5 * t + q) % 3);
      tm.b = static_cast<int>(rng.raw(2, 5 * t + q) % 3);
      tm.c = static_cast<int>(rng.raw(3, 5 * t + q) % 2);
      tm.d = static_cast<int>(rng.raw(4, 5 * t + q) % 2);
      tm.coef = rng.uniform(5, 5 * t + q, -2.0, 2.0);
      terms.push_back(tm);
    }
    auto f = [&terms](cplx u1, cplx u2) {
      cplx s = 0.0;
      for (const auto& tm : terms)
        s += tm.coef * std::pow(u1, tm.a) * std::pow(std::conj(u1), tm.b) * std::pow(u2, tm.c) *
             std::pow(std::conj(u2), tm.d);
      return s;
    };
    const cplx a = integrate_std_gaussian_c2(r_small, f);
    const cplx b = integrate_std_gaussian_c2(r_big, f);
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("tensor integration is linear in the integrand") {
  auto r = gauss_hermite_rule(6);
  auto f = [](cplx u1, cplx u2) { return u1 * std::conj(u1) + u2; };
  auto g = [](cplx u1, cplx u2) { return std::exp(0.2 * u1) * std::conj(u2); };
  const cplx lhs = integrate_std_gaussian_c2(
      r, [&](cplx u1, cplx u2) { return 3.0 * f(u1, u2) - 2.0 * g(u1, u2); });
  const cplx rhs =
      3.0 * integrate_std_gaussian_c2(r, f) - 2.0 * integrate_std_gaussian_c2(r, g);
  CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("parallel grids match the serial reference bitwise") {
  auto r = gauss_hermite_rule(10);
  auto f2 = [](cplx u1, cplx u2) {
    return std::exp(0.3 * u1 - 0.2 * std::conj(u2)) * (1.0 + u1 * std::conj(u1) * u2);
  };
  const cplx p2 = integrate_std_gaussian_c2(r, f2);
  const cplx s2 = integrate_std_gaussian_c2_serial(r, f2);
  CHECK(p2.real() == s2.real());
  CHECK(p2.imag() == s2.imag());

  auto f1 = [](cplx u) { return std::exp(-0.4 * u) * std::norm(u); };
  const cplx p1 = integrate_std_gaussian_c1(r, f1);
  const cplx s1 = integrate_std_gaussian_c1_serial(r, f1);
  CHECK(p1.real() == s1.real());
  CHECK(p1.imag() == s1.imag());
}

TEST_CASE("batched integration equals scalar calls") {
  auto r = gauss_hermite_rule(6);
  std::vector<cplx> batch(3);
  integrate_std_gaussian_c2_batch(
      r,
      [](cplx u1, cplx u2, std::span<cplx> out) {
        out[0] = 1.0;
        out[1] = std::norm(u1);
        out[2] = u1 * std::conj(u2) * std::norm(u2);
      },
      batch);
  CHECK(std::abs(batch[0] - integrate_std_gaussian_c2(r, [](cplx, cplx) { return cplx(1.0); })) == 0.0);
  CHECK(std::abs(batch[1] - integrate_std_gaussian_c2(r, [](cplx u1, cplx) {
                   return cplx(std::norm(u1));
                 })) == 0.0);
  CHECK(std::abs(batch[2] - integrate_std_gaussian_c2(r, [](cplx u1, cplx u2) {
                   return u1 * std::conj(u2) * std::norm(u2);
                 })) == 0.0);
}

TEST_CASE("non-finite integrands are reported") {
  auto r = gauss_hermite_rule(4);
  CHECK_THROWS_AS(integrate_std_gaussian_c2(
                      r, [](cplx u1, cplx) { return cplx(1.0) / (u1 - u1); }),
                  IntegrationError);
}

TEST_CASE("planar integration") {
  auto r = gauss_hermite_rule(32);
  auto gauss = [](double x, double y) { return std::exp(-x * x - y * y); };
  CHECK(std::abs(integrate_planar_r2(r, gauss) - std::numbers::pi) < 1e-12);

  auto moment = [](double x, double y) { return cplx(x * x * std::exp(-x * x - y * y)); };
  CHECK(std::abs(integrate_planar_r2(r, moment) - 0.5 * std::numbers::pi) < 1e-12);

  auto shifted = [](double x, double y) {
    return std::exp(cplx(-x * x - y * y) + cplx(0, 1) * x);
  };
  CHECK(std::abs(integrate_planar_r2(r, shifted) - std::numbers::pi * std::exp(-0.25)) < 1e-10);
}

TEST_CASE("measure substitution: jacobian and calibration") {
  for (double av : {0.25, 0.5, 0.75}) {
    Alpha a(av);
    MuAlphaSubstitution sub(a);
    const double closed = 4.0 * av / ((1.0 - av) * (1.0 - av));
    CHECK(std::abs(sub.jacobian_abs() - closed) <= 1e-12 * closed);
  }

  // Raw orthogonality integral at indices (0,0,0,0): the integrand reduces
  // to exp(-Re z1 z2) under the deformed measure and the value is the
  // Jacobian constant; at alpha = 1/2 it equals 8.
  auto r = gauss_hermite_rule(12);
  Alpha half(0.5);
  const cplx raw = integrate_mu_alpha(r, half, [](cplx z1, cplx z2) {
    return std::exp(-0.5 * (z1 * z2 + std::conj(z1 * z2)));
  });
  CHECK(std::abs(raw - 8.0) <= 1e-9 * 8.0);

  // Same integral on the diagonalized z-space route.
  const cplx raw_w19 = integrate_w19(r, half, [](cplx, cplx) { return cplx(1.0); });
  CHECK(std::abs(raw_w19 - 8.0) <= 1e-9 * 8.0);

  // Deformed-measure orthonormality at the lowest index: the normalized
  // ground function has unit norm, exactly the measure calibration.
  const double pf2 = (1.0 - 0.5) * (1.0 - 0.5) / (4.0 * 0.5);
  const cplx norm00 = integrate_mu_alpha(r, half, [&](cplx z1, cplx z2) {
    return pf2 * std::exp(-0.5 * (z1 * z2 + std::conj(z1 * z2)));
  });
  CHECK(std::abs(norm00 - 1.0) <= 1e-9);

  // First off-diagonal pair integrates to zero.
  const double l2 = half.lambda_sq();
  const cplx off = integrate_mu_alpha(r, half, [&](cplx z1, cplx z2) {
    return pf2 * l2 * z1 * std::conj(z2) * std::exp(-0.5 * (z1 * z2 + std::conj(z1 * z2)));
  });
  CHECK(std::abs(off) <= 1e-10);
}

TEST_CASE("monte carlo rejects empty sample sets") {
  CHECK_THROWS_AS(mc_integrate_gaussian_c1([](cplx) { return cplx(1.0); }, {0, 1}), RangeError);
}

TEST_CASE("monte carlo under complex gaussians") {
  MCConfig cfg{1000000, 0x5eedbeefULL};
  auto one = mc_integrate_gaussian_c1([](cplx) { return cplx(1.0); }, cfg);
  CHECK(one.value == cplx(1.0));
  CHECK(one.stderr_est == 0.0);

  auto m2 = mc_integrate_gaussian_c1([](cplx u) { return cplx(std::norm(u)); }, cfg);
  CHECK(std::abs(m2.value - 1.0) <= 4.0 * m2.stderr_est);

  auto ito11 = mc_integrate_gaussian_c1(
      [](cplx u) {
        const cplx h = u * std::conj(u) - 1.0;
        return h * std::conj(h);
      },
      cfg);
  CHECK(std::abs(ito11.value - 1.0) <= 4.0 * ito11.stderr_est);
}

TEST_CASE("monte carlo parallel equals serial") {
  MCConfig cfg{100000, 77};
  auto f = [](cplx u1, cplx u2) { return u1 * std::conj(u1) + 0.3 * u2; };
  auto a = mc_integrate_gaussian_c2(f, cfg);
  auto b = mc_integrate_gaussian_c2_serial(f, cfg);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
  CHECK(a.stderr_est == b.stderr_est);
}

TEST_CASE("quadrature and monte carlo agree on random polynomials") {
  SplitRng rng(0xfeed02u);
  auto r = gauss_hermite_rule(8);
  int checked = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const int a = static_cast<int>(rng.raw(1, t) % 4);
    const int b = static_cast<int>(rng.raw(2, t) % 4);
    const int c = static_cast<int>(rng.raw(3, t) % 3);
    const int d = static_cast<int>(rng.raw(4, t) % 3);
    const double coef = rng.uniform(5, t, -3.0, 3.0);
    auto f = [=](cplx u1, cplx u2) {
      return coef * std::pow(u1, a) * std::pow(std::conj(u1), b) * std::pow(u2, c) *
             std::pow(std::conj(u2), d);
    };
    const cplx exact = integrate_std_gaussian_c2(r, f);
    MCConfig cfg{1000000, 0x900d5eedULL + t};
    const auto mc = mc_integrate_gaussian_c2(f, cfg);
    if (mc.stderr_est > 0.0) {
      CHECK(std::abs(mc.value - exact) <= 4.0 * mc.stderr_est);
      ++checked;
    }
  }
  CHECK(checked >= 18);
}

TEST_CASE("importance-sampled z-space monte carlo matches the jacobian constant") {
  for (double av : {0.25, 0.5, 0.75}) {
    Alpha a(av);
    MCConfig cfg{400000, 0xabcdefULL};
    const auto mc = mc_integrate_w19(a, cfg);
    const double closed = 4.0 * av / ((1.0 - av) * (1.0 - av));
    CHECK(std::abs(mc.value - closed) <= 4.0 * mc.stderr_est);
  }
}
