#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <numbers>

#include "h2v/verify.hpp"

using namespace h2v;

namespace {

SuiteConfig small_cfg() {
  SuiteConfig cfg;
  cfg.alpha_list = {0.5};
  cfg.max_degree = 3;
  cfg.nodes_per_axis = 12;
  cfg.mc_samples = 200000;
  return cfg;
}

double max_abs_err(const Reports& rs) {
  double m = 0.0;
  for (const auto& r : rs) m = std::max(m, r.abs_err);
  return m;
}

bool all_passed(const Reports& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return !rs.empty();
}

}  // namespace

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.max_degree = 5;
  cfg.nodes_per_axis = 5;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.nodes_per_axis = 6;
  CHECK_NOTHROW(cfg.validate());
  cfg.alpha_list = {1.0};
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("orthogonality suite") {
  auto cfg = small_cfg();
  const auto rs = orthogonality_suite(cfg);
  CHECK(all_passed(rs));
  double quad_err = 0.0;
  for (const auto& r : rs) {
    if (r.id.find("-mc[") == std::string::npos) quad_err = std::max(quad_err, r.abs_err);
  }
  CHECK(quad_err < 1e-9);

  // The raw integral reports target 4a/(1-a)^2 = 8 at a = 1/2.
  int raw_count = 0;
  for (const auto& r : rs) {
    if (r.family == "deformed-orthogonality") {
      CHECK(r.reference.real() == doctest::Approx(8.0));
      ++raw_count;
    }
  }
  CHECK(raw_count == 3);  // substitution route, diagonalized route, MC
}

TEST_CASE("orthonormality spot values") {
  auto cfg = small_cfg();
  const auto rs = orthogonality_suite(cfg);
  int hits = 0;
  for (const auto& r : rs) {
    if (r.id == "orthonormal[a=0.5,m=1,n=0,p=1,q=0]") {
      CHECK(std::abs(r.computed - cplx(1.0)) < 1e-10);
      ++hits;
    }
    if (r.id == "orthonormal[a=0.5,m=1,n=0,p=0,q=1]") {
      CHECK(std::abs(r.computed) < 1e-10);
      ++hits;
    }
  }
  CHECK(hits == 2);
}

TEST_CASE("damped-function orthonormality spot values") {
  auto cfg = small_cfg();
  cfg.alpha_list = {0.25, 0.75};
  const auto rs = hfunction_orthonormality(cfg);
  int hits = 0;
  for (const auto& r : rs) {
    if (r.id == "h-orthonormal[a=0.25,m=2,n=1,p=2,q=1]") {
      CHECK(std::abs(r.computed - cplx(1.0)) < 1e-10);
      ++hits;
    }
    if (r.id == "h-orthonormal[a=0.75,m=2,n=1,p=1,q=2]") {
      CHECK(std::abs(r.computed) < 1e-10);
      ++hits;
    }
  }
  CHECK(hits == 2);
}

TEST_CASE("coincident-point kernel limit approaches the diagonal Bargmann value") {
  // At equal limit variables the target is e^{|xi1|^2 + |xi2|^2}.
  const cplx u1(0.1, 0.05), u2(-0.08, 0.12);
  const cplx xi1 = (u1 - u2) / std::numbers::sqrt2;
  const cplx xi2 = (std::conj(u1) + std::conj(u2)) / std::numbers::sqrt2;
  const double target = std::exp(std::norm(xi1) + std::norm(xi2));
  double prev = INFINITY;
  for (int k = 4; k <= 12; k += 2) {
    const double av = 1.0 - std::ldexp(1.0, -k);
    const Alpha a(av);
    const ComplexPoint z = contraction_arguments(av, u1, u2);
    const double err = std::abs(tilde_kernel_closed(a, {z, z}) - target);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("damped-function orthonormality via the diagonalized route") {
  auto cfg = small_cfg();
  cfg.alpha_list = {0.25, 0.75};
  const auto rs = hfunction_orthonormality(cfg);
  CHECK(all_passed(rs));
  CHECK(max_abs_err(rs) < 1e-9);
}

TEST_CASE("slice orthonormality") {
  auto cfg = small_cfg();
  cfg.max_degree = 4;
  const auto rs = ito_orthogonality(cfg);
  CHECK(all_passed(rs));
  CHECK(max_abs_err(rs) < 1e-9);
  // Spot value: the diagonal (1,1,1,1) inner product is exactly 1.
  bool found = false;
  for (const auto& r : rs) {
    if (r.id == "ito-orthonormal[m=1,n=1,p=1,q=1]") {
      found = true;
      CHECK(std::abs(r.computed - cplx(1.0)) < 1e-10);
    }
  }
  CHECK(found);
}

TEST_CASE("reproducing property") {
  auto cfg = small_cfg();
  cfg.nodes_per_axis = 20;
  cfg.tol = {1e-8, 1e-8};
  Alpha half(0.5);

  // Reproduces the ground function value at the origin.
  auto r0 = reproducing_property_check(half, {0, 0}, {0.0, 0.0}, cfg);
  CHECK(r0.passed);
  CHECK(std::abs(r0.reference - cplx(0.25 * std::sqrt(2.0))) < 1e-14);

  // Reproduces a zero of H_{1,1} (w1 w2 = 1).
  auto r1 = reproducing_property_check(half, {1, 1}, {2.0, 0.5}, cfg);
  CHECK(r1.passed);
  CHECK(std::abs(r1.reference) == 0.0);
  CHECK(std::abs(r1.computed) < 1e-8);

  Alpha quarter(0.25);
  auto r2 = reproducing_property_check(quarter, {2, 1}, {cplx(0.5, 0.0), cplx(0.0, -0.3)}, cfg);
  CHECK(r2.passed);
  CHECK(r2.abs_err < 1e-8);

  const auto rs = reproducing_suite(cfg);
  CHECK(all_passed(rs));
  CHECK(max_abs_err(rs) < 1e-8);
}

TEST_CASE("transform forward and kernel composition") {
  auto cfg = small_cfg();
  cfg.nodes_per_axis = 20;
  cfg.tol = {1e-8, 1e-8};
  Alpha half(0.5);

  auto f0 = bargmann_forward_check(half, {0, 0}, {0.0, 0.0}, cfg);
  CHECK(f0.passed);
  CHECK(f0.reference == cplx(1.0));

  auto f1 = bargmann_forward_check(half, {1, 0}, {2.0, 0.0}, cfg);
  CHECK(f1.passed);
  CHECK(f1.reference == cplx(2.0));

  auto f2 = bargmann_forward_check(half, {1, 1}, {1.0, 1.0}, cfg);
  CHECK(f2.passed);
  CHECK(f2.reference == cplx(1.0));

  cfg.tol = {1e-7, 1e-7};
  auto c0 = kernel_A_composition_check(half, {0.0, 0.0}, {0.0, 0.0}, cfg);
  CHECK(c0.passed);
  CHECK(c0.reference == cplx(1.0));

  auto c1 = kernel_A_composition_check(half, {1.0, 0.0}, {1.0, 0.0}, cfg);
  CHECK(c1.passed);
  CHECK(std::abs(c1.reference - std::exp(cplx(1.0))) < 1e-15);

  auto c2 = kernel_A_composition_check(half, {1.0, 0.0}, {cplx(0, 1), 0.0}, cfg);
  CHECK(c2.passed);
  CHECK(std::abs(c2.reference - std::exp(cplx(0.0, 1.0))) < 1e-15);
}

TEST_CASE("transform inverse under both weight readings") {
  auto cfg = small_cfg();
  cfg.nodes_per_axis = 24;
  cfg.tol = {1e-7, 1e-7};
  Alpha half(0.5);

  auto r0 = bargmann_inverse_roundtrip(half, {0, 0}, {0.0, 0.0}, cfg);
  CHECK(r0.passed);
  CHECK(std::abs(r0.reference - cplx(0.25 * std::sqrt(2.0))) < 1e-14);
  // The half-exponent reading misses by an order-one factor.
  CHECK(r0.inputs.at("residual_half_weight").get<double>() > 0.1);

  auto r1 = bargmann_inverse_roundtrip(half, {1, 0}, {1.0, 1.0}, cfg);
  CHECK(r1.passed);

  auto r2 = bargmann_inverse_roundtrip(half, {1, 1}, {1.0, 1.0}, cfg);
  CHECK(r2.passed);
  CHECK(std::abs(r2.reference) == 0.0);
}

TEST_CASE("bargmann suite") {
  auto cfg = small_cfg();
  cfg.nodes_per_axis = 20;
  cfg.max_degree = 2;
  cfg.tol = {1e-7, 1e-7};
  const auto rs = bargmann_suite(cfg);
  CHECK(all_passed(rs));
}

TEST_CASE("integral representation") {
  auto cfg = small_cfg();
  cfg.nodes_per_axis = 64;
  cfg.tol = {1e-6, 1e-6};

  auto r0 = integral_representation_check({0, 0}, {0.0, 0.0}, cfg);
  CHECK(r0.passed);
  CHECK(std::abs(r0.computed - cplx(1.0)) < 1e-12);

  auto r1 = integral_representation_check({1, 1}, {0.0, 0.0}, cfg);
  CHECK(r1.passed);
  CHECK(std::abs(r1.computed - cplx(-1.0)) < 1e-10);

  auto r2 = integral_representation_check({3, 2}, {cplx(1, 1), cplx(0.5, 0)}, cfg);
  CHECK(r2.passed);
  CHECK(r2.abs_err < 1e-6);
  CHECK(r2.warning.empty());

  auto r3 = integral_representation_check({1, 0}, {cplx(5, 0), 0.0}, cfg);
  CHECK(!r3.warning.empty());
}

TEST_CASE("limit suite") {
  auto cfg = small_cfg();
  cfg.max_degree = 3;
  const auto rs = kernel_limit_suite(cfg);
  CHECK(all_passed(rs));
  for (const auto& r : rs) {
    if (r.id == "kernel-limit-bargmann") {
      const auto errs = r.inputs.at("errors").get<std::vector<double>>();
      CHECK(errs.back() < 1e-4);
      CHECK(errs.front() > errs.back());
    }
  }
}

TEST_CASE("identity suite wraps the exact sweeps") {
  IdentityCaps caps{6, 4, 5, 4, 4, 3};
  const auto rs = identity_suite(caps);
  CHECK(rs.size() == 6);
  CHECK(all_passed(rs));
}

TEST_CASE("growth bound sweep") {
  const auto rs = bound_suite(2000, 10, 3.0, 0xb0471dULL);
  CHECK(all_passed(rs));
  CHECK(rs[0].computed == cplx(0.0));
}

TEST_CASE("report serialization round trip") {
  auto cfg = small_cfg();
  Alpha half(0.5);
  auto r = reproducing_property_check(half, {1, 1}, {cplx(0.3, 0.2), cplx(-0.1, 0.4)}, cfg);
  r.warning = "sample warning";
  const auto j = report_to_json(r, true);
  const auto back = report_from_json(j);
  CHECK(back.id == r.id);
  CHECK(back.family == r.family);
  CHECK(back.computed.real() == r.computed.real());
  CHECK(back.computed.imag() == r.computed.imag());
  CHECK(back.reference.real() == r.reference.real());
  CHECK(back.abs_err == r.abs_err);
  CHECK(back.rel_err == r.rel_err);
  CHECK(back.tol_abs == r.tol_abs);
  CHECK(back.tol_rel == r.tol_rel);
  CHECK(back.passed == r.passed);
  CHECK(back.runtime_ms == r.runtime_ms);
  CHECK(back.warning == r.warning);
  CHECK(back.inputs == r.inputs);

  // Without timing the serialized form is timing-free (idempotent output).
  const auto j2 = report_to_json(r, false);
  CHECK(!j2.contains("runtime_ms"));
}

TEST_CASE("csv summary line") {
  VerificationReport r;
  r.id = "check[x=1]";
  r.family = "demo";
  r.computed = 1.0;
  r.reference = 1.0;
  r.tol_abs = 1e-9;
  r.finalize();
  CHECK(summary_csv_header() == "id,family,max_err,passed");
  CHECK(summary_csv_line(r) == "check[x=1],demo,0,1");
}
