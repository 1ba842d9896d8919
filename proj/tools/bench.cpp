// Benchmark of the OpenMP kernels against their serial references.
#include <omp.h>

#include <cstdio>
#include <functional>
#include <string>

#include "h2v/hermite_exact.hpp"
#include "h2v/verify.hpp"

using namespace h2v;

namespace {

double time_of(const std::function<void()>& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    fn();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-42s %9.1f ms %9.1f ms %6.2fx\n", name, 1e3 * serial, 1e3 * parallel,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-42s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    const auto rule = gauss_hermite_rule(20);
    Alpha a(0.5);
    const MuAlphaSubstitution sub(a);
    auto integrand = [&](cplx u1, cplx u2) {
      const ComplexPoint z = sub.map(u1, u2);
      const auto t = eval_hermite_normalized_table({5, 5}, a, z);
      return t[35] * std::conj(t[35]);
    };
    double checksum = 0.0;
    const double ts =
        time_of([&] { checksum += integrate_std_gaussian_c2_serial(rule, integrand).real(); });
    const double tp = time_of([&] { checksum += integrate_std_gaussian_c2(rule, integrand).real(); });
    row("tensor grid C^2 (N=20, degree-5 pair)", ts, tp);
    std::printf("  checksum %.12f\n", checksum / 6.0);
  }

  {
    MCConfig cfg{2000000, 7};
    auto f = [](cplx u1, cplx u2) {
      const cplx h = u1 * std::conj(u1) * u2 - u2;
      return h * std::conj(h);
    };
    double checksum = 0.0;
    const double ts =
        time_of([&] { checksum += mc_integrate_gaussian_c2_serial(f, cfg).value.real(); });
    const double tp = time_of([&] { checksum += mc_integrate_gaussian_c2(f, cfg).value.real(); });
    row("monte carlo C^2 (2e6 samples)", ts, tp);
    std::printf("  checksum %.12f\n", checksum / 6.0);
  }

  {
    bool sink = true;
    const double ts = time_of([&] { sink = sink && sweep_triple_equality(10, false); });
    const double tp = time_of([&] { sink = sink && sweep_triple_equality(10, true); });
    row("exact three-way sweep (degree 10)", ts, tp);
    if (!sink) std::printf("sweep failed!\n");
  }

  {
    bool sink = true;
    const double ts = time_of([&] { sink = sink && sweep_rodrigues(8, false); });
    const double tp = time_of([&] { sink = sink && sweep_rodrigues(8, true); });
    row("exact derivative-of-gaussian sweep (8)", ts, tp);
    if (!sink) std::printf("sweep failed!\n");
  }

  {
    SuiteConfig cfg;
    cfg.alpha_list = {0.5};
    cfg.max_degree = 5;
    cfg.nodes_per_axis = 12;
    cfg.mc_samples = 100000;
    // The suite parallelizes inside the batched grid; wall time is the
    // interesting number here.
    const double t = time_of([&] { orthogonality_suite(cfg); }, 2);
    std::printf("%-42s %22.1f ms\n", "orthogonality suite (deg 5, N=12)", 1e3 * t);
  }

  return 0;
}
