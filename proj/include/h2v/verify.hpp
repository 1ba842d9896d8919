#pragma once

#include <vector>

#include "h2v/kernels.hpp"
#include "h2v/quadrature.hpp"
#include "h2v/report.hpp"

namespace h2v {

struct SuiteConfig {
  std::vector<double> alpha_list{0.25, 0.5, 0.75};
  int max_degree = 4;
  int nodes_per_axis = 16;
  Tolerance tol{1e-9, 1e-9};
  std::uint64_t seed = 42;
  long mc_samples = 400000;

  // Exactness of the orthogonality integrands needs at least
  // max_degree + 1 nodes per axis.
  void validate() const;
};

using Reports = std::vector<VerificationReport>;

// Orthonormality of the normalized polynomials at the contraction-adapted
// arguments under the standard Gaussian on C^2, plus the raw deformed-weight
// integral at indices (0,0,0,0) computed on both integration routes and
// cross-checked by z-space Monte Carlo.
Reports orthogonality_suite(const SuiteConfig& cfg);

// Orthonormality of the damped functions under the deformed measure,
// evaluated on the z-space diagonalization route.
Reports hfunction_orthonormality(const SuiteConfig& cfg);

// Orthonormality of H_{m,n}(u, conj u)/sqrt(m! n!) under the standard
// Gaussian on C.
Reports ito_orthogonality(const SuiteConfig& cfg);

// <h_{m,n}, K(.,w)> under the deformed measure reproduces h_{m,n}(w).
VerificationReport reproducing_property_check(const Alpha& a, const DegreePair& d,
                                              const ComplexPoint& w, const SuiteConfig& cfg);
Reports reproducing_suite(const SuiteConfig& cfg);

// Forward transform maps the damped family to the monomial basis.
VerificationReport bargmann_forward_check(const Alpha& a, const DegreePair& d,
                                          const ComplexPoint& z, const SuiteConfig& cfg);

// Kernel composition: <A(w,.), A(z,.)> under the deformed measure equals the
// Bargmann reproducing kernel at (w, z).
VerificationReport kernel_A_composition_check(const Alpha& a, const ComplexPoint& z,
                                              const ComplexPoint& w, const SuiteConfig& cfg);

// Inverse transform maps the monomial basis back to the damped family.  The
// integral is taken against the full Gaussian e^{-|z1|^2-|z2|^2}/pi^2; the
// residual under the half-exponent weight reading is reported alongside
// (inputs["residual_half_weight"]).
VerificationReport bargmann_inverse_roundtrip(const Alpha& a, const DegreePair& d,
                                              const ComplexPoint& p, const SuiteConfig& cfg);
Reports bargmann_suite(const SuiteConfig& cfg);

// Plane-integral representation of e^{-z1 z2} H_{m,n}.
VerificationReport integral_representation_check(const DegreePair& d, const ComplexPoint& p,
                                                 const SuiteConfig& cfg);
Reports integral_representation_suite(const SuiteConfig& cfg);

// Kernel machinery: truncated series against the closed form on random
// points, norm-sum agreement and tail positivity, Hermitian symmetry, and
// positive semidefiniteness of small Gram matrices.
Reports kernel_suite(const SuiteConfig& cfg);

// Smallest eigenvalue of the Hermitian Gram matrix of the closed kernel at
// the given points, relative to its trace.
double kernel_gram_min_eigenvalue_ratio(const Alpha& a, const std::vector<ComplexPoint>& pts);

// Truncated exponential generating function checks (series vs closed form).
Reports series_suite(const SuiteConfig& cfg);

// Degenerate-parameter limits: normalized-kernel convergence to the Bargmann
// kernel along alpha -> 1, Gaussian orthonormality of the limit monomials,
// and the scaling/contraction limit checks of the evaluation module.
Reports kernel_limit_suite(const SuiteConfig& cfg);

// Exact identity sweeps wrapped as reports.  Caps follow the acceptance
// defaults and can be lowered (or raised) together via max_degree.
struct IdentityCaps {
  int triple = 12;
  int rodrigues = 8;
  int raising_lowering = 10;
  int natural_link = 8;
  int laguerre = 7;
  int coefficient = 5;
};
Reports identity_suite(const IdentityCaps& caps);

// Growth bound sweep on the conjugate slice z2 = conj(z1).
Reports bound_suite(int samples, int max_degree, double radius, std::uint64_t seed);

}  // namespace h2v
