#pragma once

#include "h2v/bipoly.hpp"

namespace h2v {

// Exact expansions of the two-variable Hermite polynomials H_{m,n} and of the
// companion family H♮_{m,n}, together with machine checks of the identities
// they satisfy.  All arithmetic is over Gaussian rationals; every check below
// is an exact polynomial (or scalar) equality, not a floating comparison.

// H_{m,n} from its defining finite sum; coefficients are plain integers.
BiPoly hermite_exact_direct(const DegreePair& d);

// H_{m,n} built by the two-term ladder from H_{0,0} = 1.
BiPoly hermite_exact_recurrence(const DegreePair& d);

// H_{m,n} assembled from single-variable Hermite polynomials composed with
// (X1+X2)/2 and (X1-X2)/(2i).
BiPoly hermite_exact_via_1d(const DegreePair& d);

// Physicists' Hermite polynomial H_n (leading coefficient 2^n).
UniPoly hermite1d_exact(int n);

// Associated Laguerre polynomial L_n^{(k)}.
UniPoly laguerre_exact(int n, int k);

// H♮_{m,n} from its triple sum; coefficients are Gaussian rationals.
BiPoly natural_hermite_exact(const DegreePair& d);

// H♮_{m,n}(Y1,Y2) == H_{m,n}(Y1 + i Y2, Y1 - i Y2) and the reverse
// substitution, both as exact identities.
bool check_natural_link(const DegreePair& d);

// Derivative-of-Gaussian representation, its two partial variants, and the
// product-rule consequence that links them.
bool rodrigues_exact(const DegreePair& d);

// The four first-order ladder identities (raising by multiplication minus
// differentiation, lowering by differentiation).
bool raising_lowering_exact(const DegreePair& d);

// On the slice (x + i y, x - i y): Laguerre closed form (both branches) and
// the double-sum assembly from 1D Hermite polynomials in x and y.
bool laguerre_identity_exact(const DegreePair& d);

// Quadruple-sum coefficient identity whose value is m! n! δ_{m,p} δ_{n,q};
// evaluated exactly over Gaussian rationals.
bool coefficient_identity_18(int m, int n, int p, int q);
GaussianRational coefficient_identity_18_sum(int m, int n, int p, int q);

// Exhaustive sweeps used by the verification suites; each cell is pure and
// the loops parallelize over cells.
bool sweep_triple_equality(int max_degree, bool parallel = true);
bool sweep_rodrigues(int max_degree, bool parallel = true);
bool sweep_raising_lowering(int max_degree, bool parallel = true);
bool sweep_natural_link(int max_degree, bool parallel = true);
bool sweep_laguerre_identity(int max_degree, bool parallel = true);
bool sweep_coefficient_identity_18(int max_index, bool parallel = true);

}  // namespace h2v
