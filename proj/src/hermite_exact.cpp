#include "h2v/hermite_exact.hpp"

#include <stdexcept>
#include <vector>

namespace h2v {

namespace {

const GaussianRational kOne(1);

GaussianRational q_ratio(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q, mpq_class(0));
}

// 2^{-k} as an exact rational.
GaussianRational half_power(int k) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return GaussianRational::from_ratio(1, den);
}

// Coefficients gamma_s = sum_{k+l=s} C(m,k) C(n,l) i^{m-k} (-i)^{n-l},
// shared by the 1D-assembly of H_{m,n} and its (x,y)-slice variant.
std::vector<GaussianRational> one_d_assembly_coeffs(int m, int n) {
  std::vector<GaussianRational> gamma(m + n + 1);
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) {
      GaussianRational c(binom_z(m, k) * binom_z(n, l));
      c *= GaussianRational::i_power(m - k);
      c *= GaussianRational::i_power(-(n - l));  // (-i)^t = i^{-t}
      gamma[k + l] += c;
    }
  }
  return gamma;
}

// Power table arg^0 .. arg^max.
std::vector<BiPoly> powers_of(const BiPoly& arg, int max) {
  std::vector<BiPoly> p(max + 1);
  p[0] = BiPoly(kOne);
  for (int k = 1; k <= max; ++k) p[k] = p[k - 1] * arg;
  return p;
}

// H_j composed with a precomputed power table of its argument.
BiPoly hermite1d_at(const UniPoly& h, const std::vector<BiPoly>& argpow) {
  BiPoly r;
  for (int k = 0; k <= h.degree(); ++k) {
    const GaussianRational c = h.coeff(k);
    if (!c.is_zero()) r += c * argpow[k];
  }
  return r;
}

}  // namespace

namespace {
void require_valid(const DegreePair& d) {
  if (d.m < 0 || d.n < 0) throw std::invalid_argument("degree indices must be nonnegative");
}
}  // namespace

BiPoly hermite_exact_direct(const DegreePair& d) {
  require_valid(d);
  BiPoly p;
  const int kmax = std::min(d.m, d.n);
  for (int k = 0; k <= kmax; ++k) {
    mpz_class c = binom_z(d.m, k) * binom_z(d.n, k) * factorial_z(k);
    if (k % 2 == 1) c = -c;
    p.add_term(d.m - k, d.n - k, GaussianRational(c));
  }
  return p;
}

BiPoly hermite_exact_recurrence(const DegreePair& d) {
  require_valid(d);
  // H_{0,j} = X2^j, then H_{i+1,j} = X1 H_{i,j} - j H_{i,j-1}.
  std::vector<BiPoly> row(d.n + 1);
  row[0] = BiPoly(kOne);
  for (int j = 1; j <= d.n; ++j) row[j] = BiPoly::var2() * row[j - 1];
  const BiPoly x1 = BiPoly::var1();
  for (int i = 0; i < d.m; ++i) {
    std::vector<BiPoly> next(d.n + 1);
    for (int j = 0; j <= d.n; ++j) {
      next[j] = x1 * row[j];
      if (j > 0) next[j] -= GaussianRational(j) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[d.n];
}

BiPoly hermite_exact_via_1d(const DegreePair& d) {
  require_valid(d);
  const int total = d.m + d.n;
  const GaussianRational half = q_ratio(1, 2);
  const GaussianRational ihalf(mpq_class(0), mpq_class(1, 2));

  // u = (X1+X2)/2, v = (X1-X2)/(2i) = -i/2 X1 + i/2 X2.
  BiPoly u, v;
  u.add_term(1, 0, half);
  u.add_term(0, 1, half);
  v.add_term(1, 0, -ihalf);
  v.add_term(0, 1, ihalf);

  std::vector<UniPoly> h1d(total + 1);
  for (int j = 0; j <= total; ++j) h1d[j] = hermite1d_exact(j);
  const auto upow = powers_of(u, total);
  const auto vpow = powers_of(v, total);
  const auto gamma = one_d_assembly_coeffs(d.m, d.n);

  BiPoly sum;
  for (int s = 0; s <= total; ++s) {
    if (gamma[s].is_zero()) continue;
    sum += gamma[s] * (hermite1d_at(h1d[s], upow) * hermite1d_at(h1d[total - s], vpow));
  }
  return half_power(total) * sum;
}

UniPoly hermite1d_exact(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  UniPoly h0 = UniPoly::constant(kOne);
  if (n == 0) return h0;
  UniPoly h1({GaussianRational(0), GaussianRational(2)});
  for (int k = 1; k < n; ++k) {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    UniPoly next = GaussianRational(2) * h1.times_x() + GaussianRational(-2L * k) * h0;
    h0 = std::move(h1);
    h1 = std::move(next);
  }
  return h1;
}

UniPoly laguerre_exact(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("indices must be nonnegative");
  UniPoly l0 = UniPoly::constant(kOne);
  if (n == 0) return l0;
  UniPoly l1({GaussianRational(1 + k), GaussianRational(-1)});
  for (int j = 1; j < n; ++j) {
    // (j+1) L_{j+1} = (2j+k+1-x) L_j - (j+k) L_{j-1}
    UniPoly next = GaussianRational(2 * j + k + 1) * l1 + GaussianRational(-1) * l1.times_x() +
                   GaussianRational(-(j + k)) * l0;
    next = q_ratio(1, j + 1) * next;
    l0 = std::move(l1);
    l1 = std::move(next);
  }
  return l1;
}

BiPoly natural_hermite_exact(const DegreePair& d) {
  require_valid(d);
  const int m = d.m, n = d.n;
  const mpz_class mnfact = factorial_z(m) * factorial_z(n);
  BiPoly p;
  for (int k = 0; k <= std::min(m, n); ++k) {
    for (int i = 0; i <= m - k; ++i) {
      for (int j = 0; j <= n - k; ++j) {
        mpz_class den = factorial_z(k) * factorial_z(i) * factorial_z(j) *
                        factorial_z(m - k - i) * factorial_z(n - k - j);
        GaussianRational c = GaussianRational::from_ratio(mnfact, den);
        c *= GaussianRational::i_power(m + k - i - j);
        p.add_term(n - k - j + i, m - k - i + j, c);
      }
    }
  }
  return p;
}

bool check_natural_link(const DegreePair& d) {
  const GaussianRational i(mpq_class(0), mpq_class(1));
  const GaussianRational half = q_ratio(1, 2);
  const GaussianRational ihalf(mpq_class(0), mpq_class(1, 2));

  const BiPoly h = hermite_exact_direct(d);
  const BiPoly hnat = natural_hermite_exact(d);

  // H♮(Y1,Y2) = H(Y1 + i Y2, Y1 - i Y2)
  const BiPoly lhs = h.subst_linear({kOne, i, GaussianRational(0)},
                                    {kOne, -i, GaussianRational(0)});
  if (lhs != hnat) return false;

  // H(Y1,Y2) = H♮((Y1+Y2)/2, (Y1-Y2)/(2i))
  const BiPoly rhs = hnat.subst_linear({half, half, GaussianRational(0)},
                                       {-ihalf, ihalf, GaussianRational(0)});
  return rhs == h;
}

bool rodrigues_exact(const DegreePair& d) {
  const int m = d.m, n = d.n;
  const BiPoly h = hermite_exact_direct(d);
  const GaussianRational sign_mn(((m + n) % 2 == 0) ? 1 : -1);

  // (-1)^{m+n} e^{z1 z2} (d/dz1)^n (d/dz2)^m e^{-z1 z2} = H_{m,n}
  ExpWeightedPoly w(BiPoly(kOne), -1);
  for (int k = 0; k < n; ++k) w = w.diff(BiPoly::Var::z1);
  for (int k = 0; k < m; ++k) w = w.diff(BiPoly::Var::z2);
  if (sign_mn * w.poly() != h) return false;

  // (-1)^m e^{z1 z2} (d/dz2)^m (z2^n e^{-z1 z2}) = H_{m,n}
  ExpWeightedPoly w1(BiPoly::monomial(0, n), -1);
  for (int k = 0; k < m; ++k) w1 = w1.diff(BiPoly::Var::z2);
  if (GaussianRational(m % 2 == 0 ? 1 : -1) * w1.poly() != h) return false;

  // (-1)^n e^{z1 z2} (d/dz1)^n (z1^m e^{-z1 z2}) = H_{m,n}
  ExpWeightedPoly w2(BiPoly::monomial(m, 0), -1);
  for (int k = 0; k < n; ++k) w2 = w2.diff(BiPoly::Var::z1);
  if (GaussianRational(n % 2 == 0 ? 1 : -1) * w2.poly() != h) return false;

  // Product-rule consequence:
  // D1^n D2^m (-z1 e^{-z1 z2}) = -n D1^{n-1} D2^m e^{-z1 z2} - z1 D1^n D2^m e^{-z1 z2}
  auto derivs_of_weight = [](int a, int b) {
    ExpWeightedPoly e(BiPoly(kOne), -1);
    for (int k = 0; k < a; ++k) e = e.diff(BiPoly::Var::z1);
    for (int k = 0; k < b; ++k) e = e.diff(BiPoly::Var::z2);
    return e.poly();
  };
  ExpWeightedPoly lhs(GaussianRational(-1) * BiPoly::var1(), -1);
  for (int k = 0; k < n; ++k) lhs = lhs.diff(BiPoly::Var::z1);
  for (int k = 0; k < m; ++k) lhs = lhs.diff(BiPoly::Var::z2);
  BiPoly rhs = GaussianRational(-1) * (BiPoly::var1() * derivs_of_weight(n, m));
  if (n > 0) rhs -= GaussianRational(n) * derivs_of_weight(n - 1, m);
  return lhs.poly() == rhs;
}

bool raising_lowering_exact(const DegreePair& d) {
  const int m = d.m, n = d.n;
  const BiPoly h = hermite_exact_direct(d);
  const BiPoly zero;

  const BiPoly up_m = BiPoly::var1() * h - h.diff(BiPoly::Var::z2);
  if (up_m != hermite_exact_direct({m + 1, n})) return false;

  const BiPoly up_n = BiPoly::var2() * h - h.diff(BiPoly::Var::z1);
  if (up_n != hermite_exact_direct({m, n + 1})) return false;

  const BiPoly down_n = h.diff(BiPoly::Var::z2);
  const BiPoly want_n =
      (n > 0) ? GaussianRational(n) * hermite_exact_direct({m, n - 1}) : zero;
  if (down_n != want_n) return false;

  const BiPoly down_m = h.diff(BiPoly::Var::z1);
  const BiPoly want_m =
      (m > 0) ? GaussianRational(m) * hermite_exact_direct({m - 1, n}) : zero;
  return down_m == want_m;
}

bool laguerre_identity_exact(const DegreePair& d) {
  const int m = d.m, n = d.n;
  const GaussianRational i(mpq_class(0), mpq_class(1));

  // Slice variables: X1 -> x + i y, X2 -> x - i y.
  const BiPoly hsub = hermite_exact_direct(d).subst_linear(
      {kOne, i, GaussianRational(0)}, {kOne, -i, GaussianRational(0)});

  BiPoly xy2;  // x^2 + y^2
  xy2.add_term(2, 0, kOne);
  xy2.add_term(0, 2, kOne);

  BiPoly rhs;
  if (m >= n) {
    BiPoly base;  // x + i y
    base.add_term(1, 0, kOne);
    base.add_term(0, 1, i);
    BiPoly pw(kOne);
    for (int k = 0; k < m - n; ++k) pw = pw * base;
    GaussianRational c(factorial_z(n));
    if (n % 2 == 1) c = -c;
    rhs = c * (pw * laguerre_exact(n, m - n).compose(xy2));
  } else {
    BiPoly base;  // x - i y
    base.add_term(1, 0, kOne);
    base.add_term(0, 1, -i);
    BiPoly pw(kOne);
    for (int k = 0; k < n - m; ++k) pw = pw * base;
    GaussianRational c(factorial_z(m));
    if (m % 2 == 1) c = -c;
    rhs = c * (pw * laguerre_exact(m, n - m).compose(xy2));
  }
  if (hsub != rhs) return false;

  // Double-sum assembly from 1D Hermite polynomials in x and y.
  const int total = m + n;
  const auto gamma = one_d_assembly_coeffs(m, n);
  const auto xpow = powers_of(BiPoly::var1(), total);
  const auto ypow = powers_of(BiPoly::var2(), total);
  BiPoly sum;
  for (int s = 0; s <= total; ++s) {
    if (gamma[s].is_zero()) continue;
    sum += gamma[s] *
           (hermite1d_at(hermite1d_exact(s), xpow) * hermite1d_at(hermite1d_exact(total - s), ypow));
  }
  return hsub == half_power(total) * sum;
}

GaussianRational coefficient_identity_18_sum(int m, int n, int p, int q) {
  GaussianRational sum(0);
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) {
      for (int i = 0; i <= p; ++i) {
        for (int j = 0; j <= q; ++j) {
          if (k + l != i + j) continue;
          if (n + m - k - l != q + p - i - j) continue;
          GaussianRational t(binom_z(m, k) * binom_z(n, l) * binom_z(p, i) * binom_z(q, j) *
                             factorial_z(k + l) * factorial_z(n + m - k - l));
          t *= GaussianRational::i_power(m - k + q - j);
          t *= GaussianRational::i_power(-(n - l + p - i));
          sum += t;
        }
      }
    }
  }
  return half_power(p + q) * sum;
}

bool coefficient_identity_18(int m, int n, int p, int q) {
  GaussianRational want(0);
  if (m == p && n == q) want = GaussianRational(factorial_z(m) * factorial_z(n));
  return coefficient_identity_18_sum(m, n, p, q) == want;
}

namespace {

// Structural facts about H_{m,n} checked alongside the three-way equality:
// integer real coefficients, leading term X1^m X2^n, total degree m+n,
// swap symmetry H_{m,n}(X2,X1) = H_{n,m}(X1,X2).
bool triple_equality_cell(int m, int n) {
  const DegreePair d{m, n};
  const BiPoly direct = hermite_exact_direct(d);
  if (hermite_exact_recurrence(d) != direct) return false;
  if (hermite_exact_via_1d(d) != direct) return false;
  for (const auto& [e, c] : direct.terms()) {
    if (!c.is_integer()) return false;
  }
  if (direct.total_degree() != m + n) return false;
  if (direct.coeff(m, n) != GaussianRational(1)) return false;
  if (direct.swap_vars() != hermite_exact_direct({n, m})) return false;
  return true;
}

template <typename Cell>
bool sweep2(int max_degree, bool parallel, Cell cell) {
  bool ok = true;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(&& : ok) if (parallel)
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; n <= max_degree; ++n) ok = ok && cell(m, n);
  return ok;
}

}  // namespace

bool sweep_triple_equality(int max_degree, bool parallel) {
  return sweep2(max_degree, parallel, triple_equality_cell);
}

bool sweep_rodrigues(int max_degree, bool parallel) {
  return sweep2(max_degree, parallel, [](int m, int n) { return rodrigues_exact({m, n}); });
}

bool sweep_raising_lowering(int max_degree, bool parallel) {
  return sweep2(max_degree, parallel, [](int m, int n) { return raising_lowering_exact({m, n}); });
}

bool sweep_natural_link(int max_degree, bool parallel) {
  return sweep2(max_degree, parallel, [](int m, int n) { return check_natural_link({m, n}); });
}

bool sweep_laguerre_identity(int max_degree, bool parallel) {
  return sweep2(max_degree, parallel, [](int m, int n) { return laguerre_identity_exact({m, n}); });
}

bool sweep_coefficient_identity_18(int max_index, bool parallel) {
  const int side = max_index + 1;
  bool ok = true;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(&& : ok) if (parallel)
  for (int m = 0; m < side; ++m)
    for (int n = 0; n < side; ++n) {
      for (int p = 0; p < side; ++p)
        for (int q = 0; q < side; ++q) ok = ok && coefficient_identity_18(m, n, p, q);
    }
  return ok;
}

}  // namespace h2v
