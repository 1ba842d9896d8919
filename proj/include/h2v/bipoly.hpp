#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "h2v/gaussian_rational.hpp"

namespace h2v {

struct DegreePair {
  int m = 0;
  int n = 0;
};

// Exponent pair (e1, e2) of a monomial X1^e1 * X2^e2.
using Exponents = std::pair<int, int>;

// Canonical term order: graded lexicographic, leading term first
// (higher total degree first, ties broken on e1 then e2).
struct GradedLexLeading {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta > tb;
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  }
};

// Linear form a*Y1 + b*Y2 + c used for exact substitutions.
struct LinearForm {
  GaussianRational a;
  GaussianRational b;
  GaussianRational c;
};

// Sparse exact bivariate polynomial over Gaussian rationals.
// Invariant: no stored zero coefficients.
class BiPoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GradedLexLeading>;

  BiPoly() = default;
  explicit BiPoly(const GaussianRational& constant) { add_term(0, 0, constant); }

  static BiPoly monomial(int e1, int e2, const GaussianRational& c = GaussianRational(1)) {
    BiPoly p;
    p.add_term(e1, e2, c);
    return p;
  }
  static BiPoly var1() { return monomial(1, 0); }
  static BiPoly var2() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(int e1, int e2, const GaussianRational& c);
  GaussianRational coeff(int e1, int e2) const;

  int total_degree() const;  // -1 for the zero polynomial

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const GaussianRational& s, const BiPoly& p);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  enum class Var { z1, z2 };
  BiPoly diff(Var v) const;

  // Exact composition p(l1(Y1,Y2), l2(Y1,Y2)).
  BiPoly subst_linear(const LinearForm& l1, const LinearForm& l2) const;

  BiPoly swap_vars() const;

  GaussianRational eval_exact(const GaussianRational& x1, const GaussianRational& x2) const;
  std::complex<double> eval(std::complex<double> z1, std::complex<double> z2) const;

 private:
  TermMap terms_;
};

// Dense exact univariate polynomial, ascending coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const GaussianRational& c) { return UniPoly({c}); }

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  GaussianRational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GaussianRational(0);
  }

  UniPoly& operator+=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const GaussianRational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly times_x() const;

  // Exact composition p(arg) for a bivariate argument.
  BiPoly compose(const BiPoly& arg) const;

  std::complex<double> eval(std::complex<double> x) const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

// poly * exp(sign * z1 z2) with sign in {+1, -1}; closed under d/dz1, d/dz2.
class ExpWeightedPoly {
 public:
  ExpWeightedPoly(BiPoly poly, int weight_sign) : poly_(std::move(poly)), sign_(weight_sign) {}

  const BiPoly& poly() const { return poly_; }
  int weight_sign() const { return sign_; }

  // d/dz1 (P e^{s z1 z2}) = (dP/dz1 + s z2 P) e^{s z1 z2}, and symmetrically.
  ExpWeightedPoly diff(BiPoly::Var v) const;

 private:
  BiPoly poly_;
  int sign_;
};

void to_json(nlohmann::json& j, const BiPoly& p);
void from_json(const nlohmann::json& j, BiPoly& p);

}  // namespace h2v
