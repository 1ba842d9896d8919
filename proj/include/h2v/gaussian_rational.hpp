#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace h2v {

// Exact complex rational a + b*i.  Both parts are GMP rationals, which are
// kept canonical (positive denominator, lowest terms) by mpq_class itself.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  explicit GaussianRational(const mpz_class& v) : re_(v), im_(0) {}

  static GaussianRational from_ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q, mpq_class(0));
  }

  // i^k for any integer k (negative allowed).
  static GaussianRational i_power(long k);

  // Parses "p/q" (or "p") produced by part_string().
  static mpq_class parse_part(const std::string& s);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // "num/den" with the sign on the numerator; denominator always present.
  static std::string part_string(const mpq_class& q);
  std::string re_string() const { return part_string(re_); }
  std::string im_string() const { return part_string(im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re_, -a.im_);
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  mpq_class re_;
  mpq_class im_;
};

mpz_class factorial_z(unsigned long n);
mpz_class binom_z(unsigned long n, unsigned long k);

}  // namespace h2v
