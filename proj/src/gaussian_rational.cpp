#include "h2v/gaussian_rational.hpp"

#include <stdexcept>

namespace h2v {

GaussianRational GaussianRational::i_power(long k) {
  long r = ((k % 4) + 4) % 4;
  switch (r) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational(mpq_class(0), mpq_class(1));
    case 2: return GaussianRational(-1);
    default: return GaussianRational(mpq_class(0), mpq_class(-1));
  }
}

std::string GaussianRational::part_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class GaussianRational::parse_part(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binom_z(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace h2v
