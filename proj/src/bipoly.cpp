#include "h2v/bipoly.hpp"

#include <algorithm>

namespace h2v {

void BiPoly::add_term(int e1, int e2, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto key = Exponents{e1, e2};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational BiPoly::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Leading-first order: the first key has maximal total degree.
  const auto& e = terms_.begin()->first;
  return e.first + e.second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly operator*(const GaussianRational& s, const BiPoly& p) {
  BiPoly r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.add_term(e.first, e.second, s * c);
  return r;
}

BiPoly BiPoly::diff(Var v) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (v == Var::z1) {
      if (e.first > 0) r.add_term(e.first - 1, e.second, GaussianRational(e.first) * c);
    } else {
      if (e.second > 0) r.add_term(e.first, e.second - 1, GaussianRational(e.second) * c);
    }
  }
  return r;
}

BiPoly BiPoly::subst_linear(const LinearForm& l1, const LinearForm& l2) const {
  BiPoly p1, p2;
  p1.add_term(1, 0, l1.a);
  p1.add_term(0, 1, l1.b);
  p1.add_term(0, 0, l1.c);
  p2.add_term(1, 0, l2.a);
  p2.add_term(0, 1, l2.b);
  p2.add_term(0, 0, l2.c);

  int max1 = 0, max2 = 0;
  for (const auto& [e, c] : terms_) {
    max1 = std::max(max1, e.first);
    max2 = std::max(max2, e.second);
  }
  std::vector<BiPoly> pow1(max1 + 1), pow2(max2 + 1);
  pow1[0] = BiPoly(GaussianRational(1));
  pow2[0] = BiPoly(GaussianRational(1));
  for (int k = 1; k <= max1; ++k) pow1[k] = pow1[k - 1] * p1;
  for (int k = 1; k <= max2; ++k) pow2[k] = pow2[k - 1] * p2;

  BiPoly r;
  for (const auto& [e, c] : terms_) r += c * (pow1[e.first] * pow2[e.second]);
  return r;
}

BiPoly BiPoly::swap_vars() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e.second, e.first, c);
  return r;
}

GaussianRational BiPoly::eval_exact(const GaussianRational& x1, const GaussianRational& x2) const {
  GaussianRational sum(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int k = 0; k < e.first; ++k) t *= x1;
    for (int k = 0; k < e.second; ++k) t *= x2;
    sum += t;
  }
  return sum;
}

std::complex<double> BiPoly::eval(std::complex<double> z1, std::complex<double> z2) const {
  int max1 = 0, max2 = 0;
  for (const auto& [e, c] : terms_) {
    max1 = std::max(max1, e.first);
    max2 = std::max(max2, e.second);
  }
  std::vector<std::complex<double>> p1(max1 + 1), p2(max2 + 1);
  p1[0] = 1.0;
  p2[0] = 1.0;
  for (int k = 1; k <= max1; ++k) p1[k] = p1[k - 1] * z1;
  for (int k = 1; k <= max2; ++k) p2[k] = p2[k - 1] * z2;
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * p1[e.first] * p2[e.second];
  return sum;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UniPoly();
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const GaussianRational& s, const UniPoly& p) {
  std::vector<GaussianRational> r(p.c_.size());
  for (std::size_t k = 0; k < p.c_.size(); ++k) r[k] = s * p.c_[k];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::times_x() const {
  if (c_.empty()) return UniPoly();
  std::vector<GaussianRational> r(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k];
  return UniPoly(std::move(r));
}

BiPoly UniPoly::compose(const BiPoly& arg) const {
  BiPoly r;
  BiPoly power(GaussianRational(1));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) power = power * arg;
    if (!c_[k].is_zero()) r += c_[k] * power;
  }
  return r;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) sum = sum * x + c_[k].to_complex();
  return sum;
}

ExpWeightedPoly ExpWeightedPoly::diff(BiPoly::Var v) const {
  const BiPoly z_other = (v == BiPoly::Var::z1) ? BiPoly::var2() : BiPoly::var1();
  BiPoly p = poly_.diff(v);
  const GaussianRational s(sign_);
  p += s * (z_other * poly_);
  return ExpWeightedPoly(std::move(p), sign_);
}

void to_json(nlohmann::json& j, const BiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e1", e.first},
                     {"e2", e.second},
                     {"re", c.re_string()},
                     {"im", c.im_string()}});
  }
  j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, BiPoly& p) {
  p = BiPoly();
  for (const auto& t : j.at("terms")) {
    GaussianRational c(GaussianRational::parse_part(t.at("re").get<std::string>()),
                       GaussianRational::parse_part(t.at("im").get<std::string>()));
    p.add_term(t.at("e1").get<int>(), t.at("e2").get<int>(), c);
  }
}

}  // namespace h2v
