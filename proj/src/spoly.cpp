#include "dirac/spoly.hpp"

#include <stdexcept>

namespace dirac {

SPoly::SPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

SPoly::SPoly(Rational c) {
  if (sgn(c) != 0) coeffs_.push_back(std::move(c));
}

SPoly SPoly::monomial(Rational c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = std::move(c);
  return SPoly(std::move(coeffs));
}

void SPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t SPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += sgn(c) != 0;
  return n;
}

SPoly SPoly::operator-() const {
  SPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return SPoly(std::move(out));
}

SPoly SPoly::monic() const {
  if (is_zero()) return {};
  SPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

MultiPoly SPoly::to_multipoly() const {
  MultiPoly out;
  MultiPoly power(1L);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) power *= energy_squared();
    if (sgn(coeffs_[k]) != 0) out += power * ComplexRational(coeffs_[k]);
  }
  return out;
}

std::string SPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Rational c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string power = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    if (k == 0)
      out += dirac::to_string(c);
    else if (c == 1)
      out += power;
    else
      out += dirac::to_string(c) + "*" + power;
  }
  return out;
}

std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw std::domain_error("SPoly division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
    if (sgn(f) == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {SPoly(std::move(quot)), SPoly(std::move(rem))};
}

SPoly gcd(const SPoly& a, const SPoly& b) {
  SPoly x = a;
  SPoly y = b;
  while (!y.is_zero()) {
    SPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatFunc::RatFunc(SPoly num) : num_(std::move(num)), den_(1L) {}

RatFunc::RatFunc(SPoly num, SPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  if (num.is_zero()) {
    den_ = SPoly(1L);
    return;
  }
  const SPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational lead = den.leading();
  num_ = num * SPoly(Rational(1 / lead));
  den_ = den * SPoly(Rational(1 / lead));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace dirac
