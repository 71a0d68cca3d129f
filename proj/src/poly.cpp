#include "dirac/poly.hpp"


namespace dirac {

namespace {

constexpr std::array<const char*, kNumVars> kVarNames = {"p1", "p2", "p3", "m"};

// Rendering of one term inside a sum. `negative` receives the separator sign for
// real and purely imaginary coefficients; general complex coefficients are
// parenthesised and always joined with '+'.
std::string render_term(const ComplexRational& c, const std::string& body, bool& negative) {
  const bool constant = body.empty();
  negative = false;
  if (c.is_real() || sgn(c.re()) == 0) {
    const bool real = c.is_real();
    Rational mag = real ? c.re() : c.im();
    if (sgn(mag) < 0) {
      negative = true;
      mag = -mag;
    }
    std::string coef;
    if (real) {
      coef = (mag == 1 && !constant) ? "" : to_string(mag);
    } else {
      coef = mag == 1 ? "i" : to_string(mag) + "*i";
    }
    if (constant) return coef;
    return coef.empty() ? body : coef + "*" + body;
  }
  const std::string coef = "(" + c.to_string() + ")";
  return constant ? coef : coef + "*" + body;
}

std::string join_terms(const std::vector<std::pair<std::string, bool>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& [text, negative] = parts[k];
    if (k == 0)
      out += negative ? "-" + text : text;
    else
      out += (negative ? " - " : " + ") + text;
  }
  return out;
}

}  // namespace

Monomial Monomial::of(Var v, std::uint32_t power) {
  Monomial mono;
  mono.exponents[static_cast<std::size_t>(v)] = power;
  return mono;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t k = 0; k < kNumVars; ++k) out.exponents[k] = a.exponents[k] + b.exponents[k];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = kNumVars; k-- > 0;)
    if (auto c = a.exponents[k] <=> b.exponents[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (exponents[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[k];
    if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(ComplexRational c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), std::move(c));
}

MultiPoly MultiPoly::variable(Var v) { return term(ComplexRational(1L), Monomial::of(v)); }

MultiPoly MultiPoly::term(ComplexRational c, Monomial mono) {
  MultiPoly out;
  if (!c.is_zero()) out.terms_.emplace(mono, std::move(c));
  return out;
}

ComplexRational MultiPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? ComplexRational() : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool MultiPoly::is_real() const {
  for (const auto& [mono, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.conj());
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

void MultiPoly::add_term(const Monomial& mono, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ComplexRational MultiPoly::evaluate(const Point& point) const {
  ComplexRational sum;
  for (const auto& [mono, c] : terms_) {
    ComplexRational t = c;
    for (std::size_t k = 0; k < kNumVars; ++k)
      for (std::uint32_t e = 0; e < mono.exponents[k]; ++e) t *= point[k];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(Var v, const ComplexRational& value) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [mono, c] : terms_) {
    Monomial rest = mono;
    ComplexRational t = c;
    for (std::uint32_t e = 0; e < mono.exponents[idx]; ++e) t *= value;
    rest.exponents[idx] = 0;
    out.add_term(rest, t);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  std::vector<std::pair<std::string, bool>> parts;
  for (const auto& [mono, c] : terms_) {
    bool negative = false;
    const std::string body = mono == Monomial::one() ? std::string() : mono.to_string();
    std::string text = render_term(c, body, negative);
    parts.emplace_back(std::move(text), negative);
  }
  return join_terms(parts);
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return {};
}

const MultiPoly& energy_squared() {
  static const MultiPoly s = [] {
    MultiPoly out;
    for (Var v : {Var::p1, Var::p2, Var::p3, Var::m})
      out += MultiPoly::term(ComplexRational(1L), Monomial::of(v, 2));
    return out;
  }();
  return s;
}

// ---------------------------------------------------------------------------

EPoly::EPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EPoly::EPoly(MultiPoly constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

EPoly EPoly::e_power(std::size_t power) {
  std::vector<MultiPoly> c(power + 1);
  c[power] = MultiPoly(1L);
  return EPoly(std::move(c));
}

void EPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MultiPoly EPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : MultiPoly(); }

EPoly EPoly::operator-() const {
  EPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MultiPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return EPoly(std::move(out));
}

std::string EPoly::to_string() const {
  std::vector<std::pair<std::string, bool>> parts;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const MultiPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string power = k == 0 ? "" : (k == 1 ? "E" : "E^" + std::to_string(k));
    if (c.size() == 1) {
      const auto& [mono, coef] = *c.terms().begin();
      std::string body = mono == Monomial::one() ? power
                         : k == 0             ? mono.to_string()
                                              : mono.to_string() + "*" + power;
      bool negative = false;
      std::string text = render_term(coef, body, negative);
      parts.emplace_back(std::move(text), negative);
    } else {
      parts.emplace_back("(" + c.to_string() + ")" + (k == 0 ? "" : "*" + power), false);
    }
  }
  return join_terms(parts);
}

EPoly formal_derivative(const EPoly& q) {
  if (q.degree() < 1) return {};
  std::vector<MultiPoly> out(q.coeffs().size() - 1);
  for (std::size_t k = 1; k < q.coeffs().size(); ++k)
    out[k - 1] = q.coeffs()[k] * ComplexRational(static_cast<long>(k));
  return EPoly(std::move(out));
}

DispersionDivision divide_by_dispersion(const EPoly& q) {
  // Long division by the monic E^2 - s, top power first.
  std::vector<MultiPoly> rem = q.coeffs();
  std::vector<MultiPoly> quot(rem.size() > 2 ? rem.size() - 2 : 0);
  const MultiPoly& s = energy_squared();
  for (std::size_t k = rem.size(); k-- > 2;) {
    if (rem[k].is_zero()) continue;
    quot[k - 2] = rem[k];
    rem[k - 2] += rem[k] * s;
    rem[k] = MultiPoly();
  }
  rem.resize(2);
  return {EPoly(std::move(quot)), {rem[0], rem[1]}};
}

ReducedPair reduce_at_dispersion(const EPoly& q) { return divide_by_dispersion(q).remainder; }

}  // namespace dirac
