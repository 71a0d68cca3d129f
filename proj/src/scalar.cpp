#include "dirac/scalar.hpp"

#include <cctype>

namespace dirac {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num))
    throw RationalSyntaxError("not a rational literal: \"" + std::string(text) + "\"");
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(den) || den.front() == '0')
      throw RationalSyntaxError("not a rational literal: \"" + std::string(text) + "\"");
  }
  Rational q(std::string(text), 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  const Rational d = o.norm2();
  if (sgn(d) == 0) throw std::domain_error("division by zero ComplexRational");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string ComplexRational::to_string() const {
  if (sgn(im_) == 0) return dirac::to_string(re_);
  const auto imag = [](const Rational& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return dirac::to_string(q) + "*i";
  };
  if (sgn(re_) == 0) return imag(im_);
  return dirac::to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag(im_);
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.to_string(); }

}  // namespace dirac
