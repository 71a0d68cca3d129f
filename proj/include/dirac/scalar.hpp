#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirac {

/// Arbitrary-precision rational. GMP keeps it in lowest terms with a positive
/// denominator as long as every constructor path calls canonicalize().
using Rational = mpq_class;

/// Thrown for text that does not match `-?[0-9]+(/[1-9][0-9]*)?`.
class RationalSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact Gaussian rational re + im*i.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design of scalar promotion
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexRational(long re) : re_(re) {}  // NOLINT
  ComplexRational(long re, long im) : re_(re), im_(im) {}

  static ComplexRational i() { return {0L, 1L}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, Rational(-im_)}; }
  /// |z|^2
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

  ComplexRational operator-() const { return {Rational(-re_), Rational(-im_)}; }
  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a/b", "c/d*i", "a/b+c/d*i" or "a/b-c/d*i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace dirac
