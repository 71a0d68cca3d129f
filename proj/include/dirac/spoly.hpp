#pragma once

#include "dirac/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dirac {

/// Univariate polynomial in s = p1^2 + p2^2 + p3^2 + m^2 with rational
/// coefficients. coeffs[k] multiplies s^k; trimmed, so zero is empty.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(std::vector<Rational> coeffs);
  SPoly(Rational c);  // NOLINT
  SPoly(long c) : SPoly(Rational(c)) {}  // NOLINT

  /// c * s^power
  static SPoly monomial(Rational c, std::size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  SPoly operator-() const;
  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend bool operator==(const SPoly&, const SPoly&) = default;

  SPoly monic() const;
  /// Replaces s by p1^2 + p2^2 + p3^2 + m^2.
  MultiPoly to_multipoly() const;

  /// Descending powers: "s^2", "-2*s", "2*s - 1", "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// (quotient, remainder); throws std::domain_error on division by zero.
std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
SPoly gcd(const SPoly& a, const SPoly& b);

/// Element of Q(s), kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(SPoly num);  // NOLINT
  RatFunc(SPoly num, SPoly den);

  const SPoly& numerator() const { return num_; }
  const SPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "num" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  SPoly num_;
  SPoly den_;
};

}  // namespace dirac
