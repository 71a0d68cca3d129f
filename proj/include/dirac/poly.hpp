#pragma once

#include "dirac/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dirac {

/// The four fixed indeterminates of every momentum-space polynomial.
enum class Var : std::uint8_t { p1 = 0, p2 = 1, p3 = 2, m = 3 };

inline constexpr std::size_t kNumVars = 4;

/// p1^a p2^b p3^c m^d.
///
/// Ordered graded-lexicographically: total degree first, ties broken by the
/// exponent of m, then p3, then p2, then p1 (variable order p1 < p2 < p3 < m).
struct Monomial {
  std::array<std::uint32_t, kNumVars> exponents{};

  static Monomial one() { return {}; }
  static Monomial of(Var v, std::uint32_t power = 1);

  std::uint32_t degree() const;
  std::uint32_t operator[](Var v) const { return exponents[static_cast<std::size_t>(v)]; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  /// "1", "p1", "p1^2*m", ...
  std::string to_string() const;
};

/// Evaluation point for (p1, p2, p3, m).
using Point = std::array<ComplexRational, kNumVars>;

/// Exact polynomial in (p1, p2, p3, m) with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, ComplexRational>;

  MultiPoly() = default;
  MultiPoly(ComplexRational c);  // NOLINT: constants promote implicitly
  MultiPoly(long c) : MultiPoly(ComplexRational(c)) {}  // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly term(ComplexRational c, Monomial mono);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of `mono`, zero if absent.
  ComplexRational coefficient(const Monomial& mono) const;

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for the zero polynomial and for polynomials whose terms all share one degree.
  bool is_homogeneous() const;
  bool is_real() const;

  MultiPoly conj() const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const ComplexRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const ComplexRational& c) { return a *= c; }
  friend MultiPoly operator*(const ComplexRational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  ComplexRational evaluate(const Point& point) const;
  /// Replaces `v` by the constant `value`.
  MultiPoly substitute(Var v, const ComplexRational& value) const;

  /// Ascending graded-lex order, e.g. "p1^2 + p2^2 + p3^2 + m^2"; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const ComplexRational& c);

  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// p1^2 + p2^2 + p3^2 + m^2, the square of the positive energy.
const MultiPoly& energy_squared();

/// Polynomial in the energy indeterminate E with MultiPoly coefficients.
/// coeffs[k] multiplies E^k; the leading coefficient is never zero.
class EPoly {
 public:
  EPoly() = default;
  explicit EPoly(std::vector<MultiPoly> coeffs);
  EPoly(MultiPoly constant);  // NOLINT

  /// E^power.
  static EPoly e_power(std::size_t power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  /// Coefficient of E^k, zero beyond the degree.
  MultiPoly coefficient(std::size_t k) const;

  EPoly operator-() const;
  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  friend bool operator==(const EPoly&, const EPoly&) = default;

  /// Descending powers of E: "E^4 + (-2*m^2)*E^2 + m^4".
  std::string to_string() const;

 private:
  void trim();

  std::vector<MultiPoly> coeffs_;
};

EPoly formal_derivative(const EPoly& q);

/// Q(E_p) = even_part + E_p * odd_part.
struct ReducedPair {
  MultiPoly even_part;
  MultiPoly odd_part;

  friend bool operator==(const ReducedPair&, const ReducedPair&) = default;
};

/// q = quotient * (E^2 - energy_squared()) + remainder.even_part + E * remainder.odd_part
struct DispersionDivision {
  EPoly quotient;
  ReducedPair remainder;
};

DispersionDivision divide_by_dispersion(const EPoly& q);
ReducedPair reduce_at_dispersion(const EPoly& q);

}  // namespace dirac
