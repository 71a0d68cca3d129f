#pragma once

// Multiplicity conditions on the characteristic polynomial at E = E_p.
//
// For P(E) = E^n + c_{n-1} E^{n-1} + ... + c_0 to have E_p = sqrt(s) as a root
// of multiplicity r for every momentum, P, P', ..., P^(r-1) must vanish at E_p.
// Each condition reduces modulo E^2 = s to A + E_p B, and since E_p is not a
// polynomial in (p, m), A and B must vanish separately. That gives 2r linear
// equations in the unknown coefficients c_k with coefficients in Q[s].

#include "dirac/matrix.hpp"
#include "dirac/spoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dirac {

/// n components, r linearly independent positive-energy plane waves.
struct DegeneracyRequirement {
  std::size_t n;
  std::size_t r;

  /// Throws std::invalid_argument unless 1 <= r <= n <= 4.
  void validate() const;
  friend bool operator==(const DegeneracyRequirement&, const DegeneracyRequirement&) = default;
};

/// One equation  sum_k coeffs[k] * c_k + constant = 0.
struct LinearCondition {
  std::string name;  // e.g. "odd part of P'"
  std::vector<SPoly> coeffs;
  SPoly constant;
};

std::vector<LinearCondition> multiplicity_conditions(const DegeneracyRequirement& req);

/// constant + sum over free unknowns of coefficient * c_k.
struct AffineForm {
  SPoly constant;
  std::map<std::size_t, SPoly> terms;

  bool is_zero() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  /// "-s^2 - s*c2", "0"
  std::string to_string() const;
};

struct ForcedCoefficientSolution {
  DegeneracyRequirement requirement;
  std::map<std::size_t, AffineForm> assignments;  // forced c_k
  std::set<std::size_t> free;                     // unconstrained c_k

  bool complete() const { return free.empty(); }
  /// "c3 = 0" lines, highest index first; free unknowns as "c2 free".
  std::vector<std::string> render() const;
};

struct InfeasibilityCertificate {
  enum class Kind {
    contradiction,   // a nonzero polynomial in s forced to vanish
    non_polynomial,  // the only solution needs a proper rational function of s
  };

  DegeneracyRequirement requirement;
  Kind kind = Kind::contradiction;
  SPoly witness;                     // contradiction: positive leading coefficient
  std::vector<std::string> sources;  // conditions combined into the witness row
  std::string offending;             // non_polynomial: "c1 = (...)/(...)"
  std::string narrative;

  /// "forced: 2*s = 0 for all momenta" followed by the narrative.
  std::vector<std::string> render() const;
};

using SolveResult = std::variant<ForcedCoefficientSolution, InfeasibilityCertificate>;

/// Exact elimination over Q(s), lowest-index unknown pivoted first.
SolveResult solve_forced_coefficients(const DegeneracyRequirement& req);

/// Each multiplicity condition after substituting the solution; all zero for a
/// genuine solution.
std::vector<AffineForm> condition_residuals(const ForcedCoefficientSolution& sol);

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For a complete solution whose P(E) equals (E^2 - s)^(n/2), returns
/// "(E-E_p)^2(E+E_p)^2" (exponent 1 omitted). Throws FactorizationError for
/// incomplete solutions and for any other polynomial.
std::string factorized_spectrum(const ForcedCoefficientSolution& sol);

/// How the mass enters a dispersion check.
enum class MassMode {
  massive,   // s = p1^2 + p2^2 + p3^2 + m^2
  massless,  // m frozen to 0 in both h(p) and s
};

struct DispersionReport {
  struct Residual {
    std::string name;  // "even part of P''"
    MultiPoly value;
  };
  std::size_t multiplicity = 0;
  EPoly char_poly;
  std::vector<Residual> residuals;  // even, odd for P, P', ..., P^(r-1)
  bool pass = false;
};

DispersionReport check_dispersion(const MatrixSet& set, std::size_t r, MassMode mode = MassMode::massive);

}  // namespace dirac
