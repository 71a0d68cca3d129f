#pragma once

#include "dirac/dispersion.hpp"
#include "dirac/matrix.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac {

/// Tolerance for defect checks on floating-point canonical forms.
inline constexpr double kCanonicalTolerance = 1e-12;

struct NamedDefect {
  std::string name;  // "alpha1,alpha2" for anticommutators, "alpha1" for squares
  ExactMatrix defect;
};

struct CliffordReport {
  std::vector<NamedDefect> pairwise;  // {X, Y} for X != Y
  std::vector<NamedDefect> squares;   // X^2 - I
  bool pass = false;

  /// Names of nonzero defects, pairwise first.
  std::vector<std::string> failures() const;
};

enum class CliffordScope {
  full,         // alphas and beta
  alphas_only,  // {alpha_i, alpha_j} = 2 delta_ij only
};

CliffordReport check_anticommutation(const MatrixSet& set, CliffordScope scope = CliffordScope::full);

struct TraceDetReport {
  std::array<TraceDet, 4> values;  // alpha1, alpha2, alpha3, beta
  bool pass = false;               // all traces 0 and all determinants 1
};

/// Requires n = 4.
TraceDetReport check_trace_det(const MatrixSet& set);

/// Multiplicities of +1 and -1 when x^2 = I exactly (read off the trace);
/// nullopt otherwise.
struct InvolutionSpectrum {
  std::size_t plus;
  std::size_t minus;
  friend bool operator==(const InvolutionSpectrum&, const InvolutionSpectrum&) = default;
};
std::optional<InvolutionSpectrum> involution_spectrum(const ExactMatrix& x);

/// Floating-point copy of a matrix set.
struct NumericSet {
  std::array<Eigen::MatrixXcd, 3> alphas;
  Eigen::MatrixXcd beta;

  const Eigen::MatrixXcd& matrix(std::size_t k) const { return k < 3 ? alphas[k] : beta; }
};

Eigen::MatrixXcd to_numeric(const ExactMatrix& x);
NumericSet to_numeric(const MatrixSet& set);

class CanonicalizationError : public std::runtime_error {
 public:
  enum class Kind { not_involution, eigenspace_dimensions, unsupported_dimension };
  CanonicalizationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Result of conjugating a set into the basis where beta = diag(1, 1, -1, -1).
/// Columns of the transform are the new basis vectors: X' = U^dagger X U.
struct CanonicalForm {
  bool exact = false;
  std::optional<ExactMatrix> exact_transform;
  std::optional<MatrixSet> exact_set;
  Eigen::MatrixXcd transform;
  NumericSet numeric;
  std::string description;
  double tolerance = 0.0;         // 0 when exact, kCanonicalTolerance otherwise
  double unitarity_defect = 0.0;  // max |U^dagger U - I|
};

/// Projects onto the +1 and -1 eigenspaces of beta with (I +- beta)/2, takes
/// projector columns in index order (dropping dependent ones by exact rank),
/// orthogonalizes exactly and normalizes. Requires n = 4 and beta^2 = I.
CanonicalForm canonicalize_beta(const MatrixSet& set);

struct StructureReport {
  std::vector<double> beta_spectrum;  // descending
  bool beta_canonical = false;        // beta == diag(1, 1, -1, -1) within tolerance
  std::array<bool, 3> alpha_blocks{};  // diagonal 2x2 blocks vanish
  std::array<double, 3> norm_condition{};
  std::optional<std::array<Rational, 3>> exact_norm_condition;
  double tolerance = 0.0;
  bool pass = false;
};

/// Exact variant; tolerance 0.
StructureReport check_alpha_structure(const MatrixSet& set);
/// Floating-point variant for numerically canonicalized sets.
StructureReport check_alpha_structure(const NumericSet& set, double tolerance = kCanonicalTolerance);
StructureReport check_alpha_structure(const CanonicalForm& form);

struct EquivalenceVerdict {
  DispersionReport dispersion;
  CliffordReport clifford;
  bool agree = false;
};

/// Double-root dispersion check against the anticommutation check. n = 4.
EquivalenceVerdict equivalence_audit(const MatrixSet& set);

struct CrossTerm {
  std::size_t i;  // 0-based momentum indices, i < j
  std::size_t j;
  ComplexRational coefficient;     // coefficient of p_i p_j in c_{n-2}
  ComplexRational trace_formula;   // tr(a_i) tr(a_j) - tr({a_i, a_j}) / 2
  ComplexRational upper_block_sum;  // ({a_i, a_j})_11 + ({a_i, a_j})_22
};

struct CrossTermReport {
  std::vector<CrossTerm> terms;
  bool consistent = false;  // coefficient == trace_formula for all pairs
  bool pass = false;        // all coefficients vanish
};

CrossTermReport cross_term_audit(const MatrixSet& set);

/// Exactly unitary matrix; construction verifies U U^dagger = I.
class ExactUnitary {
 public:
  explicit ExactUnitary(ExactMatrix u);

  static ExactUnitary identity(std::size_t n);
  /// Column k of the result is sign[k] * e_{perm[k]}.
  static ExactUnitary signed_permutation(const std::vector<std::size_t>& perm, const std::vector<long>& signs);
  static ExactUnitary phases(const std::vector<ComplexRational>& diag);
  /// Real rotation by (c, s) in the (i, j) plane; needs c^2 + s^2 = 1.
  static ExactUnitary rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s);

  const ExactMatrix& matrix() const { return u_; }
  friend ExactUnitary operator*(const ExactUnitary& a, const ExactUnitary& b);

 private:
  ExactMatrix u_;
};

class UnknownCatalogEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "dirac-pauli", "weyl-chiral", "majorana".
MatrixSet catalog(const std::string& name);
const std::vector<std::string>& catalog_names();

/// Pauli matrices sigma1, sigma2, sigma3.
std::array<ExactMatrix, 3> pauli_matrices();

}  // namespace dirac
