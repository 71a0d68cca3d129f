#include "dirac/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace dirac {

namespace {

ExactMatrix block2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
  ExactMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      out(i, j) = a(i, j);
      out(i, j + 2) = b(i, j);
      out(i + 2, j) = c(i, j);
      out(i + 2, j + 2) = d(i, j);
    }
  return out;
}

ExactMatrix negated(const ExactMatrix& x) { return ComplexRational(-1L) * x; }

ExactMatrix canonical_beta() {
  return ExactMatrix::diagonal({ComplexRational(1L), ComplexRational(1L), ComplexRational(-1L), ComplexRational(-1L)});
}

using Vec = std::vector<ComplexRational>;

ComplexRational inner(const Vec& a, const Vec& b) {
  ComplexRational out;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k].conj() * b[k];
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const ComplexRational& z) { return z.is_zero(); });
}

// Orthogonal (unnormalized) basis of the column space, columns in index order.
std::vector<Vec> orthogonal_column_basis(const ExactMatrix& p) {
  std::vector<Vec> basis;
  for (std::size_t col = 0; col < p.size(); ++col) {
    Vec v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p(i, col);
    for (const Vec& w : basis) {
      const ComplexRational f = inner(w, v) / inner(w, w);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * w[i];
    }
    if (!is_zero_vec(v)) basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::complex<double> to_complex(const ComplexRational& z) { return {z.re().get_d(), z.im().get_d()}; }

std::string describe_exact_transform(const ExactMatrix& u) {
  if (u == ExactMatrix::identity(u.size())) return "identity";
  std::string cols;
  for (std::size_t col = 0; col < u.size(); ++col) {
    std::optional<std::size_t> hit;
    for (std::size_t row = 0; row < u.size(); ++row) {
      const ComplexRational& z = u(row, col);
      if (z.is_zero()) continue;
      if (hit || !(z == ComplexRational(1L))) return "exact unitary";
      hit = row;
    }
    if (!hit) return "exact unitary";
    cols += (cols.empty() ? "" : ", ") + ("e" + std::to_string(*hit + 1));
  }
  return "permutation: new basis (" + cols + ")";
}

std::vector<double> descending_eigenvalues(const Eigen::MatrixXcd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(x, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void require_dimension_four(const MatrixSet& set, const char* what) {
  if (set.dimension() != 4)
    throw DimensionError(std::string(what) + " requires n = 4, got n = " + std::to_string(set.dimension()));
}

}  // namespace

std::vector<std::string> CliffordReport::failures() const {
  std::vector<std::string> out;
  for (const auto& d : pairwise)
    if (!d.defect.is_zero()) out.push_back("{" + d.name + "}");
  for (const auto& d : squares)
    if (!d.defect.is_zero()) out.push_back(d.name + "^2 - I");
  return out;
}

CliffordReport check_anticommutation(const MatrixSet& set, CliffordScope scope) {
  const std::size_t count = scope == CliffordScope::full ? 4 : 3;
  const ExactMatrix id = ExactMatrix::identity(set.dimension());
  CliffordReport report;
  for (std::size_t a = 0; a < count; ++a) {
    const ExactMatrix& x = set.matrix(a);
    report.squares.push_back({kMatrixNames[a], x * x - id});
    for (std::size_t b = a + 1; b < count; ++b) {
      const ExactMatrix& y = set.matrix(b);
      report.pairwise.push_back({std::string(kMatrixNames[a]) + "," + kMatrixNames[b], x * y + y * x});
    }
  }
  report.pass = report.failures().empty();
  return report;
}

TraceDetReport check_trace_det(const MatrixSet& set) {
  require_dimension_four(set, "check_trace_det");
  TraceDetReport report{trace_and_det(set), true};
  for (const auto& td : report.values)
    report.pass = report.pass && td.trace.is_zero() && td.det == ComplexRational(1L);
  return report;
}

std::optional<InvolutionSpectrum> involution_spectrum(const ExactMatrix& x) {
  const std::size_t n = x.size();
  if (!(x * x == ExactMatrix::identity(n))) return std::nullopt;
  // Eigenvalues are +-1, so tr = plus - minus and n = plus + minus.
  const ComplexRational tr = x.trace();
  if (!tr.is_real() || !is_integer(tr.re())) return std::nullopt;
  const long t = tr.re().get_num().get_si();
  const long nn = static_cast<long>(n);
  return InvolutionSpectrum{static_cast<std::size_t>((nn + t) / 2), static_cast<std::size_t>((nn - t) / 2)};
}

Eigen::MatrixXcd to_numeric(const ExactMatrix& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = to_complex(x(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return out;
}

NumericSet to_numeric(const MatrixSet& set) {
  return {{to_numeric(set.alpha(0)), to_numeric(set.alpha(1)), to_numeric(set.alpha(2))}, to_numeric(set.beta())};
}

CanonicalForm canonicalize_beta(const MatrixSet& set) {
  if (set.dimension() != 4)
    throw CanonicalizationError(CanonicalizationError::Kind::unsupported_dimension,
                                "canonicalize_beta requires n = 4, got n = " + std::to_string(set.dimension()));
  const auto spectrum = involution_spectrum(set.beta());
  if (!spectrum)
    throw CanonicalizationError(CanonicalizationError::Kind::not_involution, "beta^2 != I; no canonical +-1 form");
  if (spectrum->plus != 2 || spectrum->minus != 2)
    throw CanonicalizationError(CanonicalizationError::Kind::eigenspace_dimensions,
                                "beta eigenspaces have dimensions (" + std::to_string(spectrum->plus) + "," +
                                    std::to_string(spectrum->minus) +
                                    "); the eigenvalues +1 and -1 must each appear twice");

  const ExactMatrix id = ExactMatrix::identity(4);
  const ComplexRational half(Rational(1, 2));
  std::vector<Vec> basis = orthogonal_column_basis(half * (id + set.beta()));
  for (auto& v : orthogonal_column_basis(half * (id - set.beta()))) basis.push_back(std::move(v));

  CanonicalForm form;
  form.exact = true;
  std::vector<Rational> norm2;
  for (const Vec& v : basis) {
    norm2.push_back(inner(v, v).re());
    if (!rational_sqrt(norm2.back())) form.exact = false;
  }

  form.transform.resize(4, 4);
  if (form.exact) {
    ExactMatrix u(4);
    for (std::size_t col = 0; col < 4; ++col) {
      const ComplexRational inv(Rational(1 / *rational_sqrt(norm2[col])));
      for (std::size_t row = 0; row < 4; ++row) u(row, col) = basis[col][row] * inv;
    }
    form.exact_set = set.conjugated(u, set.label().empty() ? "canonical" : set.label() + " (canonical)");
    form.exact_transform = u;
    form.transform = to_numeric(u);
    form.numeric = to_numeric(*form.exact_set);
    form.description = describe_exact_transform(u);
    form.tolerance = 0.0;
  } else {
    for (std::size_t col = 0; col < 4; ++col) {
      const double scale = 1.0 / std::sqrt(norm2[col].get_d());
      for (std::size_t row = 0; row < 4; ++row)
        form.transform(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = to_complex(basis[col][row]) * scale;
    }
    const NumericSet original = to_numeric(set);
    const Eigen::MatrixXcd u_dag = form.transform.adjoint();
    for (std::size_t k = 0; k < 3; ++k) form.numeric.alphas[k] = u_dag * original.alphas[k] * form.transform;
    form.numeric.beta = u_dag * original.beta * form.transform;
    form.description = "unitary with irrational normalization; verified to tolerance 1e-12";
    form.tolerance = kCanonicalTolerance;
  }
  form.unitarity_defect =
      (form.transform.adjoint() * form.transform - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
  return form;
}

StructureReport check_alpha_structure(const MatrixSet& set) {
  require_dimension_four(set, "check_alpha_structure");
  StructureReport report;
  report.tolerance = 0.0;
  report.beta_canonical = set.beta() == canonical_beta();
  if (auto spec = involution_spectrum(set.beta())) {
    report.beta_spectrum.assign(spec->plus, 1.0);
    report.beta_spectrum.insert(report.beta_spectrum.end(), spec->minus, -1.0);
  } else {
    report.beta_spectrum = descending_eigenvalues(to_numeric(set.beta()));
  }
  std::array<Rational, 3> norms;
  for (std::size_t k = 0; k < 3; ++k) {
    const ExactMatrix& a = set.alpha(k);
    bool blocks = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if ((i < 2) == (j < 2) && !a(i, j).is_zero()) blocks = false;
    report.alpha_blocks[k] = blocks;
    Rational norm = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 4; ++j) norm += a(i, j).norm2();
    norms[k] = norm;
    report.norm_condition[k] = norm.get_d();
  }
  report.exact_norm_condition = norms;
  const std::vector<double> expected{1.0, 1.0, -1.0, -1.0};
  report.pass = report.beta_canonical && report.beta_spectrum == expected;
  for (std::size_t k = 0; k < 3; ++k) report.pass = report.pass && report.alpha_blocks[k] && norms[k] == 2;
  return report;
}

StructureReport check_alpha_structure(const NumericSet& set, double tolerance) {
  if (set.beta.rows() != 4) throw DimensionError("check_alpha_structure requires n = 4");
  StructureReport report;
  report.tolerance = tolerance;
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(4, 4);
  target.diagonal() << 1.0, 1.0, -1.0, -1.0;
  report.beta_canonical = (set.beta - target).cwiseAbs().maxCoeff() <= tolerance;
  report.beta_spectrum = descending_eigenvalues(set.beta);
  bool spectrum_ok = true;
  const std::array<double, 4> expected{1.0, 1.0, -1.0, -1.0};
  for (std::size_t k = 0; k < 4; ++k) spectrum_ok = spectrum_ok && std::abs(report.beta_spectrum[k] - expected[k]) <= tolerance;
  report.pass = report.beta_canonical && spectrum_ok;
  for (std::size_t k = 0; k < 3; ++k) {
    const Eigen::MatrixXcd& a = set.alphas[k];
    const double block_max =
        std::max(a.topLeftCorner(2, 2).cwiseAbs().maxCoeff(), a.bottomRightCorner(2, 2).cwiseAbs().maxCoeff());
    report.alpha_blocks[k] = block_max <= tolerance;
    report.norm_condition[k] = a.topRightCorner(2, 2).cwiseAbs2().sum();
    report.pass = report.pass && report.alpha_blocks[k] && std::abs(report.norm_condition[k] - 2.0) <= tolerance;
  }
  return report;
}

StructureReport check_alpha_structure(const CanonicalForm& form) {
  if (form.exact && form.exact_set) return check_alpha_structure(*form.exact_set);
  return check_alpha_structure(form.numeric, form.tolerance);
}

EquivalenceVerdict equivalence_audit(const MatrixSet& set) {
  require_dimension_four(set, "equivalence_audit");
  EquivalenceVerdict verdict{check_dispersion(set, 2), check_anticommutation(set), false};
  verdict.agree = verdict.dispersion.pass == verdict.clifford.pass;
  return verdict;
}

CrossTermReport cross_term_audit(const MatrixSet& set) {
  const std::size_t n = set.dimension();
  const CharPoly cp = char_poly(build_hamiltonian(set));
  const MultiPoly quadratic = cp.coefficient(n - 2);
  constexpr std::array<Var, 3> momenta = {Var::p1, Var::p2, Var::p3};
  const ComplexRational half(Rational(1, 2));

  CrossTermReport report{{}, true, true};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const ExactMatrix& a = set.alpha(i);
      const ExactMatrix& b = set.alpha(j);
      const ExactMatrix anti = a * b + b * a;
      CrossTerm term{i, j, quadratic.coefficient(Monomial::of(momenta[i]) * Monomial::of(momenta[j])),
                     a.trace() * b.trace() - half * anti.trace(), anti(0, 0) + anti(1, 1)};
      report.consistent = report.consistent && term.coefficient == term.trace_formula;
      report.pass = report.pass && term.coefficient.is_zero();
      report.terms.push_back(std::move(term));
    }
  return report;
}

ExactUnitary::ExactUnitary(ExactMatrix u) : u_(std::move(u)) {
  if (!(u_ * u_.adjoint() == ExactMatrix::identity(u_.size())))
    throw std::invalid_argument("ExactUnitary: U U^dagger != I");
}

ExactUnitary ExactUnitary::identity(std::size_t n) { return ExactUnitary(ExactMatrix::identity(n)); }

ExactUnitary ExactUnitary::signed_permutation(const std::vector<std::size_t>& perm, const std::vector<long>& signs) {
  const std::size_t n = perm.size();
  if (signs.size() != n) throw std::invalid_argument("signed_permutation: size mismatch");
  ExactMatrix u(n);
  for (std::size_t col = 0; col < n; ++col) {
    if (perm[col] >= n) throw std::invalid_argument("signed_permutation: index out of range");
    u(perm[col], col) = ComplexRational(signs[col]);
  }
  return ExactUnitary(std::move(u));
}

ExactUnitary ExactUnitary::phases(const std::vector<ComplexRational>& diag) {
  return ExactUnitary(ExactMatrix::diagonal(diag));
}

ExactUnitary ExactUnitary::rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  ExactMatrix u = ExactMatrix::identity(n);
  u(i, i) = ComplexRational(c);
  u(j, j) = ComplexRational(c);
  u(i, j) = ComplexRational(Rational(-s));
  u(j, i) = ComplexRational(s);
  return ExactUnitary(std::move(u));
}

ExactUnitary operator*(const ExactUnitary& a, const ExactUnitary& b) { return ExactUnitary(a.u_ * b.u_); }

std::array<ExactMatrix, 3> pauli_matrices() {
  const ComplexRational one(1L), i = ComplexRational::i(), zero;
  return {ExactMatrix(2, {zero, one, one, zero}), ExactMatrix(2, {zero, -i, i, zero}),
          ExactMatrix(2, {one, zero, zero, ComplexRational(-1L)})};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"dirac-pauli", "weyl-chiral", "majorana"};
  return names;
}

MatrixSet catalog(const std::string& name) {
  const auto sigma = pauli_matrices();
  const ExactMatrix zero(2);
  const ExactMatrix id = ExactMatrix::identity(2);

  if (name == "dirac-pauli") {
    return MatrixSet({block2(zero, sigma[0], sigma[0], zero), block2(zero, sigma[1], sigma[1], zero),
                      block2(zero, sigma[2], sigma[2], zero)},
                     block2(id, zero, zero, negated(id)), name);
  }
  if (name == "weyl-chiral") {
    return MatrixSet({block2(negated(sigma[0]), zero, zero, sigma[0]), block2(negated(sigma[1]), zero, zero, sigma[1]),
                      block2(negated(sigma[2]), zero, zero, sigma[2])},
                     block2(zero, id, id, zero), name);
  }
  if (name == "majorana") {
    // Real symmetric alphas, purely imaginary beta.
    ExactMatrix a1(4), a3(4);
    for (std::size_t k = 0; k < 4; ++k) a1(k, 3 - k) = ComplexRational(-1L);
    a3(0, 2) = ComplexRational(-1L);
    a3(2, 0) = ComplexRational(-1L);
    a3(1, 3) = ComplexRational(1L);
    a3(3, 1) = ComplexRational(1L);
    const ExactMatrix a2 = block2(id, zero, zero, negated(id));
    return MatrixSet({a1, a2, a3}, block2(zero, sigma[1], sigma[1], zero), name);
  }
  throw UnknownCatalogEntry("unknown catalog entry \"" + name + "\" (known: dirac-pauli, weyl-chiral, majorana)");
}

}  // namespace dirac
