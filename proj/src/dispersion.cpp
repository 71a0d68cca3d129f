#include "dirac/dispersion.hpp"

#include <algorithm>

namespace dirac {

namespace {

std::string derivative_name(std::size_t j) { return "P" + std::string(j, '\''); }

long falling_factorial(std::size_t k, std::size_t j) {
  long out = 1;
  for (std::size_t t = 0; t < j; ++t) out *= static_cast<long>(k - t);
  return out;
}

// Signed pieces of a sum; `negative` selects the separator.
struct Piece {
  std::string text;
  bool negative;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k == 0)
      out += pieces[k].negative ? "-" + pieces[k].text : pieces[k].text;
    else
      out += (pieces[k].negative ? " - " : " + ") + pieces[k].text;
  }
  return out;
}

// c * s^power * suffix, sign split off.
Piece monomial_piece(Rational c, std::size_t power, const std::string& suffix) {
  const bool negative = sgn(c) < 0;
  if (negative) c = -c;
  std::vector<std::string> factors;
  if (c != 1 || (power == 0 && suffix.empty())) factors.push_back(to_string(c));
  if (power == 1) factors.emplace_back("s");
  if (power > 1) factors.push_back("s^" + std::to_string(power));
  if (!suffix.empty()) factors.push_back(suffix);
  std::string text;
  for (const auto& f : factors) text += (text.empty() ? "" : "*") + f;
  return {text, negative};
}

void append_spoly(std::vector<Piece>& pieces, const SPoly& p, const std::string& suffix) {
  if (p.is_zero()) return;
  if (p.term_count() > 1 && !suffix.empty()) {
    pieces.push_back({"(" + p.to_string() + ")*" + suffix, false});
    return;
  }
  for (std::size_t k = p.coeffs().size(); k-- > 0;)
    if (sgn(p.coeffs()[k]) != 0) pieces.push_back(monomial_piece(p.coeffs()[k], k, suffix));
}

std::string unknown(std::size_t k) { return "c" + std::to_string(k); }

// Clears rational denominators and makes the leading coefficient positive.
SPoly normalize_witness(const SPoly& w) {
  mpz_class lcm = 1;
  for (const auto& c : w.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  SPoly out = w * SPoly(Rational(lcm));
  if (!out.is_zero() && sgn(out.leading()) < 0) out = -out;
  return out;
}

std::string witness_narrative(const SPoly& w) {
  if (w.degree() == 0)
    return "a nonzero constant cannot vanish; the requirement is contradictory for every momentum";
  if (w.term_count() == 1)
    return "this forces E_p = 0 for all momenta, contradicting E_p = +sqrt(p^2 + m^2)";
  return "this forces a nonzero polynomial in E_p^2 to vanish for all momenta";
}

struct Row {
  std::vector<RatFunc> a;
  RatFunc b;
  std::vector<std::string> sources;
};

}  // namespace

void DegeneracyRequirement::validate() const {
  if (n < 1 || n > 4) throw std::invalid_argument("dimension must be between 1 and 4, got " + std::to_string(n));
  if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (r > n)
    throw std::invalid_argument("multiplicity " + std::to_string(r) + " exceeds the degree " + std::to_string(n));
}

std::vector<LinearCondition> multiplicity_conditions(const DegeneracyRequirement& req) {
  req.validate();
  std::vector<LinearCondition> out;
  for (std::size_t j = 0; j < req.r; ++j) {
    LinearCondition even{"even part of " + derivative_name(j), std::vector<SPoly>(req.n), {}};
    LinearCondition odd{"odd part of " + derivative_name(j), std::vector<SPoly>(req.n), {}};
    // d^j/dE^j of c_k E^k is k!/(k-j)! c_k E^(k-j); E^d = s^(d/2) E^(d mod 2).
    for (std::size_t k = j; k <= req.n; ++k) {
      const std::size_t d = k - j;
      LinearCondition& target = d % 2 == 0 ? even : odd;
      const SPoly term = SPoly::monomial(Rational(falling_factorial(k, j)), d / 2);
      if (k == req.n)
        target.constant += term;
      else
        target.coeffs[k] += term;
    }
    out.push_back(std::move(even));
    out.push_back(std::move(odd));
  }
  return out;
}

bool AffineForm::is_zero() const {
  if (!constant.is_zero()) return false;
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_zero(); });
}

std::string AffineForm::to_string() const {
  std::vector<Piece> pieces;
  append_spoly(pieces, constant, "");
  for (const auto& [k, coef] : terms) append_spoly(pieces, coef, unknown(k));
  return join(pieces);
}

std::vector<std::string> ForcedCoefficientSolution::render() const {
  std::vector<std::string> lines;
  for (std::size_t k = requirement.n; k-- > 0;) {
    if (auto it = assignments.find(k); it != assignments.end())
      lines.push_back(unknown(k) + " = " + it->second.to_string());
    else
      lines.push_back(unknown(k) + " free");
  }
  return lines;
}

std::vector<std::string> InfeasibilityCertificate::render() const {
  std::vector<std::string> lines;
  if (kind == Kind::contradiction) {
    lines.push_back("forced: " + witness.to_string() + " = 0 for all momenta");
    std::string from;
    for (const auto& s : sources) from += (from.empty() ? "" : ", ") + s;
    lines.push_back("from: " + from);
  } else {
    lines.push_back("non-polynomial: " + offending);
  }
  lines.push_back(narrative);
  return lines;
}

SolveResult solve_forced_coefficients(const DegeneracyRequirement& req) {
  const auto conditions = multiplicity_conditions(req);
  const std::size_t n = req.n;

  std::vector<Row> rows;
  for (const auto& c : conditions) {
    Row row{{}, RatFunc(c.constant), {c.name}};
    for (const auto& a : c.coeffs) row.a.emplace_back(a);
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan over Q(s).
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot].a[col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Row& p = rows[rank];
    const RatFunc lead = p.a[col];
    for (auto& x : p.a) x = x / lead;
    p.b = p.b / lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i].a[col].is_zero()) continue;
      const RatFunc f = rows[i].a[col];
      for (std::size_t j = 0; j < n; ++j) rows[i].a[j] = rows[i].a[j] - f * p.a[j];
      rows[i].b = rows[i].b - f * p.b;
      for (const auto& s : p.sources)
        if (std::find(rows[i].sources.begin(), rows[i].sources.end(), s) == rows[i].sources.end())
          rows[i].sources.push_back(s);
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i].b.is_zero()) continue;
    InfeasibilityCertificate cert;
    cert.requirement = req;
    cert.kind = InfeasibilityCertificate::Kind::contradiction;
    cert.witness = normalize_witness(rows[i].b.numerator());
    cert.sources = rows[i].sources;
    cert.narrative = witness_narrative(cert.witness);
    return cert;
  }

  ForcedCoefficientSolution sol;
  sol.requirement = req;
  for (std::size_t col = 0; col < n; ++col)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) sol.free.insert(col);

  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t col = pivot_cols[i];
    const Row& row = rows[i];
    // c_col = -b - sum_free a_f c_f
    auto non_polynomial = [&](const RatFunc& value, const std::string& what) {
      InfeasibilityCertificate cert;
      cert.requirement = req;
      cert.kind = InfeasibilityCertificate::Kind::non_polynomial;
      cert.offending = unknown(col) + " = " + what + value.to_string();
      cert.narrative = "the only solution is a proper rational function of E_p^2, not a polynomial in the momenta";
      cert.sources = row.sources;
      return cert;
    };
    AffineForm form;
    const RatFunc constant = -row.b;
    if (!constant.is_polynomial()) return non_polynomial(constant, "");
    form.constant = constant.numerator();
    for (std::size_t f : sol.free) {
      const RatFunc coef = -row.a[f];
      if (coef.is_zero()) continue;
      if (!coef.is_polynomial()) return non_polynomial(coef, unknown(f) + " * ");
      form.terms.emplace(f, coef.numerator());
    }
    sol.assignments.emplace(col, std::move(form));
  }
  return sol;
}

std::vector<AffineForm> condition_residuals(const ForcedCoefficientSolution& sol) {
  std::vector<AffineForm> out;
  for (const auto& cond : multiplicity_conditions(sol.requirement)) {
    AffineForm acc;
    acc.constant = cond.constant;
    for (std::size_t k = 0; k < cond.coeffs.size(); ++k) {
      const SPoly& a = cond.coeffs[k];
      if (a.is_zero()) continue;
      if (auto it = sol.assignments.find(k); it != sol.assignments.end()) {
        acc.constant += a * it->second.constant;
        for (const auto& [f, coef] : it->second.terms) acc.terms[f] += a * coef;
      } else {
        acc.terms[k] += a;
      }
    }
    std::erase_if(acc.terms, [](const auto& t) { return t.second.is_zero(); });
    out.push_back(std::move(acc));
  }
  return out;
}

std::string factorized_spectrum(const ForcedCoefficientSolution& sol) {
  const std::size_t n = sol.requirement.n;
  if (!sol.complete()) throw FactorizationError("solution leaves coefficients free; factorization needs all of them");
  for (std::size_t k = 0; k < n; ++k) {
    auto it = sol.assignments.find(k);
    if (it == sol.assignments.end() || !it->second.terms.empty())
      throw FactorizationError("coefficient c" + std::to_string(k) + " is not a closed-form polynomial in s");
  }

  std::vector<SPoly> p(n + 1);
  p[n] = SPoly(1L);
  for (std::size_t k = 0; k < n; ++k) p[k] = sol.assignments.at(k).constant;

  auto render_p = [&] {
    std::vector<Piece> pieces;
    for (std::size_t k = n + 1; k-- > 0;) {
      const std::string power = k == 0 ? "" : (k == 1 ? "E" : "E^" + std::to_string(k));
      append_spoly(pieces, p[k], power);
    }
    return join(pieces);
  };

  if (n % 2 != 0) throw FactorizationError("P(E) = " + render_p() + " is not a power of (E^2 - s)");

  // (E^2 - s)^(n/2)
  std::vector<SPoly> target{SPoly(1L)};
  for (std::size_t t = 0; t < n / 2; ++t) {
    std::vector<SPoly> next(target.size() + 2);
    for (std::size_t k = 0; k < target.size(); ++k) {
      next[k + 2] += target[k];
      next[k] -= target[k] * SPoly::monomial(Rational(1), 1);
    }
    target = std::move(next);
  }
  if (target != p) throw FactorizationError("P(E) = " + render_p() + " is not (E^2 - s)^" + std::to_string(n / 2));

  const std::size_t half = n / 2;
  const std::string exp = half == 1 ? "" : "^" + std::to_string(half);
  return "(E-E_p)" + exp + "(E+E_p)" + exp;
}

DispersionReport check_dispersion(const MatrixSet& set, std::size_t r, MassMode mode) {
  const DegeneracyRequirement req{set.dimension(), r};
  req.validate();

  PolyMatrix h = build_hamiltonian(set);
  if (mode == MassMode::massless)
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) h(i, j) = h(i, j).substitute(Var::m, ComplexRational());

  const CharPoly cp = char_poly(h);
  DispersionReport report{r, cp.poly(), {}, true};
  EPoly q = cp.poly();
  for (std::size_t j = 0; j < r; ++j) {
    ReducedPair pair = reduce_at_dispersion(q);
    if (mode == MassMode::massless) {
      pair.even_part = pair.even_part.substitute(Var::m, ComplexRational());
      pair.odd_part = pair.odd_part.substitute(Var::m, ComplexRational());
    }
    report.pass = report.pass && pair.even_part.is_zero() && pair.odd_part.is_zero();
    report.residuals.push_back({"even part of " + derivative_name(j), std::move(pair.even_part)});
    report.residuals.push_back({"odd part of " + derivative_name(j), std::move(pair.odd_part)});
    q = formal_derivative(q);
  }
  return report;
}

}  // namespace dirac
