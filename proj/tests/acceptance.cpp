// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "support.hpp"

#include "dirac/cli.hpp"
#include "dirac/clifford.hpp"
#include "dirac/dispersion.hpp"
#include "dirac/io.hpp"
#include "dirac/spectrum.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace dirac;
using namespace dirac::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    out.pass = false;
    out.detail += "; exceeded " + std::to_string(limit_seconds) + " s";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", seconds);
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << " (" << timing << "): "
            << out.detail << std::endl;
  if (!out.pass) ++failures;
}

const SPoly s = SPoly::monomial(1, 1);

Outcome forced_coefficients() {
  const SolveResult res = solve_forced_coefficients({4, 2});
  const auto* sol = std::get_if<ForcedCoefficientSolution>(&res);
  if (!sol) return {false, "solver returned a certificate"};
  const std::map<std::size_t, AffineForm> expected = {
      {3, {SPoly(), {}}}, {2, {SPoly(-2) * s, {}}}, {1, {SPoly(), {}}}, {0, {s * s, {}}}};
  const bool exact = sol->free.empty() && sol->assignments == expected;
  std::ostringstream cli;
  std::ostringstream err;
  const int code = run_cli({"solve", "--n", "4", "--multiplicity", "2"}, cli, err);
  bool printed = code == 0;
  for (const char* line : {"c3 = 0\n", "c2 = -2*s\n", "c1 = 0\n", "c0 = s^2\n"})
    printed = printed && cli.str().find(line) != std::string::npos;
  std::string rendered;
  for (const auto& l : sol->render()) rendered += (rendered.empty() ? "" : ", ") + l;
  return {exact && printed, rendered + (printed ? "; CLI output and exit 0 match" : "; CLI output mismatch")};
}

Outcome certificates() {
  const SolveResult r22 = solve_forced_coefficients({2, 2});
  const SolveResult r32 = solve_forced_coefficients({3, 2});
  const auto* c22 = std::get_if<InfeasibilityCertificate>(&r22);
  const auto* c32 = std::get_if<InfeasibilityCertificate>(&r32);
  if (!c22 || !c32) return {false, "expected two certificates"};
  const bool ok22 = c22->kind == InfeasibilityCertificate::Kind::contradiction && c22->witness == SPoly(2);
  const bool ok32 = c32->kind == InfeasibilityCertificate::Kind::contradiction && c32->witness == SPoly(2) * s &&
                    c32->narrative.find("E_p = 0 for all momenta") != std::string::npos;
  return {ok22 && ok32, "(2,2) witness " + c22->witness.to_string() + "; (3,2) witness " + c32->witness.to_string() +
                            " with narrative \"" + c32->narrative + "\""};
}

Outcome factorization() {
  const EPoly e2 = EPoly::e_power(2);
  const EPoly mod = e2 - EPoly(energy_squared());
  auto rebuild = [](const ForcedCoefficientSolution& sol) {
    EPoly p = EPoly::e_power(sol.requirement.n);
    for (const auto& [k, form] : sol.assignments) p += EPoly(form.constant.to_multipoly()) * EPoly::e_power(k);
    return p;
  };
  const auto s42 = std::get<ForcedCoefficientSolution>(solve_forced_coefficients({4, 2}));
  const auto s21 = std::get<ForcedCoefficientSolution>(solve_forced_coefficients({2, 1}));
  const bool ok42 = rebuild(s42) == mod * mod && factorized_spectrum(s42) == "(E-E_p)^2(E+E_p)^2";
  const bool ok21 = rebuild(s21) == mod && factorized_spectrum(s21) == "(E-E_p)(E+E_p)";
  return {ok42 && ok21, "(4,2): P = " + rebuild(s42).to_string() + " = " + factorized_spectrum(s42) +
                            "; (2,1): P = " + rebuild(s21).to_string() + " = " + factorized_spectrum(s21)};
}

struct Corpus {
  std::vector<MatrixSet> sets;
  std::size_t catalog_count = 0, conjugates = 0, random = 0, perturbations = 0;
};

MatrixSet scaled(const MatrixSet& set, std::size_t k, long factor) {
  return replace(set, k, ComplexRational(factor) * set.matrix(k));
}

Corpus theorem_corpus() {
  Rng rng(2024);
  Corpus c;
  std::vector<MatrixSet> valid;
  for (const auto& name : catalog_names()) {
    c.sets.push_back(catalog(name));
    valid.push_back(catalog(name));
    ++c.catalog_count;
  }
  for (int k = 0; k < 30; ++k) {
    const MatrixSet base = catalog(catalog_names()[static_cast<std::size_t>(k) % 3]);
    const MatrixSet conj = base.conjugated(random_unitary(rng, 4).matrix(), base.label() + " conjugate");
    c.sets.push_back(conj);
    valid.push_back(conj);
    ++c.conjugates;
  }
  for (int k = 0; k < 110; ++k) {
    c.sets.push_back(random_set(rng, 4));
    ++c.random;
  }
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  std::uniform_int_distribution<std::size_t> mat(0, 3);
  std::uniform_int_distribution<std::size_t> idx(0, 3);
  for (int k = 0; k < 72; ++k) {
    const MatrixSet& base = valid[pick(rng)];
    const std::size_t a = mat(rng);
    std::size_t b = mat(rng);
    if (a == b) b = (a + 1) % 4;
    switch (k % 6) {
      case 0:  // symmetrized single-entry change
      case 1: {
        const std::size_t i = idx(rng), j = idx(rng);
        ComplexRational delta = i == j ? ComplexRational(small_rational(rng)) : small_complex(rng);
        if (delta.is_zero()) delta = ComplexRational(Rational(1, 10));
        c.sets.push_back(perturb(base, a, i, j, delta));
        break;
      }
      case 2:  // sign flip keeps the algebra
        c.sets.push_back(scaled(base, a, -1));
        break;
      case 3:  // doubling breaks X^2 = I
        c.sets.push_back(scaled(base, a, 2));
        break;
      case 4:  // two equal matrices cannot anticommute
        c.sets.push_back(replace(base, a, base.matrix(b)));
        break;
      case 5: {  // swapping two matrices keeps the algebra
        MatrixSet swapped = replace(replace(base, a, base.matrix(b)), b, base.matrix(a));
        c.sets.push_back(swapped);
        break;
      }
    }
    ++c.perturbations;
  }
  return c;
}

Outcome equivalence_theorem() {
  const Corpus c = theorem_corpus();
  std::size_t both = 0, neither = 0, discrepancies = 0;
  for (const auto& set : c.sets) {
    const bool dispersion = check_dispersion(set, 2).pass;
    const bool clifford = check_anticommutation(set).pass;
    if (dispersion != clifford)
      ++discrepancies;
    else if (dispersion)
      ++both;
    else
      ++neither;
  }
  const bool sizes = c.sets.size() >= 200 && c.conjugates >= 20 && c.random >= 100 && c.perturbations >= 50;
  std::ostringstream d;
  d << c.sets.size() << " sets (" << c.catalog_count << " catalog, " << c.conjugates << " conjugates, " << c.random
    << " random, " << c.perturbations << " perturbations): " << both << " pass both, " << neither << " fail both, "
    << discrepancies << " discrepancies";
  return {sizes && discrepancies == 0, d.str()};
}

Outcome consequence_chain() {
  Rng rng(7);
  std::size_t checked = 0, broken = 0;
  for (const auto& name : catalog_names()) {
    std::vector<MatrixSet> sets{catalog(name)};
    for (int k = 0; k < 10; ++k) sets.push_back(catalog(name).conjugated(random_unitary(rng, 4).matrix(), name));
    for (const auto& set : sets) {
      if (!check_anticommutation(set).pass) {
        ++broken;
        continue;
      }
      ++checked;
      const bool td = check_trace_det(set).pass;
      const bool spectrum = involution_spectrum(set.beta()) == InvolutionSpectrum{2, 2};
      const StructureReport rep = check_alpha_structure(canonicalize_beta(set));
      bool norms = true;
      for (double v : rep.norm_condition) norms = norms && std::abs(v - 2.0) <= kCanonicalTolerance;
      if (!(td && spectrum && rep.pass && norms)) ++broken;
    }
  }
  return {broken == 0 && checked == 33, std::to_string(checked) + " anticommuting sets; " + std::to_string(broken) +
                                           " violate trace/det, beta spectrum or block structure"};
}

Outcome char_poly_oracle() {
  Rng rng(99);
  std::size_t mismatches = 0, total = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (int k = 0; k < 100; ++k) {
      const PolyMatrix x = constant_poly_matrix(random_hermitian(rng, n));
      if (!(char_poly(x).poly() == cofactor_char_poly(x))) ++mismatches;
      ++total;
    }
  return {mismatches == 0, std::to_string(total) + " matrices (100 per n in {2,3,4}), " +
                               std::to_string(mismatches) + " mismatches against cofactor expansion"};
}

Outcome numeric_spectrum() {
  const MatrixSet dp = catalog("dirac-pauli");
  const auto axis = linspace(-2, 2, 11);
  double max_error = 0.0;
  std::size_t rows = 0, flagged_valid = 0;
  for (double m : {0.0, 1.0}) {
    const SweepResult r = sweep(dp, momentum_grid(axis, axis, axis, m));
    max_error = std::max(max_error, r.max_energy_error);
    rows += r.rows.size();
    flagged_valid += r.flagged.size();
  }
  const MatrixSet perturbed = perturb(dp, 0, 0, 2, ComplexRational(Rational(1, 10)));
  const SweepResult bad = sweep(perturbed, momentum_grid(axis, axis, axis, 1.0));
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu rows, max |lambda - (+-E_p)| = %.3e, %zu flagged; perturbed set flagged on %zu of %zu points",
                rows, max_error, flagged_valid, bad.flagged.size(), bad.rows.size());
  return {max_error <= 1e-9 && flagged_valid == 0 && !bad.flagged.empty(), buf};
}

Outcome spinor_contract() {
  Rng rng(8);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  double worst_ratio = 0.0, worst_orth = 0.0;
  std::size_t samples = 0, bad = 0;
  for (const auto& name : catalog_names()) {
    const MatrixSet set = catalog(name);
    for (int k = 0; k < 100; ++k) {
      const MomentumSample sample{{coord(rng), coord(rng), coord(rng)}, mass(rng)};
      ++samples;
      const SpinorBasis b = positive_energy_spinors(set, sample);
      if (b.vectors.size() != 2) {
        ++bad;
        continue;
      }
      const Eigen::MatrixXcd h = numeric_hamiltonian(set, sample);
      const double bound = kSpinorResidualTolerance * (1.0 + sample.momentum_norm() + sample.m);
      double orth = std::abs(b.vectors[0].dot(b.vectors[1]));
      bool ok = true;
      for (const auto& u : b.vectors) {
        const double res = (h * u - b.energy * u).norm();
        worst_ratio = std::max(worst_ratio, res / bound);
        orth = std::max(orth, std::abs(u.norm() - 1.0));
        ok = ok && res <= bound;
      }
      worst_orth = std::max(worst_orth, orth);
      if (!ok || orth > kSpinorResidualTolerance) ++bad;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu samples, %zu violations; worst residual/bound = %.3e, worst orthonormality defect = %.3e", samples,
                bad, worst_ratio, worst_orth);
  return {bad == 0 && samples == 300, buf};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Outcome cli_contract() {
  const fs::path dir = fs::temp_directory_path() / ("diracverify-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path p;
    ~Cleanup() { fs::remove_all(p); }
  } cleanup{dir};

  std::vector<std::string> problems;
  bool round_trip = true;
  for (const auto& name : catalog_names()) {
    const std::string path = (dir / (name + ".json")).string();
    if (cli({"catalog", name, "--out", path}).code != 0) problems.push_back("catalog " + name);
    round_trip = round_trip && parse_matrix_file(path) == catalog(name);
  }
  if (!round_trip) problems.emplace_back("round trip");

  const std::string valid = (dir / "dirac-pauli.json").string();
  const std::string perturbed = (dir / "perturbed.json").string();
  const std::string malformed = (dir / "malformed.json").string();
  std::ofstream(perturbed) << serialize_matrix_set(perturb(catalog("dirac-pauli"), 0, 0, 2, ComplexRational(Rational(1, 10))));
  std::ofstream(malformed) << R"({"n": 4, "alpha": [[[["1.5", "0"]]]], "beta": []})";

  const std::vector<std::pair<std::vector<std::string>, int>> fixture = {
      {{"verify", valid}, 0},
      {{"verify", perturbed}, 1},
      {{"solve", "--n", "3", "--multiplicity", "2"}, 2},
      {{"verify", malformed}, 3},
      {{"derive", valid}, 0},
      {{"spectrum", valid, "--mass", "1", "--grid", "lin:-2:2:5"}, 0},
  };
  for (const auto& [args, expected] : fixture) {
    const CliRun a = cli(args), b = cli(args);
    std::string joined;
    for (const auto& x : args) joined += (joined.empty() ? "" : " ") + x;
    if (a.code != expected) problems.push_back(joined + " exited " + std::to_string(a.code));
    if (a.out != b.out) problems.push_back(joined + " output differs between runs");
  }
  std::string detail = "exit codes 0/1/2/3 on valid/perturbed/n=3 solve/malformed, repeated runs byte-identical, "
                       "catalog round trip exact";
  if (!problems.empty()) {
    detail = "problems:";
    for (const auto& p : problems) detail += " [" + p + "]";
  }
  return {problems.empty(), detail};
}

}  // namespace

int main() {
  criterion(1, "forced coefficients for n = 4, multiplicity 2", 1.0, forced_coefficients);
  criterion(2, "impossibility certificates for (2,2) and (3,2)", 1.0, certificates);
  criterion(3, "factorization (E^2 - s)^2 and E^2 - s", 0.0, factorization);
  criterion(4, "dispersion check equals anticommutation check", 60.0, equivalence_theorem);
  criterion(5, "consequence chain of the anticommutation relations", 0.0, consequence_chain);
  criterion(6, "Faddeev-LeVerrier against cofactor expansion", 0.0, char_poly_oracle);
  criterion(7, "numeric spectrum on the 11^3 grid", 30.0, numeric_spectrum);
  criterion(8, "positive-energy spinor contract", 0.0, spinor_contract);
  criterion(9, "CLI exit codes, determinism and round trip", 0.0, cli_contract);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
