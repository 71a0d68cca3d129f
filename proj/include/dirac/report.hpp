#pragma once

#include "dirac/dispersion.hpp"
#include "dirac/matrix.hpp"

#include <string>
#include <vector>

namespace dirac {

enum class Verdict { pass, fail, infeasible, error };

/// 0 pass/feasible, 1 fail, 2 infeasible by certificate, 3 usage or parse error.
int exit_code(Verdict v);
const char* to_string(Verdict v);

struct ReportSection {
  std::string tag;  // e.g. "trace conditions"
  std::vector<std::string> lines;
  bool pass = true;
  bool skipped = false;
};

struct RunReport {
  std::string command;
  std::string subject;
  Verdict verdict = Verdict::error;
  std::vector<ReportSection> sections;

  std::string render() const;
};

/// Dispersion, anticommutation, trace/determinant and structure sections.
RunReport verify_report(const MatrixSet& set, std::size_t multiplicity);
RunReport solve_report(const DegeneracyRequirement& req);
/// The implication chain in order: traces, determinants, beta spectrum,
/// beta canonical form, alpha block structure, anticommutators, cross terms.
RunReport derive_report(const MatrixSet& set);

}  // namespace dirac
