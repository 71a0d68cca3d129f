#include "dirac/report.hpp"

#include "dirac/clifford.hpp"

#include <cstdio>

namespace dirac {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

Verdict overall(const std::vector<ReportSection>& sections) {
  for (const auto& s : sections)
    if (!s.skipped && !s.pass) return Verdict::fail;
  return Verdict::pass;
}

ReportSection dispersion_section(const MatrixSet& set, std::size_t r) {
  const DispersionReport rep = check_dispersion(set, r);
  ReportSection sec{"dispersion: E_p is a root of multiplicity " + std::to_string(r), {}, rep.pass};
  sec.lines.push_back("P(E) = " + rep.char_poly.to_string());
  for (const auto& res : rep.residuals) sec.lines.push_back(res.name + " = " + res.value.to_string());
  return sec;
}

ReportSection anticommutation_section(const MatrixSet& set) {
  const CliffordReport rep = check_anticommutation(set);
  ReportSection sec{"anticommutation relations", {}, rep.pass};
  if (rep.pass)
    sec.lines.emplace_back("{alpha_i, alpha_j} = 2 delta_ij I, {alpha_i, beta} = 0, beta^2 = I all hold");
  else
    sec.lines.push_back("nonzero defects: " + joined(rep.failures()));
  return sec;
}

ReportSection trace_det_section(const MatrixSet& set) {
  const TraceDetReport rep = check_trace_det(set);
  ReportSection sec{"trace and determinant conditions", {}, rep.pass};
  for (std::size_t k = 0; k < 4; ++k)
    sec.lines.push_back(std::string(kMatrixNames[k]) + ": Tr = " + rep.values[k].trace.to_string() +
                        ", det = " + rep.values[k].det.to_string());
  return sec;
}

std::vector<std::string> structure_lines(const StructureReport& rep) {
  std::vector<std::string> lines;
  std::string spectrum;
  for (double v : rep.beta_spectrum) spectrum += (spectrum.empty() ? "" : " ") + fmt(v);
  lines.push_back("beta spectrum: " + spectrum + (rep.beta_canonical ? " (beta = diag(1,1,-1,-1))" : ""));
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string norm = rep.exact_norm_condition ? to_string((*rep.exact_norm_condition)[k])
                                                      : fmt(rep.norm_condition[k]);
    lines.push_back(std::string(kMatrixNames[k]) + ": diagonal 2x2 blocks " +
                    (rep.alpha_blocks[k] ? "vanish" : "DO NOT vanish") + ", |a13|^2+|a14|^2+|a23|^2+|a24|^2 = " +
                    norm);
  }
  if (rep.tolerance > 0) lines.push_back("checked to tolerance " + fmt(rep.tolerance));
  return lines;
}

ReportSection structure_section(const MatrixSet& set) {
  ReportSection sec{"alpha block structure in the beta-diagonal basis", {}, false};
  try {
    const CanonicalForm form = canonicalize_beta(set);
    sec.lines.push_back("transform: " + form.description);
    const StructureReport rep = check_alpha_structure(form);
    for (auto& l : structure_lines(rep)) sec.lines.push_back(std::move(l));
    sec.pass = rep.pass;
  } catch (const CanonicalizationError& e) {
    sec.lines.emplace_back(e.what());
  }
  return sec;
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::infeasible: return 2;
    case Verdict::error: return 3;
  }
  return 3;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::infeasible: return "infeasible";
    case Verdict::error: return "error";
  }
  return "error";
}

std::string RunReport::render() const {
  std::string out = command + ": " + subject + "\n";
  for (const auto& sec : sections) {
    out += "[" + sec.tag + "] " + (sec.skipped ? "SKIPPED" : (sec.pass ? "PASS" : "FAIL")) + "\n";
    for (const auto& line : sec.lines) out += "  " + line + "\n";
  }
  out += std::string("verdict: ") + to_string(verdict) + "\n";
  return out;
}

RunReport verify_report(const MatrixSet& set, std::size_t multiplicity) {
  RunReport report;
  report.command = "verify";
  report.subject = (set.label().empty() ? std::string("(unlabelled)") : set.label()) +
                   " (n = " + std::to_string(set.dimension()) + ", multiplicity " + std::to_string(multiplicity) + ")";
  report.sections.push_back(dispersion_section(set, multiplicity));
  report.sections.push_back(anticommutation_section(set));
  if (set.dimension() == 4) {
    report.sections.push_back(trace_det_section(set));
    report.sections.push_back(structure_section(set));
  } else {
    for (const char* tag : {"trace and determinant conditions", "alpha block structure in the beta-diagonal basis"})
      report.sections.push_back({tag, {"requires n = 4"}, true, true});
  }
  report.verdict = overall(report.sections);
  return report;
}

RunReport solve_report(const DegeneracyRequirement& req) {
  RunReport report;
  report.command = "solve";
  report.subject = "n = " + std::to_string(req.n) + ", multiplicity " + std::to_string(req.r);
  const SolveResult result = solve_forced_coefficients(req);
  if (const auto* sol = std::get_if<ForcedCoefficientSolution>(&result)) {
    ReportSection sec{"forced coefficients", sol->render(), true};
    sec.lines.emplace_back("where s = E_p^2 = p1^2 + p2^2 + p3^2 + m^2");
    report.sections.push_back(std::move(sec));
    if (sol->complete() && req.n % 2 == 0) {
      ReportSection fac{"factorization", {}, true};
      try {
        fac.lines.push_back("P(E) = " + factorized_spectrum(*sol));
      } catch (const FactorizationError& e) {
        fac.lines.emplace_back(e.what());
        fac.pass = false;
      }
      report.sections.push_back(std::move(fac));
    }
    report.verdict = overall(report.sections);
  } else {
    const auto& cert = std::get<InfeasibilityCertificate>(result);
    report.sections.push_back({"infeasibility certificate", cert.render(), false});
    report.verdict = Verdict::infeasible;
  }
  return report;
}

RunReport derive_report(const MatrixSet& set) {
  if (set.dimension() != 4) throw DimensionError("derive requires n = 4, got n = " + std::to_string(set.dimension()));
  RunReport report;
  report.command = "derive";
  report.subject = set.label().empty() ? std::string("(unlabelled)") : set.label();

  const TraceDetReport td = check_trace_det(set);
  ReportSection traces{"trace conditions", {}, true};
  ReportSection dets{"determinant conditions", {}, true};
  for (std::size_t k = 0; k < 4; ++k) {
    traces.lines.push_back(std::string("Tr(") + kMatrixNames[k] + ") = " + td.values[k].trace.to_string());
    dets.lines.push_back(std::string("det(") + kMatrixNames[k] + ") = " + td.values[k].det.to_string());
    traces.pass = traces.pass && td.values[k].trace.is_zero();
    dets.pass = dets.pass && td.values[k].det == ComplexRational(1L);
  }
  report.sections.push_back(std::move(traces));
  report.sections.push_back(std::move(dets));

  ReportSection spectrum{"beta spectrum", {}, false};
  if (auto spec = involution_spectrum(set.beta())) {
    spectrum.lines.push_back("beta^2 = I; eigenvalue +1 with multiplicity " + std::to_string(spec->plus) +
                             ", -1 with multiplicity " + std::to_string(spec->minus));
    spectrum.pass = spec->plus == 2 && spec->minus == 2;
  } else {
    spectrum.lines.emplace_back("beta^2 != I");
  }
  report.sections.push_back(std::move(spectrum));

  ReportSection canonical{"beta canonical form", {}, false};
  ReportSection structure{"alpha block structure", {}, false};
  try {
    const CanonicalForm form = canonicalize_beta(set);
    canonical.lines.push_back("transform: " + form.description);
    canonical.lines.push_back(std::string("exact: ") + (form.exact ? "yes" : "no"));
    const StructureReport rep = check_alpha_structure(form);
    canonical.pass = rep.beta_canonical;
    structure.lines = structure_lines(rep);
    structure.pass = rep.pass;
  } catch (const CanonicalizationError& e) {
    canonical.lines.emplace_back(e.what());
    structure.lines.emplace_back("requires the beta canonical form");
    structure.skipped = true;
  }
  report.sections.push_back(std::move(canonical));
  report.sections.push_back(std::move(structure));

  ReportSection anti = anticommutation_section(set);
  report.sections.push_back(std::move(anti));

  const CrossTermReport cross = cross_term_audit(set);
  ReportSection cross_sec{"cross terms p_i p_j in c2", {}, cross.pass && cross.consistent};
  constexpr std::array<const char*, 3> p = {"p1", "p2", "p3"};
  for (const auto& t : cross.terms)
    cross_sec.lines.push_back(std::string(p[t.i]) + "*" + p[t.j] + ": coefficient " + t.coefficient.to_string() +
                              ", ({a_i,a_j})_11 + ({a_i,a_j})_22 = " + t.upper_block_sum.to_string());
  report.sections.push_back(std::move(cross_sec));

  report.verdict = overall(report.sections);
  return report;
}

}  // namespace dirac
