#include "dirac/cli.hpp"

#include "dirac/clifford.hpp"
#include "dirac/io.hpp"
#include "dirac/report.hpp"
#include "dirac/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace dirac {

namespace {

constexpr int kUsageError = 3;

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric audits of Dirac matrix sets", "diracverify"};
  app.require_subcommand(1);

  std::string file;
  std::size_t multiplicity = 2;
  auto* verify = app.add_subcommand("verify", "Full audit: dispersion, anticommutation, trace/det, structure");
  verify->add_option("file", file, "Matrix-set JSON file")->required();
  verify->add_option("--multiplicity,-r", multiplicity, "Required multiplicity of E_p")->capture_default_str();

  std::size_t solve_n = 0;
  std::size_t solve_r = 0;
  auto* solve = app.add_subcommand("solve", "Forced characteristic-polynomial coefficients or a certificate");
  solve->add_option("--n", solve_n, "Number of components")->required();
  solve->add_option("--multiplicity,-r", solve_r, "Required multiplicity of E_p")->required();

  auto* derive = app.add_subcommand("derive", "Step-by-step audit of the implication chain (n = 4)");
  derive->add_option("file", file, "Matrix-set JSON file")->required();

  double mass = 0.0;
  std::string grid_spec;
  std::string csv_out;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of h(p) over a momentum grid, as CSV");
  spectrum->add_option("file", file, "Matrix-set JSON file")->required();
  spectrum->add_option("--mass", mass, "Mass m")->required();
  spectrum->add_option("--grid", grid_spec, "lin:lo:hi:count, once or three times comma-separated")->required();
  spectrum->add_option("--out", csv_out, "CSV output path (standard output when omitted)");

  std::string catalog_name;
  std::string catalog_out;
  auto* cat = app.add_subcommand("catalog", "Write a standard representation as a matrix-set file");
  cat->add_option("name", catalog_name, "dirac-pauli, weyl-chiral or majorana")->required();
  cat->add_option("--out", catalog_out, "Output path (standard output when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      const MatrixSet set = parse_matrix_file(file);
      const RunReport report = verify_report(set, multiplicity);
      out << report.render();
      return exit_code(report.verdict);
    }
    if (*solve) {
      const RunReport report = solve_report({solve_n, solve_r});
      out << report.render();
      return exit_code(report.verdict);
    }
    if (*derive) {
      const MatrixSet set = parse_matrix_file(file);
      const RunReport report = derive_report(set);
      out << report.render();
      return exit_code(report.verdict);
    }
    if (*spectrum) {
      if (mass < 0) throw std::invalid_argument("mass must be non-negative");
      const MatrixSet set = parse_matrix_file(file);
      const auto grid = parse_grid(grid_spec, mass);
      const SweepResult result = sweep(set, grid);
      const std::string csv = render_csv(result.rows, set.dimension());
      if (csv_out.empty()) {
        out << csv;
      } else {
        if (!write_file(csv_out, csv, err)) return kUsageError;
        out << "spectrum: " << (set.label().empty() ? file : set.label()) << "\n";
        out << "  rows: " << result.rows.size() << "\n";
        out << "  flagged rows: " << result.flagged.size() << "\n";
        out << "  max |lambda - (+-E_p)|: " << fmt(result.max_energy_error) << "\n";
        out << "  max +- symmetry defect: " << fmt(result.max_symmetry_defect) << "\n";
        out << "  max degeneracy split: " << fmt(result.max_degeneracy_split) << "\n";
        out << "verdict: " << (result.flagged.empty() ? "pass" : "fail") << "\n";
      }
      return result.flagged.empty() ? 0 : 1;
    }
    if (*cat) {
      const std::string text = serialize_matrix_set(catalog(catalog_name));
      if (catalog_out.empty()) {
        out << text;
      } else if (!write_file(catalog_out, text, err)) {
        return kUsageError;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dirac
