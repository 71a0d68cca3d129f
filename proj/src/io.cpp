#include "dirac/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac {

namespace {

using nlohmann::json;

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Rational parse_component(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "rational must be a string such as \"1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const RationalSyntaxError&) {
    throw ParseError(where, "not a rational literal \"" + v.get<std::string>() + "\"");
  }
}

ExactMatrix parse_matrix(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "matrix must be an array of rows");
  if (v.size() != n)
    throw ParseError(where, "matrix has " + std::to_string(v.size()) + " rows, expected " + std::to_string(n));
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = index_path(where, i);
    const json& row = v[i];
    if (!row.is_array()) throw ParseError(row_path, "row must be an array of entries");
    if (row.size() != n)
      throw ParseError(row_path, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n) +
                                     " (matrix is not square)");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string entry_path = index_path(row_path, j);
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError(entry_path, "entry must be a two-element array [re, im]");
      Rational re = parse_component(entry[0], index_path(entry_path, 0));
      Rational im = parse_component(entry[1], index_path(entry_path, 1));
      out(i, j) = ComplexRational(std::move(re), std::move(im));
    }
  }
  return out;
}

MatrixSet parse_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("$", "top level must be an object");
  if (!doc.contains("n")) throw ParseError("n", "missing field");
  const json& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long>() < 2 || jn.get<long>() > 4)
    throw ParseError("n", "must be the integer 2, 3 or 4");
  const auto n = jn.get<std::size_t>();

  if (!doc.contains("alpha")) throw ParseError("alpha", "missing field");
  const json& ja = doc["alpha"];
  if (!ja.is_array() || ja.size() != 3)
    throw ParseError("alpha", "expected an array of exactly 3 matrices" +
                                  (ja.is_array() ? ", got " + std::to_string(ja.size()) : std::string()));
  if (!doc.contains("beta")) throw ParseError("beta", "missing field");

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("label", "must be a string");
    label = doc["label"].get<std::string>();
  }

  std::array<ExactMatrix, 3> alphas;
  for (std::size_t k = 0; k < 3; ++k) alphas[k] = parse_matrix(ja[k], n, index_path("alpha", k));
  ExactMatrix beta = parse_matrix(doc["beta"], n, "beta");

  try {
    return MatrixSet(std::move(alphas), std::move(beta), std::move(label));
  } catch (const NotHermitianError& e) {
    const std::string base = e.matrix() == "beta" ? "beta" : index_path("alpha", e.matrix().back() - '1');
    const std::string a = index_path(index_path(base, e.row()), e.col());
    const std::string b = index_path(index_path(base, e.col()), e.row());
    throw ParseError(a, "Hermiticity violation: " + a + " is not the complex conjugate of " + b);
  }
}

void write_matrix(std::ostringstream& os, const ExactMatrix& x, const std::string& indent) {
  const std::size_t n = x.size();
  os << "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << indent << "  [";
    for (std::size_t j = 0; j < n; ++j) {
      os << (j ? ", " : "") << "[\"" << to_string(x(i, j).re()) << "\", \"" << to_string(x(i, j).im()) << "\"]";
    }
    os << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  os << indent << "]";
}

std::vector<double> parse_axis(std::string_view spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4 || parts[0] != "lin")
    throw GridSpecError("grid axis \"" + std::string(spec) + "\" must have the form lin:lo:hi:count");
  double lo = 0, hi = 0;
  long count = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("lo");
    hi = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("hi");
    count = std::stol(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw GridSpecError("grid axis \"" + std::string(spec) + "\" has a malformed number");
  }
  if (count < 0) throw GridSpecError("grid axis \"" + std::string(spec) + "\" has a negative count");
  return linspace(lo, hi, static_cast<std::size_t>(count));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

MatrixSet parse_matrix_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_document(doc);
}

MatrixSet parse_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string serialize_matrix_set(const MatrixSet& set) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << set.dimension() << ",\n";
  if (!set.label().empty()) os << "  \"label\": " << json(set.label()).dump() << ",\n";
  os << "  \"alpha\": [\n";
  for (std::size_t k = 0; k < 3; ++k) {
    os << "    ";
    write_matrix(os, set.alpha(k), "    ");
    os << (k < 2 ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"beta\": ";
  write_matrix(os, set.beta(), "  ");
  os << "\n}\n";
  return os.str();
}

std::vector<MomentumSample> parse_grid(std::string_view spec, double mass) {
  std::vector<std::string_view> axes;
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    axes.push_back(spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (axes.size() != 1 && axes.size() != 3)
    throw GridSpecError("grid spec needs one axis (shared) or three comma-separated axes");
  const auto x = parse_axis(axes[0]);
  const auto y = axes.size() == 3 ? parse_axis(axes[1]) : x;
  const auto z = axes.size() == 3 ? parse_axis(axes[2]) : x;
  return momentum_grid(x, y, z, mass);
}

std::string render_csv(const std::vector<SpectrumRow>& rows, std::size_t n) {
  std::string out = "px,py,pz,m";
  for (std::size_t k = 1; k <= n; ++k) out += ",e" + std::to_string(k);
  out += "\n";
  for (const auto& row : rows) {
    out += format_double(row.sample.p[0]) + "," + format_double(row.sample.p[1]) + "," +
           format_double(row.sample.p[2]) + "," + format_double(row.sample.m);
    for (double e : row.eigenvalues) out += "," + format_double(e);
    out += "\n";
  }
  return out;
}

}  // namespace dirac
