#pragma once

#include "dirac/matrix.hpp"
#include "dirac/spectrum.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dirac {

/// Malformed matrix-set file. The message starts with the location: a JSON
/// path such as `alpha[1][0][2][0]`, or the line/column of a syntax error.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

MatrixSet parse_matrix_text(std::string_view text);
MatrixSet parse_matrix_file(const std::filesystem::path& path);

/// Deterministic JSON text, one matrix row per line, entries as ["re", "im"].
std::string serialize_matrix_set(const MatrixSet& set);

/// `lin:lo:hi:count`, either once (used for all three axes) or three times
/// separated by commas (x, y, z).
class GridSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
std::vector<MomentumSample> parse_grid(std::string_view spec, double mass);

/// Header `px,py,pz,m,e1,...,en`, values with 17 significant digits.
std::string render_csv(const std::vector<SpectrumRow>& rows, std::size_t n);

}  // namespace dirac
