#pragma once

#include "dirac/poly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac {

/// Dense n x n matrix over the Gaussian rationals, row-major, 0-based.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}
  ExactMatrix(std::size_t n, std::vector<ComplexRational> row_major);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<ComplexRational>& diag);

  std::size_t size() const { return n_; }
  ComplexRational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ComplexRational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  ExactMatrix adjoint() const;
  ComplexRational trace() const;
  /// Gaussian elimination over Q(i).
  ComplexRational determinant() const;
  /// Rank by exact elimination.
  std::size_t rank() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ComplexRational& c, ExactMatrix a);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ComplexRational> data_;
};

/// First (i, j) with X(i,j) != conj(X(j,i)), 0-based.
struct HermiticityDefect {
  std::size_t row;
  std::size_t col;
};

std::optional<HermiticityDefect> find_hermiticity_defect(const ExactMatrix& x);

/// Rejection of a non-Hermitian entry. Indices are 1-based in the message.
class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(std::string matrix, std::size_t row, std::size_t col);
  const std::string& matrix() const { return matrix_; }
  /// 0-based offending pair.
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::string matrix_;
  std::size_t row_;
  std::size_t col_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names used in reports for the four matrices.
inline constexpr std::array<const char*, 4> kMatrixNames = {"alpha1", "alpha2", "alpha3", "beta"};

/// A candidate (alpha1, alpha2, alpha3, beta) of Hermitian n x n matrices,
/// 2 <= n <= 4. Hermiticity is checked once, here.
class MatrixSet {
 public:
  MatrixSet(std::array<ExactMatrix, 3> alphas, ExactMatrix beta, std::string label = {});

  std::size_t dimension() const { return beta_.size(); }
  const std::array<ExactMatrix, 3>& alphas() const { return alphas_; }
  const ExactMatrix& alpha(std::size_t k) const { return alphas_.at(k); }
  const ExactMatrix& beta() const { return beta_; }
  const std::string& label() const { return label_; }
  /// alpha1, alpha2, alpha3, beta in that order.
  const ExactMatrix& matrix(std::size_t k) const { return k < 3 ? alphas_[k] : beta_; }

  /// U^dagger X U for every matrix. U must be unitary (not checked here).
  MatrixSet conjugated(const ExactMatrix& unitary, std::string label) const;

  friend bool operator==(const MatrixSet& a, const MatrixSet& b) {
    return a.alphas_ == b.alphas_ && a.beta_ == b.beta_;
  }

 private:
  std::array<ExactMatrix, 3> alphas_;
  ExactMatrix beta_;
  std::string label_;
};

/// n x n matrix of MultiPoly.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;
  /// entry(i,j) == conj(entry(j,i)) for all pairs.
  bool is_hermitian() const;
  MultiPoly trace() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<MultiPoly> data_;
};

/// h(p) = alpha1 p1 + alpha2 p2 + alpha3 p3 + beta m.
PolyMatrix build_hamiltonian(const MatrixSet& set);

/// Monic det(E I - M).
class CharPoly {
 public:
  explicit CharPoly(EPoly poly);

  const EPoly& poly() const { return poly_; }
  std::size_t degree() const { return static_cast<std::size_t>(poly_.degree()); }
  /// c_k, the coefficient of E^k.
  MultiPoly coefficient(std::size_t k) const { return poly_.coefficient(k); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  EPoly poly_;
};

/// Faddeev-LeVerrier; supports 1 <= n <= 4.
CharPoly char_poly(const PolyMatrix& m);

struct TraceDet {
  ComplexRational trace;
  ComplexRational det;
};

/// Trace and determinant of alpha1, alpha2, alpha3, beta.
std::array<TraceDet, 4> trace_and_det(const MatrixSet& set);

}  // namespace dirac
