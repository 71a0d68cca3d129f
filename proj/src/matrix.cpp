#include "dirac/matrix.hpp"

namespace dirac {

ExactMatrix::ExactMatrix(std::size_t n, std::vector<ComplexRational> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw DimensionError("ExactMatrix: entry count does not match n*n");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ComplexRational(1L);
  return out;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ComplexRational>& diag) {
  ExactMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(j, i).conj();
  return out;
}

ComplexRational ExactMatrix::trace() const {
  ComplexRational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Row-echelon form in place; returns (rank, determinant sign/scale product).
std::pair<std::size_t, ComplexRational> eliminate(ExactMatrix& a) {
  const std::size_t n = a.size();
  ComplexRational det(1L);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      det = ComplexRational();
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(rank, j));
      det = -det;
    }
    const ComplexRational p = a(rank, col);
    det *= p;
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const ComplexRational f = a(i, col) / p;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  if (rank < n) det = ComplexRational();
  return {rank, det};
}

}  // namespace

ComplexRational ExactMatrix::determinant() const {
  ExactMatrix work = *this;
  return eliminate(work).second;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix work = *this;
  return eliminate(work).first;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.n_ != n_) throw DimensionError("ExactMatrix: size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.n_ != n_) throw DimensionError("ExactMatrix: size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("ExactMatrix: size mismatch");
  const std::size_t n = a.n_;
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

ExactMatrix operator*(const ComplexRational& c, ExactMatrix a) {
  for (auto& z : a.data_) z *= c;
  return a;
}

std::optional<HermiticityDefect> find_hermiticity_defect(const ExactMatrix& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j)
      if (!(x(i, j) == x(j, i).conj())) return HermiticityDefect{i, j};
  return std::nullopt;
}

NotHermitianError::NotHermitianError(std::string matrix, std::size_t row, std::size_t col)
    : std::invalid_argument(matrix + " is not Hermitian: entry (" + std::to_string(row + 1) + "," +
                            std::to_string(col + 1) + ") is not the conjugate of entry (" +
                            std::to_string(col + 1) + "," + std::to_string(row + 1) + ")"),
      matrix_(std::move(matrix)),
      row_(row),
      col_(col) {}

MatrixSet::MatrixSet(std::array<ExactMatrix, 3> alphas, ExactMatrix beta, std::string label)
    : alphas_(std::move(alphas)), beta_(std::move(beta)), label_(std::move(label)) {
  const std::size_t n = beta_.size();
  if (n < 2 || n > 4) throw DimensionError("MatrixSet: dimension must be 2, 3 or 4, got " + std::to_string(n));
  for (std::size_t k = 0; k < 4; ++k) {
    const ExactMatrix& x = matrix(k);
    if (x.size() != n) throw DimensionError(std::string("MatrixSet: ") + kMatrixNames[k] + " has the wrong size");
    if (auto defect = find_hermiticity_defect(x)) throw NotHermitianError(kMatrixNames[k], defect->row, defect->col);
  }
}

MatrixSet MatrixSet::conjugated(const ExactMatrix& unitary, std::string label) const {
  const ExactMatrix u_dag = unitary.adjoint();
  auto conj = [&](const ExactMatrix& x) { return u_dag * x * unitary; };
  return MatrixSet({conj(alphas_[0]), conj(alphas_[1]), conj(alphas_[2])}, conj(beta_), std::move(label));
}

// ---------------------------------------------------------------------------

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
  return true;
}

MultiPoly PolyMatrix::trace() const {
  MultiPoly t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("PolyMatrix: size mismatch");
  const std::size_t n = a.n_;
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PolyMatrix build_hamiltonian(const MatrixSet& set) {
  const std::size_t n = set.dimension();
  PolyMatrix h(n);
  constexpr std::array<Var, 4> vars = {Var::p1, Var::p2, Var::p3, Var::m};
  for (std::size_t k = 0; k < 4; ++k) {
    const ExactMatrix& x = set.matrix(k);
    const Monomial mono = Monomial::of(vars[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) += MultiPoly::term(x(i, j), mono);
  }
  return h;
}

CharPoly::CharPoly(EPoly poly) : poly_(std::move(poly)) {
  if (poly_.is_zero() || !(poly_.coeffs().back() == MultiPoly(1L)))
    throw std::invalid_argument("CharPoly: polynomial must be monic");
}

CharPoly char_poly(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n < 1 || n > 4) throw DimensionError("char_poly: supported sizes are 1..4, got " + std::to_string(n));

  // M_1 = I, c_{n-1} = -tr(A);  M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<MultiPoly> c(n + 1);
  c[n] = MultiPoly(1L);
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(1L);
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix am = a * m;
    c[n - k] = am.trace() * ComplexRational(Rational(Rational(-1) / static_cast<long>(k)));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    m = std::move(am);
  }
  return CharPoly(EPoly(std::move(c)));
}

std::array<TraceDet, 4> trace_and_det(const MatrixSet& set) {
  std::array<TraceDet, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = {set.matrix(k).trace(), set.matrix(k).determinant()};
  return out;
}

}  // namespace dirac
