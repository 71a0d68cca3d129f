#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths it
// is used to check: the determinant oracle is a cofactor expansion over EPoly,
// and the dispersion oracle evaluates at points where E_p is rational.

#include "dirac/clifford.hpp"
#include "dirac/matrix.hpp"
#include "dirac/poly.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace dirac::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int num_range = 3, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline ComplexRational small_complex(Rng& rng) { return {small_rational(rng), small_rational(rng)}; }

inline ExactMatrix random_hermitian(Rng& rng, std::size_t n) {
  ExactMatrix x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, i) = ComplexRational(small_rational(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      x(i, j) = small_complex(rng);
      x(j, i) = x(i, j).conj();
    }
  }
  return x;
}

inline MatrixSet random_set(Rng& rng, std::size_t n) {
  return MatrixSet({random_hermitian(rng, n), random_hermitian(rng, n), random_hermitian(rng, n)},
                   random_hermitian(rng, n), "random");
}

inline MultiPoly random_poly(Rng& rng, int max_terms = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  MultiPoly out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial mono;
    for (auto& e : mono.exponents) e = static_cast<std::uint32_t>(exp(rng)) / 2;
    out += MultiPoly::term(small_complex(rng), mono);
  }
  return out;
}

/// Random homogeneous polynomial of the given degree.
inline MultiPoly random_homogeneous(Rng& rng, std::uint32_t degree, int terms = 3) {
  std::uniform_int_distribution<int> var(0, 3);
  MultiPoly out;
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    for (std::uint32_t d = 0; d < degree; ++d) ++mono.exponents[static_cast<std::size_t>(var(rng))];
    out += MultiPoly::term(small_complex(rng), mono);
  }
  return out;
}

inline EPoly random_epoly(Rng& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<MultiPoly> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = random_poly(rng, 3, 2);
  return EPoly(std::move(coeffs));
}

inline Point random_point(Rng& rng) {
  return {small_complex(rng), small_complex(rng), small_complex(rng), small_complex(rng)};
}

/// det(E I - M) by cofactor expansion along the first row, in EPoly arithmetic.
inline EPoly cofactor_char_poly(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<EPoly>> a(n, std::vector<EPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = EPoly(-m(i, j));
      if (i == j) a[i][j] += EPoly::e_power(1);
    }
  auto det = [](auto&& self, const std::vector<std::vector<EPoly>>& x) -> EPoly {
    const std::size_t k = x.size();
    if (k == 1) return x[0][0];
    EPoly sum;
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<std::vector<EPoly>> minor;
      for (std::size_t i = 1; i < k; ++i) {
        std::vector<EPoly> row;
        for (std::size_t j = 0; j < k; ++j)
          if (j != col) row.push_back(x[i][j]);
        minor.push_back(std::move(row));
      }
      const EPoly term = x[0][col] * self(self, minor);
      if (col % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  };
  return det(det, a);
}

/// Polynomial matrix with constant (degree-0) random Hermitian entries.
inline PolyMatrix constant_poly_matrix(const ExactMatrix& x) {
  PolyMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out(i, j) = MultiPoly(x(i, j));
  return out;
}

/// Evaluates q(E) at a rational E value, with the MultiPoly coefficients at `pt`.
inline ComplexRational evaluate_epoly(const EPoly& q, const Point& pt, const ComplexRational& e) {
  ComplexRational sum;
  ComplexRational power(1L);
  for (const auto& c : q.coeffs()) {
    sum += c.evaluate(pt) * power;
    power *= e;
  }
  return sum;
}

struct RationalEnergyPoint {
  Point point;
  long energy;
};

/// (p1, p2, p3, m) with integer sqrt(p^2 + m^2).
inline std::vector<RationalEnergyPoint> rational_energy_points() {
  auto pt = [](long a, long b, long c, long d, long e) {
    return RationalEnergyPoint{{ComplexRational(a), ComplexRational(b), ComplexRational(c), ComplexRational(d)}, e};
  };
  return {pt(1, 2, 2, 0, 3), pt(2, 3, 6, 0, 7), pt(1, 4, 8, 0, 9), pt(1, 2, 2, 4, 5), pt(2, 4, 5, 6, 9),
          pt(0, 0, 0, 1, 1), pt(3, 0, 0, 4, 5), pt(-2, 1, 2, 4, 5)};
}

/// Random exact unitary from signed permutations, phases and Pythagorean rotations.
inline ExactUnitary random_unitary(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<long> signs(n);
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  std::uniform_int_distribution<int> phase(0, 3);
  std::vector<ComplexRational> phases(n);
  const std::array<ComplexRational, 4> units = {ComplexRational(1L), ComplexRational(-1L), ComplexRational::i(),
                                                -ComplexRational::i()};
  for (auto& z : phases) z = units[static_cast<std::size_t>(phase(rng))];
  const std::array<std::pair<long, long>, 3> triples = {{{3, 4}, {5, 12}, {8, 15}}};
  const std::array<long, 3> hyp = {5, 13, 17};
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  std::uniform_int_distribution<std::size_t> axis(0, n - 1);
  const std::size_t t = pick(rng);
  std::size_t i = axis(rng), j = axis(rng);
  if (i == j) j = (i + 1) % n;
  Rational c(triples[t].first, hyp[t]), s(triples[t].second, hyp[t]);
  c.canonicalize();
  s.canonicalize();
  return ExactUnitary::signed_permutation(perm, signs) * ExactUnitary::phases(phases) *
         ExactUnitary::rotation(n, i, j, c, s);
}

/// Adds `delta` at (i, j) and its conjugate at (j, i) of matrix k.
inline MatrixSet perturb(const MatrixSet& set, std::size_t k, std::size_t i, std::size_t j,
                         const ComplexRational& delta) {
  std::array<ExactMatrix, 4> m = {set.alpha(0), set.alpha(1), set.alpha(2), set.beta()};
  if (i == j) {
    m[k](i, i) += ComplexRational(delta.re());
  } else {
    m[k](i, j) += delta;
    m[k](j, i) += delta.conj();
  }
  return MatrixSet({m[0], m[1], m[2]}, m[3], set.label() + " (perturbed)");
}

inline MatrixSet replace(const MatrixSet& set, std::size_t k, const ExactMatrix& x) {
  std::array<ExactMatrix, 4> m = {set.alpha(0), set.alpha(1), set.alpha(2), set.beta()};
  m[k] = x;
  return MatrixSet({m[0], m[1], m[2]}, m[3], set.label());
}

}  // namespace dirac::testing
