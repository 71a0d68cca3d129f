#include "dirac/spectrum.hpp"

#include "dirac/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace dirac {

double MomentumSample::momentum_norm() const { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

double MomentumSample::energy() const { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m); }

Eigen::MatrixXcd numeric_hamiltonian(const MatrixSet& set, const MomentumSample& sample) {
  const NumericSet x = to_numeric(set);
  return x.alphas[0] * sample.p[0] + x.alphas[1] * sample.p[1] + x.alphas[2] * sample.p[2] + x.beta * sample.m;
}

SpectrumRow eigensolve(const MatrixSet& set, const MomentumSample& sample) {
  const Eigen::MatrixXcd h = numeric_hamiltonian(set, sample);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  SpectrumRow row;
  row.sample = sample;
  const auto& values = solver.eigenvalues();
  row.eigenvalues.assign(values.data(), values.data() + values.size());
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  for (Eigen::Index k = 0; k < v.cols(); ++k)
    row.identity_residual = std::max(row.identity_residual, (h * v.col(k) - values[k] * v.col(k)).norm());
  return row;
}

SpinorBasis positive_energy_spinors(const MatrixSet& set, const MomentumSample& sample) {
  const double energy = sample.energy();
  if (!(energy > 0.0)) throw SpinorError("E_p = 0: the positive-energy eigenspace is undefined");

  const Eigen::MatrixXcd h = numeric_hamiltonian(set, sample);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const double tol = kDegeneracyBreakThreshold * (1.0 + energy);
  std::vector<Eigen::Index> hits;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    if (std::abs(solver.eigenvalues()[k] - energy) <= tol) hits.push_back(k);
  if (hits.size() != 2)
    throw SpinorError("positive-energy eigenspace has dimension " + std::to_string(hits.size()) + ", expected 2");

  const auto n = h.rows();
  Eigen::MatrixXcd basis(n, 2);
  basis.col(0) = solver.eigenvectors().col(hits[0]);
  basis.col(1) = solver.eigenvectors().col(hits[1]);
  const Eigen::MatrixXcd projector = basis * basis.adjoint();

  SpinorBasis out;
  out.energy = energy;
  for (Eigen::Index col = 0; col < n && out.vectors.size() < 2; ++col) {
    Eigen::VectorXcd v = projector.col(col);
    for (const auto& u : out.vectors) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    v /= norm;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(v[k]) > 1e-12) {
        v *= std::conj(v[k]) / std::abs(v[k]);
        break;
      }
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

SweepResult sweep(const MatrixSet& set, const std::vector<MomentumSample>& grid, double flag_threshold) {
  SweepResult result;
  result.rows.reserve(grid.size());
  const std::size_t n = set.dimension();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    SpectrumRow row = eigensolve(set, grid[idx]);
    const auto& ev = row.eigenvalues;
    const double energy = grid[idx].energy();
    double symmetry = 0.0;
    double split = 0.0;
    for (std::size_t k = 0; k < n; ++k) symmetry = std::max(symmetry, std::abs(ev[k] + ev[n - 1 - k]));
    if (n % 2 == 0) {
      for (std::size_t k = 0; k + 1 < n / 2; ++k) {
        split = std::max(split, std::abs(ev[k + 1] - ev[k]));
        split = std::max(split, std::abs(ev[n / 2 + k + 1] - ev[n / 2 + k]));
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double expected = k < n / 2 ? -energy : energy;
        result.max_energy_error = std::max(result.max_energy_error, std::abs(ev[k] - expected));
      }
    }
    result.max_symmetry_defect = std::max(result.max_symmetry_defect, symmetry);
    result.max_degeneracy_split = std::max(result.max_degeneracy_split, split);
    if (symmetry > flag_threshold || split > flag_threshold) result.flagged.push_back(idx);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::vector<MomentumSample> momentum_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                                          const std::vector<double>& zs, double mass) {
  std::vector<MomentumSample> out;
  out.reserve(xs.size() * ys.size() * zs.size());
  for (double x : xs)
    for (double y : ys)
      for (double z : zs) out.push_back({{x, y, z}, mass});
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  if (count == 1) return {lo};
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
  return out;
}

}  // namespace dirac
