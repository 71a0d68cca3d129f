#pragma once

#include "dirac/matrix.hpp"

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <vector>

namespace dirac {

inline constexpr double kSpinorResidualTolerance = 1e-10;
inline constexpr double kEigenvalueTolerance = 1e-9;
inline constexpr double kDegeneracyBreakThreshold = 1e-6;

struct MomentumSample {
  std::array<double, 3> p{};
  double m = 0.0;

  double momentum_norm() const;
  /// +sqrt(p.p + m^2)
  double energy() const;
};

struct SpectrumRow {
  MomentumSample sample;
  std::vector<double> eigenvalues;  // ascending
  double identity_residual = 0.0;   // max_k |h v_k - lambda_k v_k|
};

Eigen::MatrixXcd numeric_hamiltonian(const MatrixSet& set, const MomentumSample& sample);

SpectrumRow eigensolve(const MatrixSet& set, const MomentumSample& sample);

class SpinorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpinorBasis {
  std::vector<Eigen::VectorXcd> vectors;
  double energy = 0.0;
};

/// Orthonormal basis of the +E_p eigenspace, which must be two-dimensional.
/// The basis is built by projecting e_1, e_2, ... onto the eigenspace and
/// orthonormalizing; each vector's first nonzero component is real positive.
SpinorBasis positive_energy_spinors(const MatrixSet& set, const MomentumSample& sample);

struct SweepResult {
  std::vector<SpectrumRow> rows;      // input order
  std::vector<std::size_t> flagged;   // rows breaking +- symmetry or pairing beyond the threshold
  double max_energy_error = 0.0;      // against {-E_p, ..., +E_p} with n/2 copies each
  double max_symmetry_defect = 0.0;
  double max_degeneracy_split = 0.0;
};

SweepResult sweep(const MatrixSet& set, const std::vector<MomentumSample>& grid,
                  double flag_threshold = kDegeneracyBreakThreshold);

/// Cartesian product of three axes at fixed mass, x slowest.
std::vector<MomentumSample> momentum_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                                          const std::vector<double>& zs, double mass);

/// count evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace dirac
