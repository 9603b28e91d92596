#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holospec/forward.hpp"
#include "holospec/holo_inverse.hpp"

namespace holospec {

// Independent verification path: the observation models are linear in the
// unknowns, so they are solved here as explicit least-squares systems built
// straight from the tau set. Nothing below touches the transform module.

struct LinearSystem {
  Eigen::MatrixXd matrix;  ///< N x P design
  Eigen::VectorXd rhs;     ///< length N
  std::vector<std::string> unknown_labels;
};

struct LeastSquaresFit {
  Eigen::VectorXd solution;
  double residual_norm = 0.0;
  double relative_residual = 0.0;  ///< residual_norm / |rhs|, 0 when rhs = 0
  double condition = 0.0;          ///< of the normal matrix
};

/// Normal equations with a Cholesky factorization. Raises Errc::ill_posed when
/// the normal matrix condition exceeds 1e12 or the factorization fails.
LeastSquaresFit solve_least_squares(const LinearSystem& system);

/// J(tau) = sum_u X(u) * 2 (1 + cos(2 pi tau u / N)), P = N/2 unknowns.
LinearSystem spectroscopy_system(const Interferogram& j);

/// J(tau) = c0 + sum_{u>=1} 2R (Re A(u) cos(2 pi tau u / N) + Im A(u) sin(2 pi tau u / N)),
/// P = N-1 unknowns ordered c0, Re A(1), Im A(1), Re A(2), ...
LinearSystem holography_system(const Interferogram& j, double r);

struct SpectroOracleResult {
  RealSpectrum spectrum;
  LeastSquaresFit fit;
};

struct HoloOracleResult {
  ComplexSpectrum band;  ///< bins 1 .. N/2-1, bin 0 zero
  DcRecovery dc;
  LeastSquaresFit fit;
};

SpectroOracleResult solve_spectro(const Interferogram& j);

/// DC from the lumped constant: (A(0)+R)^2 = c0 - sum_{u>=1}|A(u)|^2 - (N/2-1) R^2.
HoloOracleResult solve_holo(const Interferogram& j, double r);

/// Literal double-loop evaluation of Y_u = sum_tau y_tau exp(-j 2 pi (tau-1)(u-1) / N),
/// tau, u = 1..N.
ComplexSequence naive_dft(std::span<const Complex> y);

}  // namespace holospec
