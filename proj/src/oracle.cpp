#include "holospec/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "holospec/errors.hpp"

namespace holospec {

namespace {

double angle(long tau, long u, int n) {
  return 2.0 * std::numbers::pi * static_cast<double>(tau) * static_cast<double>(u) /
         static_cast<double>(n);
}

Eigen::VectorXd rhs_of(const Interferogram& j) {
  Eigen::VectorXd rhs(j.n);
  for (int i = 0; i < j.n; ++i) rhs(i) = j.values[static_cast<std::size_t>(i)];
  return rhs;
}

}  // namespace

LeastSquaresFit solve_least_squares(const LinearSystem& system) {
  const auto& m = system.matrix;
  if (m.rows() < m.cols()) {
    throw Error(Errc::ill_posed, "fewer equations than unknowns");
  }
  if (system.rhs.size() != m.rows()) {
    throw Error(Errc::shape, "right-hand side length does not match the design");
  }

  const Eigen::MatrixXd normal = m.transpose() * m;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();

  LeastSquaresFit fit;
  fit.condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(fit.condition < 1e12)) {
    throw Error(Errc::ill_posed, "normal matrix condition " + std::to_string(fit.condition));
  }

  const Eigen::LLT<Eigen::MatrixXd> llt(normal);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::ill_posed, "normal matrix is not positive definite");
  }
  fit.solution = llt.solve(m.transpose() * system.rhs);

  fit.residual_norm = (m * fit.solution - system.rhs).norm();
  const double scale = system.rhs.norm();
  fit.relative_residual = scale > 0.0 ? fit.residual_norm / scale : 0.0;
  return fit;
}

LinearSystem spectroscopy_system(const Interferogram& j) {
  validate(j);
  if (j.setup != Setup::Spectroscopy) {
    throw Error(Errc::wrong_setup, "spectroscopy oracle applied to a holography interferogram");
  }
  const int p = j.n / 2;
  LinearSystem sys;
  sys.matrix.resize(j.n, p);
  for (int i = 0; i < j.n; ++i) {
    const long tau = j.tau_at(static_cast<std::size_t>(i));
    for (int u = 0; u < p; ++u) {
      sys.matrix(i, u) = 2.0 * (1.0 + std::cos(angle(tau, u, j.n)));
    }
  }
  sys.rhs = rhs_of(j);
  for (int u = 0; u < p; ++u) sys.unknown_labels.push_back("X(" + std::to_string(u) + ")");
  return sys;
}

LinearSystem holography_system(const Interferogram& j, double r) {
  validate(j);
  if (j.setup != Setup::Holography) {
    throw Error(Errc::wrong_setup, "holography oracle applied to a spectroscopy interferogram");
  }
  if (!(r > 0.0)) throw Error(Errc::invalid_reference, "reference amplitude R must be positive");

  const int bins = j.n / 2 - 1;
  LinearSystem sys;
  sys.matrix.resize(j.n, 1 + 2 * bins);
  for (int i = 0; i < j.n; ++i) {
    const long tau = j.tau_at(static_cast<std::size_t>(i));
    sys.matrix(i, 0) = 1.0;
    for (int u = 1; u <= bins; ++u) {
      const double a = angle(tau, u, j.n);
      sys.matrix(i, 2 * u - 1) = 2.0 * r * std::cos(a);
      sys.matrix(i, 2 * u) = 2.0 * r * std::sin(a);
    }
  }
  sys.rhs = rhs_of(j);
  sys.unknown_labels.push_back("c0");
  for (int u = 1; u <= bins; ++u) {
    sys.unknown_labels.push_back("ReA(" + std::to_string(u) + ")");
    sys.unknown_labels.push_back("ImA(" + std::to_string(u) + ")");
  }
  return sys;
}

SpectroOracleResult solve_spectro(const Interferogram& j) {
  SpectroOracleResult out;
  out.fit = solve_least_squares(spectroscopy_system(j));
  out.spectrum.n = j.n;
  out.spectrum.values.assign(out.fit.solution.data(),
                             out.fit.solution.data() + out.fit.solution.size());
  return out;
}

HoloOracleResult solve_holo(const Interferogram& j, double r) {
  HoloOracleResult out;
  out.fit = solve_least_squares(holography_system(j, r));
  const int half = j.n / 2;
  out.band.n = j.n;
  out.band.values.assign(static_cast<std::size_t>(half), Complex{0.0, 0.0});
  double band_power = 0.0;
  for (int u = 1; u < half; ++u) {
    const Complex a{out.fit.solution(2 * u - 1), out.fit.solution(2 * u)};
    out.band.values[static_cast<std::size_t>(u)] = a;
    band_power += std::norm(a);
  }

  const double c0 = out.fit.solution(0);
  double m = c0 - band_power - static_cast<double>(half - 1) * r * r;
  if (m < 0.0) {
    if (m < -1e-9 * std::max(1.0, std::abs(c0))) {
      throw Error(Errc::inconsistent_data, "oracle DC radicand is negative");
    }
    m = 0.0;
    out.dc.clamped = true;
  }
  out.dc.modulus_sq = m;
  out.dc.a0 = std::sqrt(m) - r;
  return out;
}

ComplexSequence naive_dft(std::span<const Complex> y) {
  const std::size_t n = y.size();
  ComplexSequence out(n);
  for (std::size_t u = 1; u <= n; ++u) {
    Complex acc{0.0, 0.0};
    for (std::size_t tau = 1; tau <= n; ++tau) {
      const double a = -2.0 * std::numbers::pi * static_cast<double>((tau - 1) * (u - 1)) /
                       static_cast<double>(n);
      acc += y[tau - 1] * Complex{std::cos(a), std::sin(a)};
    }
    out[u - 1] = acc;
  }
  return out;
}

}  // namespace holospec
