#include "holospec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holospec/errors.hpp"

namespace holospec {

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::NonSymOne: return "nonsym1";
    case Scheme::NonSymZero: return "nonsym0";
    case Scheme::Symmetric: return "sym";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view tag) noexcept {
  if (tag == "nonsym1") return Scheme::NonSymOne;
  if (tag == "nonsym0") return Scheme::NonSymZero;
  if (tag == "sym") return Scheme::Symmetric;
  return std::nullopt;
}

void require_valid_n(int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(Errc::invalid_grid,
                "sample count must be even and >= 4, got " + std::to_string(n));
  }
}

SamplingGrid::SamplingGrid(int n, double delta_t, double delta_omega)
    : n_(n), delta_t_(delta_t), delta_omega_(delta_omega) {
  require_valid_n(n);
  if (!(delta_t > 0.0) || !(delta_omega > 0.0) || !std::isfinite(delta_t) ||
      !std::isfinite(delta_omega)) {
    throw Error(Errc::invalid_grid, "sampling steps must be positive and finite");
  }
  const double product = static_cast<double>(n) * delta_t * delta_omega;
  if (std::abs(product - 1.0) > 1e-12) {
    throw Error(Errc::invalid_grid,
                "sampling steps violate N * dt * domega = 1");
  }
}

SamplingGrid make_grid(int n, double delta_t) {
  require_valid_n(n);
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
    throw Error(Errc::invalid_grid, "delta_t must be positive");
  }
  return SamplingGrid(n, delta_t, 1.0 / (static_cast<double>(n) * delta_t));
}

long first_tau(int n, Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::NonSymOne: return 1;
    case Scheme::NonSymZero: return 0;
    case Scheme::Symmetric: return -static_cast<long>(n / 2);
  }
  return 0;
}

std::vector<long> tau_values(const SamplingGrid& grid, Scheme scheme) {
  std::vector<long> taus(static_cast<std::size_t>(grid.n()));
  long tau = first_tau(grid.n(), scheme);
  for (auto& t : taus) t = tau++;
  return taus;
}

BandRange::BandRange(std::size_t lo, std::size_t hi) : lo_(lo), hi_(hi) {
  if (lo >= hi) {
    throw Error(Errc::bounds, "band range requires lo < hi");
  }
}

BandRange BandRange::low_band(int n) {
  return BandRange(0, static_cast<std::size_t>(n / 2));
}

BandRange BandRange::upper_band(int n) {
  return BandRange(static_cast<std::size_t>(n / 2), static_cast<std::size_t>(n));
}

namespace {

void check_cover(std::size_t est, std::size_t truth, BandRange range) {
  if (range.hi() > est || range.hi() > truth) {
    throw Error(Errc::bounds, "band [" + std::to_string(range.lo()) + ", " +
                                  std::to_string(range.hi()) +
                                  ") exceeds sequence length");
  }
}

}  // namespace

double rmse(std::span<const double> estimate, std::span<const double> truth,
            BandRange range) {
  check_cover(estimate.size(), truth.size(), range);
  double acc = 0.0;
  for (std::size_t i = range.lo(); i < range.hi(); ++i) {
    const double d = estimate[i] - truth[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(range.size()));
}

double wrapped_phase_distance(double a, double b) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

double wrapped_phase_rmse(std::span<const double> estimate,
                          std::span<const double> truth, BandRange range) {
  check_cover(estimate.size(), truth.size(), range);
  double acc = 0.0;
  for (std::size_t i = range.lo(); i < range.hi(); ++i) {
    const double d = wrapped_phase_distance(estimate[i], truth[i]);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(range.size()));
}

}  // namespace holospec
