#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace holospec {

/// The set of integer shifts at which the interferogram is sampled.
///   NonSymOne  : tau = 1 .. N
///   NonSymZero : tau = 0 .. N-1
///   Symmetric  : tau = -N/2 .. N/2-1
enum class Scheme { NonSymOne, NonSymZero, Symmetric };

inline constexpr std::array<Scheme, 3> kAllSchemes{
    Scheme::NonSymOne, Scheme::NonSymZero, Scheme::Symmetric};

/// File tag: "nonsym1", "nonsym0" or "sym".
std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view tag) noexcept;

/// Uniform reciprocal sampling: N samples with N * delta_t * delta_omega = 1.
class SamplingGrid {
 public:
  SamplingGrid(int n, double delta_t, double delta_omega);

  int n() const noexcept { return n_; }
  int half() const noexcept { return n_ / 2; }
  double delta_t() const noexcept { return delta_t_; }
  double delta_omega() const noexcept { return delta_omega_; }

 private:
  int n_;
  double delta_t_;
  double delta_omega_;
};

/// Throws Errc::invalid_grid for odd n, n < 4 or delta_t <= 0.
SamplingGrid make_grid(int n, double delta_t = 1.0);

/// Validates a bare sample count against the grid rules.
void require_valid_n(int n);

/// First shift of the scheme's tau set; the set is first, first+1, ..., first+N-1.
long first_tau(int n, Scheme scheme) noexcept;

std::vector<long> tau_values(const SamplingGrid& grid, Scheme scheme);

/// Half-open index interval [lo, hi).
class BandRange {
 public:
  BandRange(std::size_t lo, std::size_t hi);

  /// u = 0 .. N/2-1
  static BandRange low_band(int n);
  /// u = N/2 .. N-1
  static BandRange upper_band(int n);

  std::size_t lo() const noexcept { return lo_; }
  std::size_t hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return hi_ - lo_; }

 private:
  std::size_t lo_;
  std::size_t hi_;
};

double rmse(std::span<const double> estimate, std::span<const double> truth,
            BandRange range);

/// Angular distance in [0, pi].
double wrapped_phase_distance(double a, double b) noexcept;

/// RMSE of wrapped phase differences over the range.
double wrapped_phase_rmse(std::span<const double> estimate,
                          std::span<const double> truth, BandRange range);

}  // namespace holospec
