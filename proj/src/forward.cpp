#include "holospec/forward.hpp"

#include <cmath>
#include <string>

#include "holospec/errors.hpp"

namespace holospec {

std::vector<double> ComplexSpectrum::amplitudes() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::abs(values[i]);
  return out;
}

std::vector<double> ComplexSpectrum::phases() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::arg(values[i]);
  return out;
}

void validate(const Interferogram& j) {
  if (j.n < 4 || j.n % 2 != 0) {
    throw Error(Errc::shape, "interferogram size must be even and >= 4");
  }
  if (j.values.size() != static_cast<std::size_t>(j.n)) {
    throw Error(Errc::shape, "interferogram holds " + std::to_string(j.values.size()) +
                                 " samples, expected " + std::to_string(j.n));
  }
}

namespace {

void check_spectrum(int spectrum_n, std::size_t bins, const SamplingGrid& grid,
                    bool low_band_only) {
  if (spectrum_n != grid.n()) {
    throw Error(Errc::shape, "spectrum N=" + std::to_string(spectrum_n) +
                                 " does not match grid N=" + std::to_string(grid.n()));
  }
  if (bins == 0) throw Error(Errc::shape, "spectrum is empty");
  if (low_band_only && bins != static_cast<std::size_t>(grid.half())) {
    throw Error(Errc::shape, "low-band spectrum must hold N/2 bins");
  }
  if (bins < static_cast<std::size_t>(grid.half())) {
    throw Error(Errc::shape, "spectrum shorter than the low band");
  }
}

Interferogram spectroscopy_from_bins(std::span<const double> x, int n, Scheme scheme) {
  Interferogram j;
  j.scheme = scheme;
  j.n = n;
  j.setup = Setup::Spectroscopy;
  j.values.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < j.values.size(); ++i) {
    const long tau = j.tau_at(i);
    double acc = 0.0;
    for (std::size_t u = 0; u < x.size(); ++u) {
      acc += x[u] * (1.0 + unit_root(tau * static_cast<long>(u), n).real());
    }
    j.values[i] = 2.0 * acc;
  }
  return j;
}

Interferogram holography_from_bins(std::span<const Complex> a, double r, int n,
                                   Scheme scheme) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(Errc::invalid_reference, "reference amplitude R must be positive");
  }
  Interferogram j;
  j.scheme = scheme;
  j.n = n;
  j.setup = Setup::Holography;
  j.reference = r;
  j.values.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < j.values.size(); ++i) {
    const long tau = j.tau_at(i);
    double acc = 0.0;
    for (std::size_t u = 0; u < a.size(); ++u) {
      acc += std::norm(a[u] + r * unit_root(tau * static_cast<long>(u), n));
    }
    j.values[i] = acc;
  }
  return j;
}

}  // namespace

Interferogram synth_spectroscopy(const RealSpectrum& x, const SamplingGrid& grid,
                                 Scheme scheme) {
  check_spectrum(x.n, x.values.size(), grid, true);
  return spectroscopy_from_bins(x.values, grid.n(), scheme);
}

Interferogram synth_spectroscopy(const WideRealSpectrum& x, const SamplingGrid& grid,
                                 Scheme scheme) {
  check_spectrum(x.n, x.values.size(), grid, false);
  return spectroscopy_from_bins(x.values, grid.n(), scheme);
}

Interferogram synth_holography(const ComplexSpectrum& a, double r,
                               const SamplingGrid& grid, Scheme scheme) {
  check_spectrum(a.n, a.values.size(), grid, true);
  return holography_from_bins(a.values, r, grid.n(), scheme);
}

Interferogram synth_holography(const WideComplexSpectrum& a, double r,
                               const SamplingGrid& grid, Scheme scheme) {
  check_spectrum(a.n, a.values.size(), grid, false);
  return holography_from_bins(a.values, r, grid.n(), scheme);
}

ComplexSpectrum from_polar(int n, std::span<const double> amplitude,
                           std::span<const double> phase) {
  if (amplitude.size() != phase.size()) {
    throw Error(Errc::shape, "amplitude and phase lengths differ");
  }
  ComplexSpectrum a;
  a.n = n;
  a.values.resize(amplitude.size());
  for (std::size_t i = 0; i < amplitude.size(); ++i) {
    a.values[i] = amplitude[i] * Complex{std::cos(phase[i]), std::sin(phase[i])};
  }
  return a;
}

}  // namespace holospec
