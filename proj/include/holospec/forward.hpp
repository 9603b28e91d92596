#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "holospec/grid.hpp"
#include "holospec/transform.hpp"

namespace holospec {

/// Real spectrum X(u) on the low band u = 0 .. N/2-1. Values may be negative.
struct RealSpectrum {
  int n = 0;
  std::vector<double> values;
};

/// Complex object spectrum A(u) on the low band u = 0 .. N/2-1.
struct ComplexSpectrum {
  int n = 0;
  std::vector<Complex> values;

  std::vector<double> amplitudes() const;
  std::vector<double> phases() const;
};

/// Spectrum that extends `extra()` bins past the low band. Used to violate the
/// band limit on purpose; inverse estimators still assume the low band.
template <class T>
struct WideSpectrum {
  int n = 0;
  std::vector<T> values;

  std::size_t extra() const noexcept {
    const auto low = static_cast<std::size_t>(n / 2);
    return values.size() > low ? values.size() - low : 0;
  }
};

using WideRealSpectrum = WideSpectrum<double>;
using WideComplexSpectrum = WideSpectrum<Complex>;

enum class Setup { Spectroscopy, Holography };

/// Observation sequence J, stored in ascending tau order of its scheme.
struct Interferogram {
  Scheme scheme = Scheme::NonSymOne;
  int n = 0;
  Setup setup = Setup::Spectroscopy;
  double reference = 0.0;  ///< R; meaningful for holography only
  std::vector<double> values;

  long tau_at(std::size_t index) const noexcept {
    return first_tau(n, scheme) + static_cast<long>(index);
  }
};

/// Throws Errc::shape when values.size() != n or n is not a valid grid size.
void validate(const Interferogram& j);

/// J(tau) = 2 sum_u X(u) (1 + cos(2 pi tau u / N)) over the scheme's tau set.
Interferogram synth_spectroscopy(const RealSpectrum& x, const SamplingGrid& grid,
                                 Scheme scheme);
Interferogram synth_spectroscopy(const WideRealSpectrum& x, const SamplingGrid& grid,
                                 Scheme scheme);

/// J(tau) = sum_u |A(u) + R exp(j 2 pi tau u / N)|^2 over the scheme's tau set.
Interferogram synth_holography(const ComplexSpectrum& a, double r,
                               const SamplingGrid& grid, Scheme scheme);
Interferogram synth_holography(const WideComplexSpectrum& a, double r,
                               const SamplingGrid& grid, Scheme scheme);

ComplexSpectrum from_polar(int n, std::span<const double> amplitude,
                           std::span<const double> phase);

}  // namespace holospec
