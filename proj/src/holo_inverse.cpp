#include "holospec/holo_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "holospec/errors.hpp"

namespace holospec {

std::string label(const HoloEstimatorVariant& variant) {
  switch (variant.method) {
    case HoloMethod::DirectDft: return "direct";
    case HoloMethod::FftCorrected: return "fft";
    case HoloMethod::FftUncorrected: return "fft-uncorrected";
    case HoloMethod::FftShifted: return "fft-shift";
  }
  return "?";
}

namespace {

double require_holography(const Interferogram& j) {
  validate(j);
  if (j.setup != Setup::Holography) {
    throw Error(Errc::wrong_setup, "holography estimator applied to a spectroscopy interferogram");
  }
  if (!(j.reference > 0.0) || !std::isfinite(j.reference)) {
    throw Error(Errc::invalid_reference, "holography interferogram lacks a positive R");
  }
  return j.reference;
}

// (1/(N R)) * transform, all N bins.
ComplexSequence all_bins(const Interferogram& j, const HoloEstimatorVariant& v) {
  const double r = require_holography(j);
  const auto n = static_cast<std::size_t>(j.n);
  ComplexSequence y;

  switch (v.method) {
    case HoloMethod::DirectDft: {
      y.assign(n, Complex{0.0, 0.0});
      for (std::size_t u = 0; u < n; ++u) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
          acc += j.values[i] * unit_root(j.tau_at(i) * static_cast<long>(u), j.n);
        }
        y[u] = acc / static_cast<double>(j.n);
      }
      break;
    }
    case HoloMethod::FftCorrected:
    case HoloMethod::FftUncorrected: {
      y = idft(std::span<const double>(j.values));
      if (v.method == HoloMethod::FftCorrected) {
        const auto ramp = phase_ramp(j.n, j.scheme);
        for (std::size_t k = 0; k < n; ++k) y[k] *= ramp[k];
      }
      break;
    }
    case HoloMethod::FftShifted: {
      if (j.scheme != Scheme::Symmetric) {
        throw Error(Errc::variant, "fft-shift form applies to symmetric sampling only");
      }
      const auto shifted = fft_shift(std::span<const double>(j.values));
      y = idft(std::span<const double>(shifted));
      break;
    }
  }
  for (auto& c : y) c /= r;
  return y;
}

double radicand(const Interferogram& j, double r, std::span<const Complex> band_tail) {
  const double mean_j =
      std::accumulate(j.values.begin(), j.values.end(), 0.0) / static_cast<double>(j.n);
  double band_power = 0.0;
  for (const auto& a : band_tail) band_power += std::norm(a);
  return mean_j - (band_power + static_cast<double>(j.n / 2 - 1) * r * r);
}

}  // namespace

ComplexSpectrum estimate_complex(const Interferogram& j, const HoloEstimatorVariant& variant) {
  const auto y = all_bins(j, variant);
  ComplexSpectrum a;
  a.n = j.n;
  a.values.assign(y.begin(), y.begin() + j.n / 2);
  a.values[0] = Complex{0.0, 0.0};
  return a;
}

DcRecovery estimate_dc(const Interferogram& j, double r, const ComplexSpectrum& band) {
  validate(j);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(Errc::invalid_reference, "reference amplitude R must be positive");
  }
  if (band.values.size() != static_cast<std::size_t>(j.n / 2)) {
    throw Error(Errc::shape, "band estimate must hold N/2 bins");
  }
  DcRecovery dc;
  dc.modulus_sq = radicand(j, r, std::span<const Complex>(band.values).subspan(1));
  if (dc.modulus_sq < 0.0) {
    const double mean_j =
        std::accumulate(j.values.begin(), j.values.end(), 0.0) / static_cast<double>(j.n);
    const double tolerance = 1e-9 * std::max(1.0, std::abs(mean_j));
    if (dc.modulus_sq < -tolerance) {
      throw Error(Errc::inconsistent_data,
                  "negative |A(0)+R|^2 = " + std::to_string(dc.modulus_sq) +
                      "; data is not a low-band hologram with this R");
    }
    dc.modulus_sq = 0.0;
    dc.clamped = true;
  }
  dc.a0 = std::sqrt(dc.modulus_sq) - r;
  return dc;
}

HoloReconstruction reconstruct_holography(const Interferogram& j,
                                          const HoloEstimatorVariant& variant) {
  HoloReconstruction out;
  out.spectrum = estimate_complex(j, variant);
  out.dc = estimate_dc(j, j.reference, out.spectrum);
  out.spectrum.values[0] = Complex{out.dc.a0, 0.0};
  return out;
}

ComplexSequence full_range_complex(const Interferogram& j, const HoloEstimatorVariant& variant) {
  auto y = all_bins(j, variant);
  const double r = j.reference;
  const double m = radicand(j, r, std::span<const Complex>(y).subspan(1, static_cast<std::size_t>(j.n / 2 - 1)));
  y[0] = Complex{std::sqrt(std::max(m, 0.0)) - r, 0.0};
  return y;
}

}  // namespace holospec
