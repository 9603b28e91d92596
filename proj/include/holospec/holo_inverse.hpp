#pragma once

#include <string>

#include "holospec/forward.hpp"

namespace holospec {

// Reference-beam estimators. The reference amplitude R is carried by the
// interferogram; band bins are A(u) = (1/(N R)) sum_tau J(tau) exp(j 2 pi tau u / N).

enum class HoloMethod {
  DirectDft,       ///< literal complex sum over the tau set
  FftCorrected,    ///< (1/R) idft(J) * ramp
  FftUncorrected,  ///< (1/R) idft(J), ramp omitted (ablation)
  FftShifted,      ///< (1/R) idft(fft_shift(J)); symmetric scheme only
};

struct HoloEstimatorVariant {
  HoloMethod method = HoloMethod::FftCorrected;
};

std::string label(const HoloEstimatorVariant& variant);

/// Recovered DC term. modulus_sq = |A(0) + R|^2, a0 = sqrt(modulus_sq) - R
/// under the assumption that A(0) is real and non-negative.
struct DcRecovery {
  double modulus_sq = 0.0;
  double a0 = 0.0;
  bool clamped = false;  ///< a slightly negative radicand was rounded to 0
};

/// Band bins u = 1 .. N/2-1. Bin 0 is left at zero; see estimate_dc.
ComplexSpectrum estimate_complex(const Interferogram& j, const HoloEstimatorVariant& variant);

/// Negative radicands below -1e-9 * max(1, mean J) raise Errc::inconsistent_data;
/// smaller ones are clamped to 0 and flagged.
DcRecovery estimate_dc(const Interferogram& j, double r, const ComplexSpectrum& band);

struct HoloReconstruction {
  ComplexSpectrum spectrum;  ///< bin 0 holds a0 (real)
  DcRecovery dc;
};

HoloReconstruction reconstruct_holography(const Interferogram& j,
                                          const HoloEstimatorVariant& variant);

/// Estimator on all u = 0 .. N-1. Bin 0 holds sqrt(max(modulus_sq, 0)) - R and
/// never throws, so leakage demos still plot.
ComplexSequence full_range_complex(const Interferogram& j, const HoloEstimatorVariant& variant);

}  // namespace holospec
