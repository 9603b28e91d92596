#pragma once

#include <span>
#include <string>
#include <vector>

#include "holospec/forward.hpp"

namespace holospec {

// Reference-less estimators. Every estimator reads the scheme from the
// interferogram itself; there is no caller-side convention flag.

enum class SpectroMethod {
  DirectCosine,    ///< literal (1/N) sum_tau J(tau) cos(2 pi tau u / N)
  FftCorrected,    ///< real(idft(J) * ramp)
  FftUncorrected,  ///< real(idft(J)), ramp omitted (ablation)
  Magnitude,       ///< |idft(J)|, valid only for non-negative truth
};

/// Two equivalent transform forms exist for symmetric sampling.
enum class SymmetricForm { PhaseRamp, FftShift };

/// Whether the caller vouches that X(u) >= 0 (X = |A|^2).
enum class TruthSign { SignIndefinite, NonNegative };

struct SpectroEstimatorVariant {
  SpectroMethod method = SpectroMethod::FftCorrected;
  /// Use dft(J)/N with a conjugated ramp instead of idft(J).
  bool forward_fft = false;
  SymmetricForm symmetric_form = SymmetricForm::PhaseRamp;
  TruthSign truth = TruthSign::SignIndefinite;
};

std::string label(const SpectroEstimatorVariant& variant);

RealSpectrum estimate_direct(const Interferogram& j);

/// FftCorrected or FftUncorrected; other methods raise Errc::variant.
RealSpectrum estimate_fft(const Interferogram& j, const SpectroEstimatorVariant& variant);

/// a[u] = |idft(J)[u]| (or |dft(J)[u] / N|). Raises Errc::sign_indefinite when
/// the caller marks the truth as sign-indefinite.
RealSpectrum estimate_magnitude(const Interferogram& j, bool forward_fft,
                                TruthSign truth = TruthSign::NonNegative);

/// X(0) = (1/(4N)) sum J - (1/2) sum_{u=1}^{N/2-1} X(u). `tail` holds X(1..N/2-1).
double estimate_zero_bin(const Interferogram& j, std::span<const double> tail);

/// Any variant, dispatched on its method.
RealSpectrum estimate_spectrum(const Interferogram& j,
                               const SpectroEstimatorVariant& variant);

/// Estimator evaluated on all u = 0 .. N-1 without the low-band cut.
std::vector<double> full_range_estimate(const Interferogram& j,
                                        const SpectroEstimatorVariant& variant);

}  // namespace holospec
