#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holospec/forward.hpp"
#include "holospec/holo_inverse.hpp"
#include "holospec/spectro_inverse.hpp"

namespace holospec {

// ---------------------------------------------------------------------------
// Seeded truth generation
// ---------------------------------------------------------------------------

struct AmplitudeRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// Uniform draws on [lo, hi]. A negative lo gives the sign-indefinite case.
RealSpectrum random_real_spectrum(int n, std::uint64_t seed, AmplitudeRange range = {});

/// Uniform amplitudes and N(0, phase_sigma) phases. A(0) is forced real and
/// non-negative (phase 0, |amplitude|).
ComplexSpectrum random_complex_spectrum(int n, std::uint64_t seed, AmplitudeRange range = {},
                                        double phase_sigma = 0.5);

/// Same low band as the non-wide generators for equal seeds, followed by
/// `extra` out-of-band bins drawn from the same distributions.
WideRealSpectrum random_wide_real_spectrum(int n, std::uint64_t seed, AmplitudeRange range,
                                           int extra);
WideComplexSpectrum random_wide_complex_spectrum(int n, std::uint64_t seed,
                                                 AmplitudeRange range, double phase_sigma,
                                                 int extra);

// ---------------------------------------------------------------------------
// Scenarios
// ---------------------------------------------------------------------------

using EstimatorVariant = std::variant<SpectroEstimatorVariant, HoloEstimatorVariant>;

struct TruthSource {
  enum class Kind { SeededRandom, Explicit, File };
  Kind kind = Kind::SeededRandom;
  std::uint64_t seed = 1;
  AmplitudeRange range{};
  double phase_sigma = 0.5;
  std::vector<double> real_values;      ///< Explicit spectroscopy truth, >= N/2 bins
  std::vector<Complex> complex_values;  ///< Explicit holography truth, >= N/2 bins
  std::string path;                     ///< File: spectrum CSV
};

struct Scenario {
  std::string name;
  int n = 40;
  Scheme scheme = Scheme::NonSymOne;
  Setup setup = Setup::Spectroscopy;
  double reference = 1.0;
  TruthSource truth{};
  int extra_bins = 0;
  /// Also run the uncorrected form of every phase-corrected FFT variant.
  bool ablation = false;
  bool full_range = true;
  std::vector<EstimatorVariant> variants;
};

std::string label(const EstimatorVariant& variant);

struct VariantOutcome {
  std::string label;
  bool ok = true;
  std::string error;

  // Spectroscopy
  std::vector<double> estimate;    ///< low band
  std::vector<double> full_range;  ///< u = 0 .. N-1 when requested
  // Holography
  std::vector<Complex> complex_estimate;  ///< low band, bin 0 = a0
  ComplexSequence complex_full_range;
  DcRecovery dc{};

  double low_band_rmse = 0.0;          ///< u = 0 .. N/2-1 (complex modulus for holography)
  double low_band_rmse_excl_dc = 0.0;  ///< u = 1 .. N/2-1
  double upper_band_rmse = 0.0;        ///< u = N/2 .. N-1, full-range runs only
  double amplitude_rmse = 0.0;         ///< holography, low band
  double phase_rmse = 0.0;             ///< holography, low band, wrapped
  double upper_amplitude_rmse = 0.0;
  double upper_phase_rmse = 0.0;
  double oracle_max_deviation = 0.0;   ///< max |estimate - oracle| over the low band
  double seconds = 0.0;
};

struct OracleOutcome {
  bool ok = true;
  std::string error;
  std::vector<double> estimate;
  std::vector<Complex> complex_estimate;  ///< bin 0 = a0
  double residual_norm = 0.0;
  double relative_residual = 0.0;
  double condition = 0.0;
  double seconds = 0.0;
};

struct ReconstructionReport {
  Scenario scenario;
  std::vector<double> truth_real;      ///< spectroscopy truth incl. extra bins
  std::vector<Complex> truth_complex;  ///< holography truth incl. extra bins
  Interferogram observations;
  std::vector<VariantOutcome> variants;
  OracleOutcome oracle;
  double synth_seconds = 0.0;
};

/// Synthesizes the truth, runs the forward model, every variant and the
/// oracle. Estimator failures are recorded per variant and do not abort.
ReconstructionReport run_scenario(const Scenario& scenario);

/// Built-in figure studies ("fig2-perfect", "fig9-fftshift-identity", ...).
std::vector<std::string> scenario_names();
std::optional<Scenario> named_scenario(std::string_view name);

/// Truth padded or cut to N bins (zeros past the provided bins).
std::vector<double> truth_full_range(const ReconstructionReport& report);
std::vector<Complex> complex_truth_full_range(const ReconstructionReport& report);

// ---------------------------------------------------------------------------
// Hyperspectral cubes
// ---------------------------------------------------------------------------

/// One interferogram per pixel, pixel-major: frames[(y * width + x) * n + k].
struct HyperCube {
  int height = 0;
  int width = 0;
  int n = 0;
  Scheme scheme = Scheme::NonSymOne;
  Setup setup = Setup::Spectroscopy;
  double reference = 0.0;
  std::vector<double> frames;
};

template <class T>
struct SpectrumVolume {
  int height = 0;
  int width = 0;
  int bins = 0;
  std::vector<T> values;  ///< [(y * width + x) * bins + u]
};

void validate(const HyperCube& cube);

/// threads == 0 uses the hardware concurrency; 1 runs serially. Output does
/// not depend on the thread count.
SpectrumVolume<double> reconstruct_cube(const HyperCube& cube,
                                        const SpectroEstimatorVariant& variant,
                                        unsigned threads = 0);
SpectrumVolume<Complex> reconstruct_cube(const HyperCube& cube, double r,
                                         const HoloEstimatorVariant& variant,
                                         unsigned threads = 0);

/// Random low-band truth per pixel, seeded from (seed, pixel index).
HyperCube random_cube(int height, int width, int n, Scheme scheme, Setup setup,
                      double reference, std::uint64_t seed);

}  // namespace holospec
