#include "holospec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "holospec/errors.hpp"
#include "holospec/io.hpp"
#include "holospec/oracle.hpp"

namespace holospec {

// ---------------------------------------------------------------------------
// Truth generation

namespace {

std::vector<double> draw_real(int count, std::uint64_t seed, AmplitudeRange range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(range.lo, range.hi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (auto& v : out) v = uniform(rng);
  return out;
}

std::vector<Complex> draw_complex(int count, std::uint64_t seed, AmplitudeRange range,
                                  double phase_sigma) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(range.lo, range.hi);
  std::normal_distribution<double> gauss(0.0, phase_sigma > 0.0 ? phase_sigma : 1.0);
  std::vector<Complex> out(static_cast<std::size_t>(count));
  for (std::size_t u = 0; u < out.size(); ++u) {
    const double amplitude = uniform(rng);
    if (u == 0) {
      out[u] = Complex{std::abs(amplitude), 0.0};
      continue;
    }
    const double phase = phase_sigma > 0.0 ? gauss(rng) : 0.0;
    out[u] = amplitude * Complex{std::cos(phase), std::sin(phase)};
  }
  return out;
}

void check_range(AmplitudeRange range) {
  if (!(range.lo <= range.hi)) throw Error(Errc::usage, "amplitude range needs lo <= hi");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RealSpectrum random_real_spectrum(int n, std::uint64_t seed, AmplitudeRange range) {
  require_valid_n(n);
  check_range(range);
  return RealSpectrum{n, draw_real(n / 2, seed, range)};
}

ComplexSpectrum random_complex_spectrum(int n, std::uint64_t seed, AmplitudeRange range,
                                        double phase_sigma) {
  require_valid_n(n);
  check_range(range);
  return ComplexSpectrum{n, draw_complex(n / 2, seed, range, phase_sigma)};
}

WideRealSpectrum random_wide_real_spectrum(int n, std::uint64_t seed, AmplitudeRange range,
                                           int extra) {
  require_valid_n(n);
  check_range(range);
  if (extra < 0) throw Error(Errc::usage, "extra bins must be >= 0");
  return WideRealSpectrum{n, draw_real(n / 2 + extra, seed, range)};
}

WideComplexSpectrum random_wide_complex_spectrum(int n, std::uint64_t seed,
                                                 AmplitudeRange range, double phase_sigma,
                                                 int extra) {
  require_valid_n(n);
  check_range(range);
  if (extra < 0) throw Error(Errc::usage, "extra bins must be >= 0");
  return WideComplexSpectrum{n, draw_complex(n / 2 + extra, seed, range, phase_sigma)};
}

// ---------------------------------------------------------------------------
// Scenarios

std::string label(const EstimatorVariant& variant) {
  return std::visit([](const auto& v) { return label(v); }, variant);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<EstimatorVariant> expand_ablation(const Scenario& s) {
  std::vector<EstimatorVariant> out = s.variants;
  if (!s.ablation) return out;
  auto has = [&](auto probe) {
    return std::any_of(out.begin(), out.end(),
                       [&](const EstimatorVariant& v) { return label(v) == label(probe); });
  };
  for (const auto& v : s.variants) {
    if (const auto* sv = std::get_if<SpectroEstimatorVariant>(&v);
        sv && sv->method == SpectroMethod::FftCorrected) {
      SpectroEstimatorVariant off = *sv;
      off.method = SpectroMethod::FftUncorrected;
      off.symmetric_form = SymmetricForm::PhaseRamp;
      if (!has(EstimatorVariant{off})) out.emplace_back(off);
    } else if (const auto* hv = std::get_if<HoloEstimatorVariant>(&v);
               hv && hv->method == HoloMethod::FftCorrected) {
      const HoloEstimatorVariant off{HoloMethod::FftUncorrected};
      if (!has(EstimatorVariant{off})) out.emplace_back(off);
    }
  }
  return out;
}

void load_truth(const Scenario& s, ReconstructionReport& report) {
  const auto& t = s.truth;
  const bool holo = s.setup == Setup::Holography;
  switch (t.kind) {
    case TruthSource::Kind::SeededRandom:
      if (holo) {
        report.truth_complex =
            random_wide_complex_spectrum(s.n, t.seed, t.range, t.phase_sigma, s.extra_bins).values;
      } else {
        report.truth_real = random_wide_real_spectrum(s.n, t.seed, t.range, s.extra_bins).values;
      }
      break;
    case TruthSource::Kind::Explicit:
      report.truth_real = t.real_values;
      report.truth_complex = t.complex_values;
      break;
    case TruthSource::Kind::File: {
      const auto table = load_spectrum_csv(t.path);
      if (holo) {
        if (!table.complex) throw Error(Errc::parse, t.path + ": holography truth needs amplitude,phase columns");
        report.truth_complex = from_polar(s.n, table.amplitude, table.phase).values;
      } else {
        if (table.complex) throw Error(Errc::parse, t.path + ": spectroscopy truth needs a value column");
        report.truth_real = table.values;
      }
      break;
    }
  }
}

std::vector<double> padded(const std::vector<double>& v, std::size_t n) {
  std::vector<double> out(n, 0.0);
  std::copy_n(v.begin(), std::min(n, v.size()), out.begin());
  return out;
}

std::vector<Complex> padded(const std::vector<Complex>& v, std::size_t n) {
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  std::copy_n(v.begin(), std::min(n, v.size()), out.begin());
  return out;
}

std::vector<double> abs_of(std::span<const Complex> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
  return out;
}

std::vector<double> arg_of(std::span<const Complex> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::arg(v[i]);
  return out;
}

double complex_rmse(std::span<const Complex> est, std::span<const Complex> truth,
                    BandRange range) {
  double acc = 0.0;
  for (std::size_t i = range.lo(); i < range.hi(); ++i) acc += std::norm(est[i] - truth[i]);
  return std::sqrt(acc / static_cast<double>(range.size()));
}

void run_spectro_variant(const Scenario& s, const ReconstructionReport& report,
                         const SpectroEstimatorVariant& v, VariantOutcome& out) {
  const auto& j = report.observations;
  const auto n = static_cast<std::size_t>(s.n);
  out.estimate = estimate_spectrum(j, v).values;
  const auto truth = padded(report.truth_real, n);
  out.low_band_rmse = rmse(out.estimate, truth, BandRange::low_band(s.n));
  out.low_band_rmse_excl_dc = rmse(out.estimate, truth, BandRange(1, n / 2));
  if (s.full_range) {
    out.full_range = full_range_estimate(j, v);
    out.upper_band_rmse = rmse(out.full_range, truth, BandRange::upper_band(s.n));
  }
}

void run_holo_variant(const Scenario& s, const ReconstructionReport& report,
                      const HoloEstimatorVariant& v, VariantOutcome& out) {
  const auto& j = report.observations;
  const auto n = static_cast<std::size_t>(s.n);
  const auto truth = padded(report.truth_complex, n);
  const auto low = BandRange::low_band(s.n);

  if (s.full_range) {
    out.complex_full_range = full_range_complex(j, v);
    const auto up = BandRange::upper_band(s.n);
    out.upper_band_rmse = complex_rmse(out.complex_full_range, truth, up);
    const auto est_amp = abs_of(out.complex_full_range);
    const auto est_arg = arg_of(out.complex_full_range);
    out.upper_amplitude_rmse = rmse(est_amp, abs_of(truth), up);
    out.upper_phase_rmse = wrapped_phase_rmse(est_arg, arg_of(truth), up);
  }

  const auto rec = reconstruct_holography(j, v);
  out.dc = rec.dc;
  out.complex_estimate = rec.spectrum.values;
  out.low_band_rmse = complex_rmse(out.complex_estimate, truth, low);
  out.low_band_rmse_excl_dc = complex_rmse(out.complex_estimate, truth, BandRange(1, n / 2));
  out.amplitude_rmse = rmse(abs_of(out.complex_estimate), abs_of(truth), low);
  out.phase_rmse = wrapped_phase_rmse(arg_of(out.complex_estimate), arg_of(truth), low);
}

void run_oracle(const Scenario& s, ReconstructionReport& report) {
  auto& o = report.oracle;
  const auto start = Clock::now();
  try {
    if (s.setup == Setup::Spectroscopy) {
      const auto r = solve_spectro(report.observations);
      o.estimate = r.spectrum.values;
      o.residual_norm = r.fit.residual_norm;
      o.relative_residual = r.fit.relative_residual;
      o.condition = r.fit.condition;
    } else {
      const auto r = solve_holo(report.observations, s.reference);
      o.complex_estimate = r.band.values;
      o.complex_estimate[0] = Complex{r.dc.a0, 0.0};
      o.residual_norm = r.fit.residual_norm;
      o.relative_residual = r.fit.relative_residual;
      o.condition = r.fit.condition;
    }
  } catch (const std::exception& e) {
    o.ok = false;
    o.error = e.what();
  }
  o.seconds = seconds_since(start);
}

double oracle_deviation(const ReconstructionReport& report, const VariantOutcome& v) {
  double worst = 0.0;
  if (!report.oracle.ok || !v.ok) return std::numeric_limits<double>::quiet_NaN();
  for (std::size_t u = 0; u < v.estimate.size() && u < report.oracle.estimate.size(); ++u) {
    worst = std::max(worst, std::abs(v.estimate[u] - report.oracle.estimate[u]));
  }
  for (std::size_t u = 0;
       u < v.complex_estimate.size() && u < report.oracle.complex_estimate.size(); ++u) {
    worst = std::max(worst, std::abs(v.complex_estimate[u] - report.oracle.complex_estimate[u]));
  }
  return worst;
}

}  // namespace

ReconstructionReport run_scenario(const Scenario& s) {
  ReconstructionReport report;
  report.scenario = s;
  const auto grid = make_grid(s.n);

  auto start = Clock::now();
  load_truth(s, report);
  if (s.setup == Setup::Spectroscopy) {
    if (report.truth_real.size() < static_cast<std::size_t>(s.n / 2)) {
      throw Error(Errc::shape, "spectroscopy truth shorter than N/2");
    }
    report.observations =
        synth_spectroscopy(WideRealSpectrum{s.n, report.truth_real}, grid, s.scheme);
  } else {
    if (report.truth_complex.size() < static_cast<std::size_t>(s.n / 2)) {
      throw Error(Errc::shape, "holography truth shorter than N/2");
    }
    report.observations = synth_holography(WideComplexSpectrum{s.n, report.truth_complex},
                                           s.reference, grid, s.scheme);
  }
  report.synth_seconds = seconds_since(start);

  run_oracle(s, report);

  for (const auto& variant : expand_ablation(s)) {
    VariantOutcome out;
    out.label = label(variant);
    start = Clock::now();
    try {
      if (const auto* sv = std::get_if<SpectroEstimatorVariant>(&variant)) {
        if (s.setup != Setup::Spectroscopy) {
          throw Error(Errc::variant, "spectroscopy variant in a holography scenario");
        }
        run_spectro_variant(s, report, *sv, out);
      } else {
        if (s.setup != Setup::Holography) {
          throw Error(Errc::variant, "holography variant in a spectroscopy scenario");
        }
        run_holo_variant(s, report, std::get<HoloEstimatorVariant>(variant), out);
      }
    } catch (const std::exception& e) {
      out.ok = false;
      out.error = e.what();
    }
    out.seconds = seconds_since(start);
    out.oracle_max_deviation = oracle_deviation(report, out);
    report.variants.push_back(std::move(out));
  }
  return report;
}

std::vector<double> truth_full_range(const ReconstructionReport& report) {
  return padded(report.truth_real, static_cast<std::size_t>(report.scenario.n));
}

std::vector<Complex> complex_truth_full_range(const ReconstructionReport& report) {
  return padded(report.truth_complex, static_cast<std::size_t>(report.scenario.n));
}

namespace {

Scenario spectro(std::string name, Scheme scheme, std::vector<EstimatorVariant> variants) {
  Scenario s;
  s.name = std::move(name);
  s.scheme = scheme;
  s.setup = Setup::Spectroscopy;
  s.variants = std::move(variants);
  return s;
}

Scenario holo(std::string name, Scheme scheme, std::vector<EstimatorVariant> variants) {
  Scenario s = spectro(std::move(name), scheme, std::move(variants));
  s.setup = Setup::Holography;
  s.reference = 1.0;
  return s;
}

std::vector<Scenario> builtin_scenarios() {
  using SV = SpectroEstimatorVariant;
  using HV = HoloEstimatorVariant;
  const SV direct{SpectroMethod::DirectCosine};
  const SV fft{SpectroMethod::FftCorrected};
  const SV fft_shift{SpectroMethod::FftCorrected, false, SymmetricForm::FftShift};
  const SV magnitude{SpectroMethod::Magnitude, false, SymmetricForm::PhaseRamp,
                     TruthSign::NonNegative};
  SV magnitude_fwd = magnitude;
  magnitude_fwd.forward_fft = true;

  std::vector<Scenario> out;
  out.push_back(spectro("fig2-perfect", Scheme::NonSymOne, {direct, fft}));
  out.push_back(spectro("fig2-ablation", Scheme::NonSymOne, {fft}));
  out.back().ablation = true;
  out.push_back(spectro("fig2-leakage", Scheme::NonSymOne, {fft}));
  out.back().extra_bins = 16;
  out.push_back(spectro("spectro-nonsym0", Scheme::NonSymZero, {direct, fft}));
  out.push_back(spectro("spectro-symmetric", Scheme::Symmetric, {direct, fft, fft_shift}));
  out.push_back(spectro("summary-magnitude", Scheme::Symmetric, {magnitude, magnitude_fwd, fft}));

  out.push_back(holo("fig4-holo-perfect", Scheme::NonSymOne, {HV{HoloMethod::DirectDft}, HV{}}));
  out.push_back(holo("fig4-holo-ablation", Scheme::NonSymOne, {HV{}}));
  out.back().ablation = true;
  out.push_back(holo("fig4-holo-leakage", Scheme::NonSymOne, {HV{}}));
  out.back().extra_bins = 16;
  out.push_back(holo("holo-nonsym0", Scheme::NonSymZero, {HV{HoloMethod::DirectDft}, HV{}}));
  out.push_back(holo("fig7-holo-sym-leakage", Scheme::Symmetric, {HV{}}));
  out.back().extra_bins = 16;
  out.push_back(holo("fig9-fftshift-identity", Scheme::Symmetric,
                     {HV{}, HV{HoloMethod::FftShifted}}));
  return out;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& s : builtin_scenarios()) names.push_back(s.name);
  return names;
}

std::optional<Scenario> named_scenario(std::string_view name) {
  for (auto& s : builtin_scenarios()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cubes

void validate(const HyperCube& cube) {
  if (cube.height <= 0 || cube.width <= 0) {
    throw Error(Errc::shape, "cube dimensions must be positive");
  }
  if (cube.n < 4 || cube.n % 2 != 0) {
    throw Error(Errc::shape, "cube frame count must be even and >= 4");
  }
  const auto expected = static_cast<std::size_t>(cube.height) *
                        static_cast<std::size_t>(cube.width) * static_cast<std::size_t>(cube.n);
  if (cube.frames.size() != expected) {
    throw Error(Errc::shape, "cube holds " + std::to_string(cube.frames.size()) +
                                 " values, expected H*W*N = " + std::to_string(expected));
  }
}

namespace {

// Runs fn(pixel) for every pixel on `threads` workers with a static split.
template <class Fn>
void for_each_pixel(std::size_t pixels, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, pixels));
  if (threads <= 1) {
    for (std::size_t p = 0; p < pixels; ++p) fn(p);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (pixels + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(pixels, lo + chunk);
        for (std::size_t p = lo; p < hi; ++p) fn(p);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Interferogram pixel_interferogram(const HyperCube& cube, std::size_t pixel, double r) {
  Interferogram j;
  j.scheme = cube.scheme;
  j.n = cube.n;
  j.setup = cube.setup;
  j.reference = r;
  const auto n = static_cast<std::size_t>(cube.n);
  const auto first = cube.frames.begin() + static_cast<std::ptrdiff_t>(pixel * n);
  j.values.assign(first, first + static_cast<std::ptrdiff_t>(n));
  return j;
}

}  // namespace

SpectrumVolume<double> reconstruct_cube(const HyperCube& cube,
                                        const SpectroEstimatorVariant& variant,
                                        unsigned threads) {
  validate(cube);
  if (cube.setup != Setup::Spectroscopy) {
    throw Error(Errc::wrong_setup, "holography cube needs a reference amplitude");
  }
  SpectrumVolume<double> vol{cube.height, cube.width, cube.n / 2, {}};
  const std::size_t pixels = static_cast<std::size_t>(cube.height) * cube.width;
  const auto bins = static_cast<std::size_t>(vol.bins);
  vol.values.resize(pixels * bins);
  for_each_pixel(pixels, threads, [&](std::size_t p) {
    const auto x = estimate_spectrum(pixel_interferogram(cube, p, 0.0), variant);
    std::copy(x.values.begin(), x.values.end(),
              vol.values.begin() + static_cast<std::ptrdiff_t>(p * bins));
  });
  return vol;
}

SpectrumVolume<Complex> reconstruct_cube(const HyperCube& cube, double r,
                                         const HoloEstimatorVariant& variant,
                                         unsigned threads) {
  validate(cube);
  if (cube.setup != Setup::Holography) {
    throw Error(Errc::wrong_setup, "spectroscopy cube given a reference amplitude");
  }
  if (!(r > 0.0)) throw Error(Errc::invalid_reference, "reference amplitude R must be positive");
  SpectrumVolume<Complex> vol{cube.height, cube.width, cube.n / 2, {}};
  const std::size_t pixels = static_cast<std::size_t>(cube.height) * cube.width;
  const auto bins = static_cast<std::size_t>(vol.bins);
  vol.values.resize(pixels * bins);
  for_each_pixel(pixels, threads, [&](std::size_t p) {
    const auto rec = reconstruct_holography(pixel_interferogram(cube, p, r), variant);
    std::copy(rec.spectrum.values.begin(), rec.spectrum.values.end(),
              vol.values.begin() + static_cast<std::ptrdiff_t>(p * bins));
  });
  return vol;
}

HyperCube random_cube(int height, int width, int n, Scheme scheme, Setup setup,
                      double reference, std::uint64_t seed) {
  const auto grid = make_grid(n);
  HyperCube cube{height, width, n, scheme, setup, setup == Setup::Holography ? reference : 0.0, {}};
  if (height <= 0 || width <= 0) throw Error(Errc::shape, "cube dimensions must be positive");
  const std::size_t pixels = static_cast<std::size_t>(height) * width;
  cube.frames.reserve(pixels * static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < pixels; ++p) {
    const std::uint64_t pixel_seed = splitmix64(seed ^ splitmix64(p));
    const auto j = setup == Setup::Spectroscopy
                       ? synth_spectroscopy(random_real_spectrum(n, pixel_seed), grid, scheme)
                       : synth_holography(random_complex_spectrum(n, pixel_seed), reference,
                                          grid, scheme);
    cube.frames.insert(cube.frames.end(), j.values.begin(), j.values.end());
  }
  return cube;
}

}  // namespace holospec
