#include "holospec/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "holospec/harness.hpp"
#include "holospec/io.hpp"
#include "holospec/plot.hpp"
#include "holospec/report.hpp"
#include "holospec/selftest.hpp"

namespace holospec {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::usage:
    case Errc::variant:
    case Errc::sign_indefinite:
      return kExitUsage;
    case Errc::inconsistent_data:
    case Errc::ill_posed:
      return kExitNumeric;
    default:
      return kExitData;
  }
}

namespace {

struct SetupFlags {
  bool spectro = false;
  bool holo = false;
  CLI::Option* r_opt = nullptr;
  double r = 0.0;
  CLI::Option* scheme_opt = nullptr;
  std::string scheme;
};

void add_setup_flags(CLI::App* cmd, SetupFlags& f, bool scheme_required) {
  auto* s = cmd->add_flag("--spectro", f.spectro, "Spectroscopy setup");
  auto* h = cmd->add_flag("--holo", f.holo, "Holography setup (needs --r)");
  s->excludes(h);
  f.r_opt = cmd->add_option("--r", f.r, "Reference beam amplitude R > 0")->excludes(s);
  f.scheme_opt = cmd->add_option("--scheme", f.scheme, "Sampling scheme: nonsym1, nonsym0, sym")
                     ->check(CLI::IsMember({"nonsym1", "nonsym0", "sym"}));
  if (scheme_required) f.scheme_opt->required();
}

// For commands that create data: exactly one setup, R iff holography.
Setup require_setup(const SetupFlags& f) {
  if (!f.spectro && !f.holo) throw Error(Errc::usage, "one of --spectro or --holo is required");
  if (f.holo) {
    if (f.r_opt->count() == 0) throw Error(Errc::usage, "--holo requires --r");
    if (!(f.r > 0.0)) throw Error(Errc::usage, "--r must be positive");
    return Setup::Holography;
  }
  return Setup::Spectroscopy;
}

const char* setup_tag(Setup s) { return s == Setup::Holography ? "holo" : "spectro"; }

// Flags given alongside a data file are assertions about its header.
void check_against_header(const SetupFlags& f, Scheme scheme, Setup setup, double r,
                          const std::string& source) {
  auto conflict = [&](const std::string& what) {
    throw Error(Errc::convention_conflict, source + ": " + what + "; refusing to guess");
  };
  if (f.scheme_opt->count() && *parse_scheme(f.scheme) != scheme) {
    conflict("--scheme " + f.scheme + " but the file says " + std::string(to_string(scheme)));
  }
  if (f.spectro && setup != Setup::Spectroscopy) conflict("--spectro but the file is holographic");
  if (f.holo && setup != Setup::Holography) conflict("--holo but the file is spectroscopic");
  if (f.r_opt->count()) {
    if (setup != Setup::Holography) conflict("--r given for a spectroscopy file");
    if (f.r != r) conflict("--r " + format_double(f.r) + " but the file says " + format_double(r));
  }
}

std::ofstream open_text(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse, "cannot open " + path.string() + " for writing");
  out.exceptions(std::ios::badbit);
  return out;
}

void write_json(const fs::path& path, const json& doc) { open_text(path) << doc.dump(2) << '\n'; }

std::vector<double> iota(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
  return x;
}

std::vector<double> amplitudes(std::span<const Complex> v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(std::abs(c));
  return out;
}

std::vector<double> phases(std::span<const Complex> v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(std::arg(c));
  return out;
}

// ---------------------------------------------------------------------------
// synth

struct SynthArgs {
  SetupFlags setup;
  std::string spectrum;
  bool random = false;
  int n = 40;
  std::uint64_t seed = 1;
  double amp_lo = 0.0;
  double amp_hi = 1.0;
  double phase_sigma = 0.5;
  int extra = 0;
  std::string output;
  std::string truth_out;
  CLI::Option* n_opt = nullptr;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  const Setup setup = require_setup(a.setup);
  const Scheme scheme = *parse_scheme(a.setup.scheme);
  const bool holo = setup == Setup::Holography;

  std::vector<double> real;
  std::vector<Complex> cplx;
  int n = a.n;
  if (a.random) {
    if (holo) {
      cplx = random_wide_complex_spectrum(n, a.seed, {a.amp_lo, a.amp_hi}, a.phase_sigma, a.extra)
                 .values;
    } else {
      real = random_wide_real_spectrum(n, a.seed, {a.amp_lo, a.amp_hi}, a.extra).values;
    }
  } else {
    const auto table = load_spectrum_csv(a.spectrum);
    if (table.complex != holo) {
      throw Error(Errc::parse, a.spectrum + (holo ? ": holography needs u,amplitude,phase columns"
                                                   : ": spectroscopy needs u,value columns"));
    }
    const std::size_t rows = holo ? table.amplitude.size() : table.values.size();
    if (a.n_opt->count() == 0) n = static_cast<int>(2 * rows);
    if (holo) {
      cplx = from_polar(n, table.amplitude, table.phase).values;
    } else {
      real = table.values;
    }
  }

  const auto grid = make_grid(n);
  const Interferogram j = holo ? synth_holography(WideComplexSpectrum{n, cplx}, a.setup.r, grid, scheme)
                               : synth_spectroscopy(WideRealSpectrum{n, real}, grid, scheme);
  save_interferogram(a.output, j);
  if (!a.truth_out.empty()) {
    auto f = open_text(a.truth_out);
    if (holo) {
      write_complex_spectrum_csv(f, cplx);
    } else {
      write_real_spectrum_csv(f, real);
    }
  }
  out << "wrote " << a.output << ": n=" << n << " scheme=" << to_string(scheme)
      << " setup=" << setup_tag(setup) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructArgs {
  SetupFlags setup;
  std::string input;
  std::string output;
  std::string variant = "fft";
  bool forward_fft = false;
  bool nonnegative = false;
  std::string truth;
  std::string report;
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out) {
  const Interferogram j = load_interferogram(a.input);
  check_against_header(a.setup, j.scheme, j.setup, j.reference, a.input);
  const bool holo = j.setup == Setup::Holography;

  const std::string label = a.variant + (a.forward_fft ? "-fwd" : "");
  const auto parsed = parse_variant(label, j.setup,
                                    a.nonnegative ? TruthSign::NonNegative : TruthSign::SignIndefinite);
  if (!parsed) {
    throw Error(Errc::usage, "variant '" + label + "' is not available for " + setup_tag(j.setup));
  }
  if (!holo && std::get<SpectroEstimatorVariant>(*parsed).method == SpectroMethod::Magnitude &&
      !a.nonnegative) {
    throw Error(Errc::usage, "the magnitude estimator needs --nonnegative (truth X(u) >= 0)");
  }

  json report{{"format", "holospec-reconstruct/1"},
              {"input", a.input},
              {"scheme", std::string(to_string(j.scheme))},
              {"n", j.n},
              {"setup", setup_tag(j.setup)},
              {"variant", label}};
  if (holo) report["r"] = j.reference;

  const BandRange low = BandRange::low_band(j.n);
  const BandRange low_no_dc(1, low.hi());
  auto f = open_text(a.output);
  if (holo) {
    const auto rec = reconstruct_holography(j, std::get<HoloEstimatorVariant>(*parsed));
    write_complex_spectrum_csv(f, rec.spectrum.values);
    report["dc"] = {{"modulus_sq", rec.dc.modulus_sq}, {"a0", rec.dc.a0}, {"clamped", rec.dc.clamped}};
    if (!a.truth.empty()) {
      const auto table = load_spectrum_csv(a.truth);
      if (!table.complex) throw Error(Errc::parse, a.truth + ": expected u,amplitude,phase columns");
      const auto truth = from_polar(j.n, table.amplitude, table.phase).values;
      if (truth.size() < low.hi()) throw Error(Errc::shape, a.truth + ": fewer than N/2 truth bins");
      std::vector<double> err(low.hi()), zero(low.hi(), 0.0);
      for (std::size_t u = 0; u < low.hi(); ++u) err[u] = std::abs(rec.spectrum.values[u] - truth[u]);
      const auto est_amp = amplitudes(rec.spectrum.values), true_amp = amplitudes(truth);
      const auto est_ph = phases(rec.spectrum.values), true_ph = phases(truth);
      report["rmse_low_band"] = rmse(err, zero, low);
      report["rmse_low_band_excluding_dc"] = rmse(err, zero, low_no_dc);
      report["rmse_amplitude"] = rmse(est_amp, true_amp, low);
      report["rmse_phase_wrapped"] = wrapped_phase_rmse(est_ph, true_ph, low);
    }
  } else {
    const auto est = estimate_spectrum(j, std::get<SpectroEstimatorVariant>(*parsed));
    write_real_spectrum_csv(f, est.values);
    if (!a.truth.empty()) {
      const auto table = load_spectrum_csv(a.truth);
      if (table.complex) throw Error(Errc::parse, a.truth + ": expected u,value columns");
      report["rmse_low_band"] = rmse(est.values, table.values, low);
      report["rmse_low_band_excluding_dc"] = rmse(est.values, table.values, low_no_dc);
    }
  }

  out << "wrote " << a.output << " (" << label << ")\n";
  if (report.contains("rmse_low_band")) {
    out << "low-band rmse " << format_double(report["rmse_low_band"].get<double>())
        << ", excluding u=0 " << format_double(report["rmse_low_band_excluding_dc"].get<double>()) << '\n';
  }
  if (!a.report.empty()) write_json(a.report, report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentArgs {
  std::string name;
  std::string config;
  std::string out_dir;
  bool list = false;
  CLI::Option* seed_opt = nullptr;
  std::uint64_t seed = 1;
};

std::string file_stem(const std::string& label) {
  std::string s = label;
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '_';
  }
  return s;
}

void emit_spectro_variant(const fs::path& dir, const ReconstructionReport& r, const VariantOutcome& v) {
  const auto truth = truth_full_range(r);
  const auto& est = v.full_range.empty() ? v.estimate : v.full_range;
  const std::string stem = file_stem(v.label);
  {
    auto f = open_text(dir / (stem + ".csv"));
    f << "u,truth,estimate\n";
    for (std::size_t u = 0; u < est.size(); ++u) {
      f << u << ',' << format_double(truth[u]) << ',' << format_double(est[u]) << '\n';
    }
  }
  const auto x = iota(est.size());
  const std::vector<PlotSeries> series{
      truth_series("truth X(u)", x, std::vector<double>(truth.begin(), truth.begin() + est.size())),
      estimate_series("estimate (" + v.label + ")", x, est)};
  open_text(dir / (stem + ".svg")) << render_svg(r.scenario.name + ": " + v.label, "u", series);
}

void emit_holo_variant(const fs::path& dir, const ReconstructionReport& r, const VariantOutcome& v) {
  const auto truth = complex_truth_full_range(r);
  std::vector<Complex> est = v.complex_full_range.empty() ? v.complex_estimate : v.complex_full_range;
  if (!est.empty() && !v.complex_estimate.empty()) est[0] = v.complex_estimate[0];
  const std::string stem = file_stem(v.label);
  const auto t_amp = amplitudes(truth), t_ph = phases(truth);
  const auto e_amp = amplitudes(est), e_ph = phases(est);
  {
    auto f = open_text(dir / (stem + ".csv"));
    f << "u,truth_amplitude,truth_phase,estimate_amplitude,estimate_phase\n";
    for (std::size_t u = 0; u < est.size(); ++u) {
      f << u << ',' << format_double(t_amp[u]) << ',' << format_double(t_ph[u]) << ','
        << format_double(e_amp[u]) << ',' << format_double(e_ph[u]) << '\n';
    }
  }
  const auto x = iota(est.size());
  const auto cut = [&](const std::vector<double>& v) {
    return std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(est.size()));
  };
  const std::vector<PlotSeries> amp{truth_series("truth |A(u)|", x, cut(t_amp)),
                                    estimate_series("estimate (" + v.label + ")", x, e_amp)};
  const std::vector<PlotSeries> ph{truth_series("truth arg A(u)", x, cut(t_ph)),
                                   estimate_series("estimate (" + v.label + ")", x, e_ph)};
  open_text(dir / (stem + "-amplitude.svg"))
      << render_svg(r.scenario.name + ": amplitude, " + v.label, "u", amp);
  open_text(dir / (stem + "-phase.svg"))
      << render_svg(r.scenario.name + ": phase, " + v.label, "u", ph);
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  if (a.list) {
    for (const auto& n : scenario_names()) out << n << '\n';
    return kExitOk;
  }
  Scenario s;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw Error(Errc::parse, "cannot open " + a.config);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::parse, a.config + ": " + e.what());
    }
    s = scenario_from_json(doc);
  } else if (!a.name.empty()) {
    auto named = named_scenario(a.name);
    if (!named) throw Error(Errc::usage, "unknown scenario '" + a.name + "' (see --list)");
    s = *named;
  } else {
    throw Error(Errc::usage, "give a scenario name or --config");
  }
  if (a.seed_opt->count()) s.truth.seed = a.seed;

  const auto report = run_scenario(s);
  const fs::path dir = a.out_dir.empty() ? fs::path(s.name) : fs::path(a.out_dir);
  fs::create_directories(dir);
  write_json(dir / "report.json", report_to_json(report));
  {
    auto f = open_text(dir / "observations.csv");
    write_interferogram_csv(f, report.observations);
  }
  std::vector<double> tau;
  for (std::size_t i = 0; i < report.observations.values.size(); ++i) {
    tau.push_back(static_cast<double>(report.observations.tau_at(i)));
  }
  const std::vector<PlotSeries> obs{estimate_series("J(tau)", tau, report.observations.values)};
  open_text(dir / "observations.svg") << render_svg(s.name + ": observations", "tau", obs);

  const bool holo = s.setup == Setup::Holography;
  out << "scenario " << s.name << " (n=" << s.n << ", scheme=" << to_string(s.scheme)
      << ", setup=" << setup_tag(s.setup) << ", seed=" << s.truth.seed << ")\n";
  out << std::left << std::setw(22) << "variant" << std::setw(14) << "low-band" << std::setw(14)
      << "low u>=1" << std::setw(14) << "upper-band" << "oracle dev\n";
  for (const auto& v : report.variants) {
    if (!v.ok) {
      out << std::setw(22) << v.label << "error: " << v.error << '\n';
      continue;
    }
    if (holo) {
      emit_holo_variant(dir, report, v);
    } else {
      emit_spectro_variant(dir, report, v);
    }
    std::ostringstream row;
    row << std::scientific << std::setprecision(3) << std::left << std::setw(22) << v.label
        << std::setw(14) << v.low_band_rmse << std::setw(14) << v.low_band_rmse_excl_dc
        << std::setw(14) << v.upper_band_rmse << v.oracle_max_deviation;
    out << row.str() << '\n';
  }
  if (report.oracle.ok) {
    out << "oracle relative residual " << report.oracle.relative_residual << '\n';
  } else {
    out << "oracle error: " << report.oracle.error << '\n';
  }
  out << "outputs in " << dir.string() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cubes

struct CubeSynthArgs {
  SetupFlags setup;
  int height = 64;
  int width = 64;
  int n = 64;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_cube_synth(const CubeSynthArgs& a, std::ostream& out) {
  const Setup setup = require_setup(a.setup);
  const auto cube = random_cube(a.height, a.width, a.n, *parse_scheme(a.setup.scheme), setup,
                                setup == Setup::Holography ? a.setup.r : 0.0, a.seed);
  save_cube(a.output, cube);
  out << "wrote " << a.output << " (" << a.height << 'x' << a.width << 'x' << a.n << ")\n";
  return kExitOk;
}

struct CubeArgs {
  SetupFlags setup;
  std::string input;
  std::string output;
  std::string variant = "fft";
  bool nonnegative = false;
  unsigned threads = 0;
  bool check_serial = false;
};

int cmd_cube(const CubeArgs& a, std::ostream& out) {
  const auto cube = load_cube(a.input);
  check_against_header(a.setup, cube.scheme, cube.setup, cube.reference, a.input);
  const auto parsed = parse_variant(a.variant, cube.setup,
                                    a.nonnegative ? TruthSign::NonNegative : TruthSign::SignIndefinite);
  if (!parsed) throw Error(Errc::usage, "variant '" + a.variant + "' is not available");

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  bool same = true;
  if (cube.setup == Setup::Holography) {
    const auto& v = std::get<HoloEstimatorVariant>(*parsed);
    const auto vol = reconstruct_cube(cube, cube.reference, v, a.threads);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (a.check_serial) same = reconstruct_cube(cube, cube.reference, v, 1).values == vol.values;
    save_volume(a.output, vol);
    out << "reconstructed " << cube.height * cube.width << " pixels in " << secs << " s ("
        << cube.height * cube.width / std::max(secs, 1e-12) << " pixels/s)\n";
  } else {
    const auto& v = std::get<SpectroEstimatorVariant>(*parsed);
    const auto vol = reconstruct_cube(cube, v, a.threads);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (a.check_serial) same = reconstruct_cube(cube, v, 1).values == vol.values;
    save_volume(a.output, vol);
    out << "reconstructed " << cube.height * cube.width << " pixels in " << secs << " s ("
        << cube.height * cube.width / std::max(secs, 1e-12) << " pixels/s)\n";
  }
  if (a.check_serial) {
    out << (same ? "serial check: bitwise identical\n" : "serial check: MISMATCH\n");
    if (!same) return kExitNumeric;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_selftest(std::ostream& out) {
  const auto results = run_selftest();
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitNumeric;
}

const auto kValidN = CLI::Validator(
    [](const std::string& s) -> std::string {
      try {
        const int n = std::stoi(s);
        if (n >= 4 && n % 2 == 0) return {};
      } catch (const std::exception&) {
      }
      return "N must be an even integer >= 4";
    },
    "EVEN>=4");

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference-free and reference-beam spectrum reconstruction from interferograms",
               "holospec"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Synthesize an interferogram from a spectrum");
  add_setup_flags(synth, sa.setup, true);
  auto* spec_opt = synth->add_option("--spectrum", sa.spectrum, "Spectrum CSV")->check(CLI::ExistingFile);
  auto* rand_opt = synth->add_flag("--random", sa.random, "Seeded random truth");
  spec_opt->excludes(rand_opt);
  sa.n_opt = synth->add_option("--n", sa.n, "Number of samples N")->check(kValidN);
  synth->add_option("--seed", sa.seed, "Random seed")->needs(rand_opt);
  synth->add_option("--amp-lo", sa.amp_lo, "Lower amplitude bound")->needs(rand_opt);
  synth->add_option("--amp-hi", sa.amp_hi, "Upper amplitude bound")->needs(rand_opt);
  synth->add_option("--phase-sigma", sa.phase_sigma, "Phase std (holography)")->needs(rand_opt);
  synth->add_option("--extra", sa.extra, "Out-of-band bins past N/2")->needs(rand_opt)
      ->check(CLI::NonNegativeNumber);
  synth->add_option("-o,--output", sa.output, "Interferogram CSV to write")->required();
  synth->add_option("--truth-out", sa.truth_out, "Also write the truth spectrum CSV");

  ReconstructArgs ra;
  auto* rec = app.add_subcommand("reconstruct", "Estimate the spectrum of an interferogram file");
  add_setup_flags(rec, ra.setup, false);
  rec->add_option("-i,--input", ra.input, "Interferogram CSV")->required()->check(CLI::ExistingFile);
  rec->add_option("-o,--output", ra.output, "Spectrum CSV to write")->required();
  rec->add_option("--variant", ra.variant,
                  "direct, fft, fft-shift, fft-uncorrected, magnitude")->capture_default_str();
  rec->add_flag("--forward-fft", ra.forward_fft, "Use dft(J)/N (spectroscopy)");
  rec->add_flag("--nonnegative", ra.nonnegative, "Assert X(u) >= 0 (magnitude estimator)");
  rec->add_option("--truth", ra.truth, "Truth spectrum CSV for RMSE")->check(CLI::ExistingFile);
  rec->add_option("--report", ra.report, "Report JSON to write");

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Run a named or configured scenario");
  auto* name_opt = exp->add_option("name", ea.name, "Built-in scenario name");
  auto* cfg_opt = exp->add_option("--config", ea.config, "Scenario JSON")->check(CLI::ExistingFile);
  name_opt->excludes(cfg_opt);
  exp->add_option("--out-dir", ea.out_dir, "Output directory (default: scenario name)");
  exp->add_flag("--list", ea.list, "List built-in scenarios");
  ea.seed_opt = exp->add_option("--seed", ea.seed, "Override the truth seed");

  CubeSynthArgs csa;
  auto* csyn = app.add_subcommand("cube-synth", "Synthesize a random hyperspectral cube");
  add_setup_flags(csyn, csa.setup, true);
  csyn->add_option("--height", csa.height)->check(CLI::PositiveNumber)->capture_default_str();
  csyn->add_option("--width", csa.width)->check(CLI::PositiveNumber)->capture_default_str();
  csyn->add_option("--n", csa.n)->check(kValidN)->capture_default_str();
  csyn->add_option("--seed", csa.seed)->capture_default_str();
  csyn->add_option("-o,--output", csa.output, "Cube data file")->required();

  CubeArgs ca;
  auto* cube = app.add_subcommand("cube", "Reconstruct every pixel of a cube");
  add_setup_flags(cube, ca.setup, false);
  cube->add_option("-i,--input", ca.input, "Cube data file")->required()->check(CLI::ExistingFile);
  cube->add_option("-o,--output", ca.output, "Spectrum volume to write")->required();
  cube->add_option("--variant", ca.variant)->capture_default_str();
  cube->add_flag("--nonnegative", ca.nonnegative, "Assert X(u) >= 0");
  cube->add_option("--threads", ca.threads, "Worker threads, 0 = all cores")->capture_default_str();
  cube->add_flag("--check-serial", ca.check_serial, "Compare against a serial run");

  auto* self = app.add_subcommand("selftest", "Run the built-in invariant checks");

  std::vector<const char*> argv{"holospec"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "holospec: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*synth) {
      if (!sa.random && sa.spectrum.empty()) throw Error(Errc::usage, "give --spectrum or --random");
      return cmd_synth(sa, out);
    }
    if (*rec) return cmd_reconstruct(ra, out);
    if (*exp) return cmd_experiment(ea, out);
    if (*csyn) return cmd_cube_synth(csa, out);
    if (*cube) return cmd_cube(ca, out);
    if (*self) return cmd_selftest(out);
  } catch (const Error& e) {
    err << "holospec: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "holospec: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace holospec
