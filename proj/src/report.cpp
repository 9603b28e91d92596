#include "holospec/report.hpp"

#include <cmath>

#include "holospec/errors.hpp"

namespace holospec {

using nlohmann::json;

std::optional<EstimatorVariant> parse_variant(std::string_view label, Setup setup,
                                              TruthSign truth) {
  std::string_view base = label;
  bool forward = false;
  if (base.size() > 4 && base.substr(base.size() - 4) == "-fwd") {
    forward = true;
    base.remove_suffix(4);
  }

  if (setup == Setup::Holography) {
    if (forward) return std::nullopt;
    if (base == "direct") return HoloEstimatorVariant{HoloMethod::DirectDft};
    if (base == "fft") return HoloEstimatorVariant{HoloMethod::FftCorrected};
    if (base == "fft-uncorrected") return HoloEstimatorVariant{HoloMethod::FftUncorrected};
    if (base == "fft-shift") return HoloEstimatorVariant{HoloMethod::FftShifted};
    return std::nullopt;
  }

  SpectroEstimatorVariant v;
  v.forward_fft = forward;
  v.truth = truth;
  if (base == "direct" && !forward) {
    v.method = SpectroMethod::DirectCosine;
  } else if (base == "fft") {
    v.method = SpectroMethod::FftCorrected;
  } else if (base == "fft-shift") {
    v.method = SpectroMethod::FftCorrected;
    v.symmetric_form = SymmetricForm::FftShift;
  } else if (base == "fft-uncorrected") {
    v.method = SpectroMethod::FftUncorrected;
  } else if (base == "magnitude") {
    v.method = SpectroMethod::Magnitude;
  } else {
    return std::nullopt;
  }
  return v;
}

namespace {

const char* setup_tag(Setup s) { return s == Setup::Holography ? "holo" : "spectro"; }

const char* truth_kind_tag(TruthSource::Kind k) {
  switch (k) {
    case TruthSource::Kind::SeededRandom: return "seeded-random";
    case TruthSource::Kind::Explicit: return "explicit";
    case TruthSource::Kind::File: return "file";
  }
  return "?";
}

json complex_array(std::span<const Complex> values) {
  json re = json::array(), im = json::array();
  for (const auto& c : values) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return json{{"re", re}, {"im", im}};
}

json polar_array(std::span<const Complex> values) {
  json amp = json::array(), phase = json::array();
  for (const auto& c : values) {
    amp.push_back(std::abs(c));
    phase.push_back(std::arg(c));
  }
  return json{{"amplitude", amp}, {"phase", phase}};
}

// NaN is not representable in JSON.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

Scenario scenario_from_json(const json& doc) {
  try {
    Scenario s;
    s.name = doc.value("name", std::string("custom"));
    s.n = doc.value("n", 40);
    require_valid_n(s.n);

    const auto scheme = parse_scheme(doc.at("scheme").get<std::string>());
    if (!scheme) throw Error(Errc::parse, "unknown scheme in scenario");
    s.scheme = *scheme;

    const auto setup = doc.at("setup").get<std::string>();
    if (setup == "spectro") {
      s.setup = Setup::Spectroscopy;
      if (doc.contains("r")) throw Error(Errc::usage, "r given for a spectroscopy scenario");
    } else if (setup == "holo") {
      s.setup = Setup::Holography;
      s.reference = doc.at("r").get<double>();
      if (!(s.reference > 0.0)) throw Error(Errc::invalid_reference, "r must be positive");
    } else {
      throw Error(Errc::parse, "unknown setup '" + setup + "'");
    }

    s.extra_bins = doc.value("extra_bins", 0);
    if (s.extra_bins < 0) throw Error(Errc::parse, "extra_bins must be >= 0");
    s.ablation = doc.value("ablation", false);
    s.full_range = doc.value("full_range", true);

    const json truth = doc.value("truth", json::object());
    const auto kind = truth.value("kind", std::string("seeded-random"));
    if (kind == "seeded-random") {
      s.truth.kind = TruthSource::Kind::SeededRandom;
      s.truth.seed = truth.value("seed", std::uint64_t{1});
      s.truth.range.lo = truth.value("amplitude_lo", 0.0);
      s.truth.range.hi = truth.value("amplitude_hi", 1.0);
      s.truth.phase_sigma = truth.value("phase_sigma", 0.5);
    } else if (kind == "explicit") {
      s.truth.kind = TruthSource::Kind::Explicit;
      if (s.setup == Setup::Spectroscopy) {
        s.truth.real_values = truth.at("values").get<std::vector<double>>();
      } else {
        const auto amp = truth.at("amplitude").get<std::vector<double>>();
        const auto phase = truth.at("phase").get<std::vector<double>>();
        s.truth.complex_values = from_polar(s.n, amp, phase).values;
      }
    } else if (kind == "file") {
      s.truth.kind = TruthSource::Kind::File;
      s.truth.path = truth.at("path").get<std::string>();
    } else {
      throw Error(Errc::parse, "unknown truth kind '" + kind + "'");
    }

    const TruthSign sign =
        doc.value("nonnegative_truth", false) ? TruthSign::NonNegative : TruthSign::SignIndefinite;
    const auto labels =
        doc.value("variants", std::vector<std::string>{"fft"});
    for (const auto& l : labels) {
      const auto v = parse_variant(l, s.setup, sign);
      if (!v) throw Error(Errc::parse, "unknown variant '" + l + "' for this setup");
      s.variants.push_back(*v);
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("scenario document: ") + e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["name"] = s.name;
  doc["n"] = s.n;
  doc["scheme"] = std::string(to_string(s.scheme));
  doc["setup"] = setup_tag(s.setup);
  if (s.setup == Setup::Holography) doc["r"] = s.reference;
  doc["extra_bins"] = s.extra_bins;
  doc["ablation"] = s.ablation;
  doc["full_range"] = s.full_range;

  json truth;
  truth["kind"] = truth_kind_tag(s.truth.kind);
  switch (s.truth.kind) {
    case TruthSource::Kind::SeededRandom:
      truth["seed"] = s.truth.seed;
      truth["amplitude_lo"] = s.truth.range.lo;
      truth["amplitude_hi"] = s.truth.range.hi;
      if (s.setup == Setup::Holography) truth["phase_sigma"] = s.truth.phase_sigma;
      break;
    case TruthSource::Kind::Explicit:
      if (s.setup == Setup::Spectroscopy) {
        truth["values"] = s.truth.real_values;
      } else {
        const auto p = polar_array(s.truth.complex_values);
        truth["amplitude"] = p["amplitude"];
        truth["phase"] = p["phase"];
      }
      break;
    case TruthSource::Kind::File:
      truth["path"] = s.truth.path;
      break;
  }
  doc["truth"] = truth;

  bool nonneg = false;
  json labels = json::array();
  for (const auto& v : s.variants) {
    labels.push_back(label(v));
    if (const auto* sv = std::get_if<SpectroEstimatorVariant>(&v)) {
      nonneg = nonneg || sv->truth == TruthSign::NonNegative;
    }
  }
  doc["variants"] = labels;
  if (nonneg) doc["nonnegative_truth"] = true;
  return doc;
}

json report_to_json(const ReconstructionReport& r, bool include_timing) {
  const bool holo = r.scenario.setup == Setup::Holography;
  json doc;
  doc["format"] = "holospec-report/1";
  doc["scenario"] = scenario_to_json(r.scenario);
  if (r.scenario.truth.kind == TruthSource::Kind::SeededRandom) {
    doc["seed"] = r.scenario.truth.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["truth"] = holo ? polar_array(r.truth_complex) : json(r.truth_real);

  json obs;
  obs["scheme"] = std::string(to_string(r.observations.scheme));
  json taus = json::array();
  for (std::size_t i = 0; i < r.observations.values.size(); ++i) {
    taus.push_back(r.observations.tau_at(i));
  }
  obs["tau"] = taus;
  obs["values"] = r.observations.values;
  doc["observations"] = obs;

  json variants = json::array();
  for (const auto& v : r.variants) {
    json jv;
    jv["label"] = v.label;
    jv["ok"] = v.ok;
    if (!v.ok) {
      jv["error"] = v.error;
      variants.push_back(jv);
      continue;
    }
    jv["rmse_low_band"] = v.low_band_rmse;
    jv["rmse_low_band_excluding_dc"] = v.low_band_rmse_excl_dc;
    if (r.scenario.full_range) jv["rmse_upper_band"] = v.upper_band_rmse;
    jv["oracle_max_deviation"] = number_or_null(v.oracle_max_deviation);
    if (holo) {
      jv["rmse_amplitude"] = v.amplitude_rmse;
      jv["rmse_phase_wrapped"] = v.phase_rmse;
      if (r.scenario.full_range) {
        jv["rmse_upper_amplitude"] = v.upper_amplitude_rmse;
        jv["rmse_upper_phase_wrapped"] = v.upper_phase_rmse;
        jv["full_range"] = polar_array(v.complex_full_range);
      }
      jv["estimate"] = polar_array(v.complex_estimate);
      jv["dc"] = {{"modulus_sq", v.dc.modulus_sq}, {"a0", v.dc.a0}, {"clamped", v.dc.clamped}};
    } else {
      jv["estimate"] = v.estimate;
      if (r.scenario.full_range) jv["full_range"] = v.full_range;
    }
    if (include_timing) jv["seconds"] = v.seconds;
    variants.push_back(jv);
  }
  doc["variants"] = variants;

  json oracle;
  oracle["ok"] = r.oracle.ok;
  if (!r.oracle.ok) {
    oracle["error"] = r.oracle.error;
  } else {
    oracle["estimate"] = holo ? complex_array(r.oracle.complex_estimate) : json(r.oracle.estimate);
    oracle["residual_norm"] = r.oracle.residual_norm;
    oracle["relative_residual"] = r.oracle.relative_residual;
    oracle["condition"] = r.oracle.condition;
  }
  if (include_timing) oracle["seconds"] = r.oracle.seconds;
  doc["oracle"] = oracle;

  if (include_timing) doc["timing"] = {{"synth_seconds", r.synth_seconds}};
  return doc;
}

}  // namespace holospec
