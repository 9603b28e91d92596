#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "holospec/harness.hpp"

namespace holospec {

/// Variant labels: direct, fft, fft-shift, fft-uncorrected, magnitude, with an
/// optional "-fwd" suffix for the forward-transform spectroscopy forms.
/// Magnitude variants carry `truth`; holography accepts direct, fft,
/// fft-uncorrected and fft-shift.
std::optional<EstimatorVariant> parse_variant(std::string_view label, Setup setup,
                                              TruthSign truth = TruthSign::SignIndefinite);

/// Scenario configuration document. Keys mirror the Scenario fields; unknown
/// variant labels or setups raise Errc::parse.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Self-describing report. Wall-clock fields are omitted when
/// include_timing is false so that reports can be compared for equality.
nlohmann::json report_to_json(const ReconstructionReport& report, bool include_timing = true);

}  // namespace holospec
