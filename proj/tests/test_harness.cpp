#include <gtest/gtest.h>

#include <numeric>

#include "holospec/harness.hpp"
#include "holospec/report.hpp"
#include "reference.hpp"

using namespace holospec;

TEST(RandomSpectrum, Deterministic) {
  EXPECT_EQ(random_real_spectrum(40, 9).values, random_real_spectrum(40, 9).values);
  EXPECT_EQ(random_complex_spectrum(40, 9).values, random_complex_spectrum(40, 9).values);
  EXPECT_NE(random_real_spectrum(40, 9).values, random_real_spectrum(40, 10).values);
}

TEST(RandomSpectrum, RangeAndSign) {
  const auto x = random_real_spectrum(64, 3, {-1.0, 1.0});
  ASSERT_EQ(x.values.size(), 32u);
  EXPECT_TRUE(std::any_of(x.values.begin(), x.values.end(), [](double v) { return v < 0; }));
  for (const double v : x.values) {
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(RandomSpectrum, ZeroSigmaGivesZeroPhases) {
  const auto a = random_complex_spectrum(40, 4, {}, 0.0);
  for (const auto& c : a.values) EXPECT_EQ(c.imag(), 0.0);
  for (const double p : a.phases()) EXPECT_EQ(p, 0.0);
}

TEST(RandomSpectrum, PhaseSpread) {
  const auto a = random_complex_spectrum(40, 1, {}, 0.5);
  std::vector<double> ph;
  for (std::size_t u = 1; u < a.values.size(); ++u) ph.push_back(std::arg(a.values[u]));
  const double mean = std::accumulate(ph.begin(), ph.end(), 0.0) / ph.size();
  double var = 0.0;
  for (const double p : ph) var += (p - mean) * (p - mean);
  const double sd = std::sqrt(var / (ph.size() - 1));
  EXPECT_GE(sd, 0.3);
  EXPECT_LE(sd, 0.7);
}

TEST(RandomSpectrum, DcRealNonNegative) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_complex_spectrum(16, seed, {-1.0, 1.0}, 2.0);
    EXPECT_EQ(a.values[0].imag(), 0.0);
    EXPECT_GE(a.values[0].real(), 0.0);
  }
}

TEST(RandomSpectrum, WideSharesLowBand) {
  const auto w = random_wide_real_spectrum(40, 5, {}, 16);
  const auto x = random_real_spectrum(40, 5);
  ASSERT_EQ(w.values.size(), 36u);
  EXPECT_EQ(w.extra(), 16u);
  EXPECT_TRUE(std::equal(x.values.begin(), x.values.end(), w.values.begin()));
  const auto wc = random_wide_complex_spectrum(40, 5, {}, 0.5, 16);
  const auto c = random_complex_spectrum(40, 5);
  EXPECT_TRUE(std::equal(c.values.begin(), c.values.end(), wc.values.begin()));
}

TEST(RunScenario, ExactRecovery) {
  for (const char* name : {"fig2-perfect", "spectro-nonsym0", "spectro-symmetric", "fig4-holo-perfect",
                           "holo-nonsym0", "fig9-fftshift-identity"}) {
    const auto r = run_scenario(*named_scenario(name));
    ASSERT_TRUE(r.oracle.ok) << name;
    for (const auto& v : r.variants) {
      ASSERT_TRUE(v.ok) << name << " " << v.label << ": " << v.error;
      EXPECT_LT(v.low_band_rmse, 1e-10) << name << " " << v.label;
      EXPECT_LT(v.low_band_rmse_excl_dc, 1e-10);
      EXPECT_LT(v.oracle_max_deviation, 1e-8);
      EXPECT_GE(v.upper_band_rmse, 0.0);
    }
  }
}

TEST(RunScenario, AblationIsLarge) {
  const auto r = run_scenario(*named_scenario("fig2-ablation"));
  const auto truth = truth_full_range(r);
  double ss = 0.0;
  for (int u = 0; u < 20; ++u) ss += truth[u] * truth[u];
  const double truth_rms = std::sqrt(ss / 20);
  bool found = false;
  for (const auto& v : r.variants) {
    if (v.label == "fft-uncorrected") {
      found = true;
      EXPECT_GE(v.low_band_rmse, 1e-2 * truth_rms);
    } else {
      EXPECT_LT(v.low_band_rmse, 1e-10);
    }
  }
  EXPECT_TRUE(found);
}

TEST(RunScenario, LeakageRatio) {
  const auto exact = run_scenario(*named_scenario("fig2-perfect"));
  const auto leak = run_scenario(*named_scenario("fig2-leakage"));
  double base = 0.0;
  for (const auto& v : exact.variants) base = std::max(base, v.low_band_rmse);
  ASSERT_EQ(leak.variants.size(), 1u);
  EXPECT_GE(leak.variants[0].low_band_rmse, 1e6 * base);
  EXPECT_GT(leak.oracle.relative_residual, 1e-3);
}

TEST(RunScenario, HolographyMetrics) {
  const auto r = run_scenario(*named_scenario("fig4-holo-ablation"));
  for (const auto& v : r.variants) {
    ASSERT_TRUE(v.ok);
    if (v.label == "fft-uncorrected") {
      EXPECT_GT(v.phase_rmse, 0.1);
      EXPECT_LT(v.amplitude_rmse, 1e-10);
    } else {
      EXPECT_LT(v.phase_rmse, 1e-10);
    }
  }
}

TEST(RunScenario, VariantErrorsAreRecorded) {
  Scenario s = *named_scenario("fig4-holo-perfect");
  s.variants.push_back(HoloEstimatorVariant{HoloMethod::FftShifted});
  const auto r = run_scenario(s);
  ASSERT_EQ(r.variants.size(), 3u);
  EXPECT_TRUE(r.variants[0].ok);
  EXPECT_FALSE(r.variants[2].ok);
  EXPECT_FALSE(r.variants[2].error.empty());

  Scenario m = *named_scenario("fig2-perfect");
  m.variants = {SpectroEstimatorVariant{SpectroMethod::Magnitude}};
  const auto rm = run_scenario(m);
  EXPECT_FALSE(rm.variants[0].ok);
}

TEST(RunScenario, ExplicitTruth) {
  Scenario s;
  s.name = "explicit";
  s.n = 8;
  s.truth.kind = TruthSource::Kind::Explicit;
  s.truth.real_values = {0.5, -0.25, 1.0, 0.0};
  s.variants = {SpectroEstimatorVariant{}};
  const auto r = run_scenario(s);
  ASSERT_TRUE(r.variants[0].ok);
  EXPECT_LT(ref::max_abs_diff(r.variants[0].estimate, s.truth.real_values), 1e-12);
}

TEST(RunScenario, DeterministicReport) {
  for (const auto& name : scenario_names()) {
    const auto a = report_to_json(run_scenario(*named_scenario(name)), false);
    const auto b = report_to_json(run_scenario(*named_scenario(name)), false);
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(a["scenario"]["truth"]["seed"], 1);
  }
}

TEST(ScenarioJson, RoundTrip) {
  for (const auto& name : scenario_names()) {
    const auto s = *named_scenario(name);
    const auto back = scenario_from_json(scenario_to_json(s));
    EXPECT_EQ(scenario_to_json(back), scenario_to_json(s)) << name;
  }
}

TEST(ScenarioJson, BadDocuments) {
  EXPECT_THROW(scenario_from_json(nlohmann::json{{"setup", "optics"}}), Error);
  EXPECT_THROW(scenario_from_json(nlohmann::json{{"variants", {"bogus"}}}), Error);
  EXPECT_THROW(scenario_from_json(nlohmann::json{{"n", "forty"}}), Error);
}

TEST(ReconstructCube, IdenticalPixels) {
  HyperCube cube;
  cube.height = 2;
  cube.width = 2;
  cube.n = 16;
  cube.scheme = Scheme::Symmetric;
  const auto x = ref::uniform(8, 2, -1, 1);
  const auto j = ref::spectro_j(x, 16, Scheme::Symmetric);
  for (int p = 0; p < 4; ++p) cube.frames.insert(cube.frames.end(), j.begin(), j.end());
  const auto vol = reconstruct_cube(cube, SpectroEstimatorVariant{}, 4);
  ASSERT_EQ(vol.values.size(), 32u);
  for (int p = 1; p < 4; ++p) {
    EXPECT_TRUE(std::equal(vol.values.begin(), vol.values.begin() + 8, vol.values.begin() + 8 * p));
  }
  EXPECT_LT(ref::max_abs_diff(std::vector<double>(vol.values.begin(), vol.values.begin() + 8), x), 1e-10);
}

TEST(ReconstructCube, SinglePixelEqualsPointEstimator) {
  const auto cube = random_cube(1, 1, 40, Scheme::NonSymOne, holospec::Setup::Holography, 1.5, 3);
  Interferogram j;
  j.n = 40;
  j.scheme = cube.scheme;
  j.setup = holospec::Setup::Holography;
  j.reference = 1.5;
  j.values = cube.frames;
  const auto vol = reconstruct_cube(cube, 1.5, HoloEstimatorVariant{}, 1);
  EXPECT_EQ(vol.values, reconstruct_holography(j, {}).spectrum.values);

  const auto sc = random_cube(1, 1, 40, Scheme::NonSymZero, holospec::Setup::Spectroscopy, 0.0, 3);
  Interferogram js;
  js.n = 40;
  js.scheme = sc.scheme;
  js.values = sc.frames;
  EXPECT_EQ(reconstruct_cube(sc, SpectroEstimatorVariant{}, 1).values,
            estimate_spectrum(js, SpectroEstimatorVariant{}).values);
}

TEST(ReconstructCube, ThreadCountDoesNotMatter) {
  const auto cube = random_cube(9, 7, 32, Scheme::NonSymOne, holospec::Setup::Spectroscopy, 0.0, 11);
  const auto serial = reconstruct_cube(cube, SpectroEstimatorVariant{}, 1);
  for (const unsigned t : {2u, 3u, 8u, 0u}) {
    EXPECT_EQ(reconstruct_cube(cube, SpectroEstimatorVariant{}, t).values, serial.values);
  }
  const auto hc = random_cube(5, 6, 16, Scheme::Symmetric, holospec::Setup::Holography, 1.0, 12);
  const auto hs = reconstruct_cube(hc, 1.0, HoloEstimatorVariant{}, 1);
  EXPECT_EQ(reconstruct_cube(hc, 1.0, HoloEstimatorVariant{}, 5).values, hs.values);
}

TEST(ReconstructCube, ShapeErrors) {
  auto cube = random_cube(2, 2, 8, Scheme::NonSymOne, holospec::Setup::Spectroscopy, 0.0, 1);
  cube.frames.pop_back();
  try {
    reconstruct_cube(cube, SpectroEstimatorVariant{}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape);
  }
}
