#include "holospec/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "holospec/harness.hpp"
#include "holospec/io.hpp"
#include "holospec/oracle.hpp"

namespace holospec {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

CheckResult bounded(std::string name, double worst, double tol) {
  const bool ok = std::isfinite(worst) && worst < tol;
  return {std::move(name), ok, "max error " + sci(worst) + " (limit " + sci(tol) + ")"};
}

// (1/N) sum_tau 2 cos(2 pi tau u / N) cos(2 pi tau v / N) over tau = 1..N should equal
// delta(u,v) (1 + delta(u,0)) for u, v in the low band.
double kronecker_error(int n) {
  double worst = 0.0;
  const double w = 2.0 * std::numbers::pi / n;
  for (int u = 0; u < n / 2; ++u) {
    for (int v = 0; v < n / 2; ++v) {
      double s = 0.0;
      for (int tau = 1; tau <= n; ++tau) {
        s += 2.0 * std::cos(w * tau * u) * std::cos(w * tau * v);
      }
      s /= n;
      const double expected = u == v ? (u == 0 ? 2.0 : 1.0) : 0.0;
      worst = std::max(worst, std::abs(s - expected));
    }
  }
  return worst;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? worst : INFINITY;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? worst : INFINITY;
}

template <class F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  constexpr int kN = 40;
  const auto grid = make_grid(kN);

  for (const int n : {8, 16, 40}) {
    const auto name = "kronecker-identity-n" + std::to_string(n);
    out.push_back(guarded(name, [&] { return bounded(name, kronecker_error(n), 1e-12); }));
  }

  out.push_back(guarded("transform-round-trip", [&] {
    double worst = 0.0;
    for (const int n : {8, 40, 64}) {
      const auto x = random_complex_spectrum(2 * n, 7, {-1.0, 1.0}, 1.0).values;
      const auto back = idft(dft(x));
      worst = std::max(worst, max_abs_diff(back, x));
    }
    return bounded("transform-round-trip", worst, 1e-12);
  }));

  out.push_back(guarded("transform-vs-naive", [&] {
    double worst = 0.0;
    for (const int n : {8, 12, 16, 40}) {
      const auto x = random_complex_spectrum(2 * n, 11, {-1.0, 1.0}, 1.0).values;
      worst = std::max(worst, max_abs_diff(dft(x), naive_dft(x)));
    }
    return bounded("transform-vs-naive", worst, 1e-12);
  }));

  for (const Scheme scheme : kAllSchemes) {
    const std::string tag(to_string(scheme));
    const auto x = random_real_spectrum(kN, 3, {-1.0, 1.0});
    const auto j = synth_spectroscopy(x, grid, scheme);

    const auto n1 = "spectro-round-trip-" + tag;
    out.push_back(guarded(n1, [&] {
      return bounded(n1, max_abs_diff(estimate_fft(j, {}).values, x.values), 1e-10);
    }));

    const auto n2 = "fft-equals-direct-" + tag;
    out.push_back(guarded(n2, [&] {
      return bounded(n2, max_abs_diff(estimate_fft(j, {}).values, estimate_direct(j).values),
                     1e-12);
    }));

    const auto a = random_complex_spectrum(kN, 5);
    const auto h = synth_holography(a, 1.0, grid, scheme);
    const auto n3 = "holo-round-trip-" + tag;
    out.push_back(guarded(n3, [&] {
      const auto rec = reconstruct_holography(h, {});
      return bounded(n3, max_abs_diff(rec.spectrum.values, a.values), 1e-10);
    }));

    const auto n4 = "mirror-symmetry-" + tag;
    out.push_back(guarded(n4, [&] {
      const auto full = full_range_complex(h, {});
      double worst = 0.0;
      for (int u = 1; u < kN; ++u) {
        worst = std::max(worst, std::abs(std::abs(full[u]) - std::abs(full[kN - u])));
      }
      return bounded(n4, worst, 1e-12);
    }));

    const auto n5 = "oracle-agreement-spectro-" + tag;
    out.push_back(guarded(n5, [&] {
      return bounded(n5, max_abs_diff(solve_spectro(j).spectrum.values, estimate_fft(j, {}).values),
                     1e-8);
    }));

    const auto n6 = "oracle-agreement-holo-" + tag;
    out.push_back(guarded(n6, [&] {
      auto oracle = solve_holo(h, 1.0);
      oracle.band.values[0] = oracle.dc.a0;
      const auto rec = reconstruct_holography(h, {});
      return bounded(n6, max_abs_diff(oracle.band.values, rec.spectrum.values), 1e-8);
    }));
  }

  out.push_back(guarded("fftshift-equals-ramp", [&] {
    const auto a = random_complex_spectrum(kN, 9);
    const auto h = synth_holography(a, 1.0, grid, Scheme::Symmetric);
    const auto ramp = estimate_complex(h, {HoloMethod::FftCorrected});
    const auto shift = estimate_complex(h, {HoloMethod::FftShifted});
    return bounded("fftshift-equals-ramp", max_abs_diff(ramp.values, shift.values), 1e-12);
  }));

  out.push_back(guarded("magnitude-scheme-invariance", [&] {
    const auto x = random_real_spectrum(kN, 13);
    const auto ref = estimate_magnitude(synth_spectroscopy(x, grid, Scheme::NonSymOne), false);
    double worst = 0.0;
    for (const Scheme scheme : kAllSchemes) {
      const auto m = estimate_magnitude(synth_spectroscopy(x, grid, scheme), false);
      worst = std::max(worst, max_abs_diff(m.values, ref.values));
    }
    return bounded("magnitude-scheme-invariance", worst, 1e-12);
  }));

  out.push_back(guarded("csv-round-trip", [&] {
    const auto x = random_real_spectrum(kN, 17, {-1.0, 1.0});
    const auto j = synth_spectroscopy(x, grid, Scheme::Symmetric);
    std::stringstream ss;
    write_interferogram_csv(ss, j);
    const auto back = read_interferogram_csv(ss);
    const bool same = back.values == j.values && back.scheme == j.scheme && back.n == j.n;
    return CheckResult{"csv-round-trip", same, same ? "bit-exact" : "values differ"};
  }));

  return out;
}

}  // namespace holospec
