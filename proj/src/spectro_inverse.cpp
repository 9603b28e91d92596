#include "holospec/spectro_inverse.hpp"

#include <cmath>
#include <numeric>

#include "holospec/errors.hpp"

namespace holospec {

std::string label(const SpectroEstimatorVariant& variant) {
  std::string out;
  switch (variant.method) {
    case SpectroMethod::DirectCosine: return "direct";
    case SpectroMethod::FftCorrected: out = "fft"; break;
    case SpectroMethod::FftUncorrected: out = "fft-uncorrected"; break;
    case SpectroMethod::Magnitude: out = "magnitude"; break;
  }
  if (variant.method == SpectroMethod::FftCorrected &&
      variant.symmetric_form == SymmetricForm::FftShift) {
    out += "-shift";
  }
  if (variant.forward_fft) out += "-fwd";
  return out;
}

namespace {

void require_spectroscopy(const Interferogram& j) {
  validate(j);
  if (j.setup != Setup::Spectroscopy) {
    throw Error(Errc::wrong_setup, "spectroscopy estimator applied to a holography interferogram");
  }
}

// (1/N) sum_tau J(tau) cos(2 pi tau u / N), literally.
double cosine_sum(const Interferogram& j, long u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < j.values.size(); ++i) {
    acc += j.values[i] * unit_root(j.tau_at(i) * u, j.n).real();
  }
  return acc / j.n;
}

// The complex sequence whose real part is the estimator, all N bins.
ComplexSequence transformed(const Interferogram& j, const SpectroEstimatorVariant& v) {
  const bool correct = v.method == SpectroMethod::FftCorrected;
  const double n = static_cast<double>(j.n);

  if (correct && v.symmetric_form == SymmetricForm::FftShift) {
    if (j.scheme != Scheme::Symmetric) {
      throw Error(Errc::variant, "fft-shift form applies to symmetric sampling only");
    }
    const auto shifted = fft_shift(std::span<const double>(j.values));
    if (v.forward_fft) {
      auto y = dft(std::span<const double>(shifted));
      for (auto& c : y) c = std::conj(c / n);
      return y;
    }
    return idft(std::span<const double>(shifted));
  }

  ComplexSequence y;
  if (v.forward_fft) {
    // For real J, idft(J) = conj(dft(J)) / N.
    y = dft(std::span<const double>(j.values));
    for (auto& c : y) c = std::conj(c / n);
  } else {
    y = idft(std::span<const double>(j.values));
  }
  if (correct) {
    const auto ramp = phase_ramp(j.n, j.scheme);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] *= ramp[k];
  }
  return y;
}

RealSpectrum assemble(const Interferogram& j, std::vector<double> full) {
  RealSpectrum x;
  x.n = j.n;
  x.values.assign(full.begin(), full.begin() + j.n / 2);
  x.values[0] = estimate_zero_bin(j, std::span<const double>(x.values).subspan(1));
  return x;
}

}  // namespace

double estimate_zero_bin(const Interferogram& j, std::span<const double> tail) {
  validate(j);
  if (tail.size() != static_cast<std::size_t>(j.n / 2 - 1)) {
    throw Error(Errc::shape, "zero-bin tail must hold N/2-1 values");
  }
  const double sum_j = std::accumulate(j.values.begin(), j.values.end(), 0.0);
  const double sum_tail = std::accumulate(tail.begin(), tail.end(), 0.0);
  return sum_j / (4.0 * j.n) - 0.5 * sum_tail;
}

RealSpectrum estimate_direct(const Interferogram& j) {
  require_spectroscopy(j);
  std::vector<double> full(static_cast<std::size_t>(j.n / 2));
  for (int u = 1; u < j.n / 2; ++u) full[static_cast<std::size_t>(u)] = cosine_sum(j, u);
  return assemble(j, std::move(full));
}

RealSpectrum estimate_fft(const Interferogram& j, const SpectroEstimatorVariant& variant) {
  require_spectroscopy(j);
  if (variant.method != SpectroMethod::FftCorrected &&
      variant.method != SpectroMethod::FftUncorrected) {
    throw Error(Errc::variant, "estimate_fft takes a corrected or uncorrected FFT variant");
  }
  const auto y = transformed(j, variant);
  std::vector<double> full(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) full[k] = y[k].real();
  return assemble(j, std::move(full));
}

RealSpectrum estimate_magnitude(const Interferogram& j, bool forward_fft, TruthSign truth) {
  require_spectroscopy(j);
  if (truth != TruthSign::NonNegative) {
    throw Error(Errc::sign_indefinite,
                "magnitude estimator needs a non-negative truth; use a corrected FFT variant");
  }
  const double n = static_cast<double>(j.n);
  std::vector<double> full(static_cast<std::size_t>(j.n));
  if (forward_fft) {
    const auto y = dft(std::span<const double>(j.values));
    for (std::size_t k = 0; k < y.size(); ++k) full[k] = std::abs(y[k] / n);
  } else {
    const auto y = idft(std::span<const double>(j.values));
    for (std::size_t k = 0; k < y.size(); ++k) full[k] = std::abs(y[k]);
  }
  return assemble(j, std::move(full));
}

RealSpectrum estimate_spectrum(const Interferogram& j,
                               const SpectroEstimatorVariant& variant) {
  switch (variant.method) {
    case SpectroMethod::DirectCosine: return estimate_direct(j);
    case SpectroMethod::Magnitude:
      return estimate_magnitude(j, variant.forward_fft, variant.truth);
    case SpectroMethod::FftCorrected:
    case SpectroMethod::FftUncorrected: return estimate_fft(j, variant);
  }
  throw Error(Errc::variant, "unknown spectroscopy method");
}

std::vector<double> full_range_estimate(const Interferogram& j,
                                        const SpectroEstimatorVariant& variant) {
  require_spectroscopy(j);
  const auto n = static_cast<std::size_t>(j.n);
  std::vector<double> out(n);

  switch (variant.method) {
    case SpectroMethod::DirectCosine:
      for (std::size_t u = 1; u < n; ++u) out[u] = cosine_sum(j, static_cast<long>(u));
      break;
    case SpectroMethod::Magnitude: {
      if (variant.truth != TruthSign::NonNegative) {
        throw Error(Errc::sign_indefinite, "magnitude estimator needs a non-negative truth");
      }
      const auto y = idft(std::span<const double>(j.values));
      for (std::size_t u = 1; u < n; ++u) out[u] = std::abs(y[u]);
      break;
    }
    case SpectroMethod::FftCorrected:
    case SpectroMethod::FftUncorrected: {
      const auto y = transformed(j, variant);
      for (std::size_t u = 1; u < n; ++u) out[u] = y[u].real();
      break;
    }
  }
  out[0] = estimate_zero_bin(j, std::span<const double>(out).subspan(1, n / 2 - 1));
  return out;
}

}  // namespace holospec
