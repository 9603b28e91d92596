#include "holospec/transform.hpp"

#include <cmath>
#include <numbers>

namespace holospec {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Complex unit_root(long m, int n) noexcept {
  long r = m % n;
  if (r < 0) r += n;
  // Exact values on the axes keep symmetric-scheme ramps and quarter
  // periods free of sin(pi) residue.
  if (r == 0) return {1.0, 0.0};
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3L * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

namespace {

// twiddle[m] = exp(-j 2 pi m / N)
std::vector<Complex> forward_twiddles(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    w[m] = unit_root(-static_cast<long>(m), static_cast<int>(n));
  }
  return w;
}

ComplexSequence direct_dft(std::span<const Complex> y) {
  const std::size_t n = y.size();
  const auto w = forward_twiddles(n);
  ComplexSequence out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      acc += y[i] * w[(i * k) % n];
    }
    out[k] = acc;
  }
  return out;
}

ComplexSequence radix2_dft(std::span<const Complex> y) {
  const std::size_t n = y.size();
  ComplexSequence a(y.begin(), y.end());

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto w = forward_twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = a[start + k + half] * w[k * stride];
        const Complex u = a[start + k];
        a[start + k] = u + t;
        a[start + k + half] = u - t;
      }
    }
  }
  return a;
}

}  // namespace

ComplexSequence dft(std::span<const Complex> y) {
  if (y.empty()) return {};
  return is_power_of_two(y.size()) ? radix2_dft(y) : direct_dft(y);
}

ComplexSequence dft(std::span<const double> y) {
  const auto c = to_complex(y);
  return dft(std::span<const Complex>(c));
}

ComplexSequence idft(std::span<const Complex> y) {
  ComplexSequence conj_in(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) conj_in[i] = std::conj(y[i]);
  auto out = dft(std::span<const Complex>(conj_in));
  const double n = static_cast<double>(y.size());
  for (auto& v : out) v = std::conj(v) / n;
  return out;
}

ComplexSequence idft(std::span<const double> y) {
  const auto c = to_complex(y);
  return idft(std::span<const Complex>(c));
}

ComplexSequence to_complex(std::span<const double> y) {
  return ComplexSequence(y.begin(), y.end());
}

ComplexSequence phase_ramp(int n, Scheme scheme) {
  if (n % 2 != 0) throw Error(Errc::parity, "phase ramp requires even n");
  ComplexSequence ramp(static_cast<std::size_t>(n), Complex{1.0, 0.0});
  switch (scheme) {
    case Scheme::NonSymOne:
      for (int k = 0; k < n; ++k) ramp[static_cast<std::size_t>(k)] = unit_root(k, n);
      break;
    case Scheme::Symmetric:
      for (int k = 0; k < n; ++k) {
        ramp[static_cast<std::size_t>(k)] = Complex{k % 2 == 0 ? 1.0 : -1.0, 0.0};
      }
      break;
    case Scheme::NonSymZero:
      break;
  }
  return ramp;
}

}  // namespace holospec
