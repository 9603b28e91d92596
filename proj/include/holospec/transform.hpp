#pragma once

#include <complex>
#include <span>
#include <vector>

#include "holospec/errors.hpp"
#include "holospec/grid.hpp"

namespace holospec {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

// 0-based discrete Fourier pair:
//   dft : Y[k] = sum_n y[n] exp(-j 2 pi n k / N)
//   idft: y[n] = (1/N) sum_k Y[k] exp(+j 2 pi n k / N)
// Power-of-two lengths take an iterative radix-2 path, other lengths a
// direct O(N^2) sum. Neither mutates its input.

ComplexSequence dft(std::span<const Complex> y);
ComplexSequence dft(std::span<const double> y);

/// Computed as conj(dft(conj(y))) / N, so for real y the outputs of dft and
/// idft are exact conjugates of each other up to the 1/N scale.
ComplexSequence idft(std::span<const Complex> y);
ComplexSequence idft(std::span<const double> y);

ComplexSequence to_complex(std::span<const double> y);

bool is_power_of_two(std::size_t n) noexcept;

/// Half-swap: output = second half ++ first half. Even lengths only.
template <class T>
std::vector<T> fft_shift(std::span<const T> y) {
  if (y.size() % 2 != 0) {
    throw Error(Errc::parity, "fft_shift requires an even-length sequence");
  }
  const std::size_t half = y.size() / 2;
  std::vector<T> out;
  out.reserve(y.size());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(half), y.end());
  out.insert(out.end(), y.begin(), y.begin() + static_cast<std::ptrdiff_t>(half));
  return out;
}

/// Per-bin factor that maps idft of the stored samples onto the scheme's
/// tau set: exp(+j 2 pi k / N) for NonSymOne, (-1)^k for Symmetric, 1 for
/// NonSymZero.
ComplexSequence phase_ramp(int n, Scheme scheme);

/// exp(j 2 pi m / N) with the integer product reduced modulo N first.
Complex unit_root(long m, int n) noexcept;

}  // namespace holospec
