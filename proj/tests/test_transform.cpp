#include <gtest/gtest.h>

#include "holospec/oracle.hpp"
#include "holospec/transform.hpp"
#include "reference.hpp"

using namespace holospec;

namespace {

ComplexSequence random_complex(std::size_t n, std::uint64_t seed) {
  const auto re = ref::uniform(n, seed, -1, 1);
  const auto im = ref::uniform(n, seed + 1000, -1, 1);
  ComplexSequence y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = {re[i], im[i]};
  return y;
}

}  // namespace

TEST(Dft, ImpulseAndConstant) {
  const ComplexSequence impulse{1, 0, 0, 0}, ones{1, 1, 1, 1}, four{4, 0, 0, 0};
  EXPECT_LT(ref::max_abs_diff(dft(impulse), ones), 1e-15);
  EXPECT_LT(ref::max_abs_diff(dft(ones), four), 1e-15);
  EXPECT_LT(ref::max_abs_diff(idft(four), ones), 1e-15);
  EXPECT_LT(ref::max_abs_diff(idft(ones), impulse), 1e-15);
}

TEST(Dft, MatchesDirectSummation) {
  for (const std::size_t n : {1u, 2u, 6u, 8u, 12u, 16u, 40u, 64u, 128u}) {
    const auto y = random_complex(n, n);
    EXPECT_LT(ref::max_abs_diff(dft(y), ref::naive_dft(y)), 1e-12) << "n=" << n;
  }
}

TEST(Dft, RealOverloadMatchesComplex) {
  const auto x = ref::uniform(40, 9, -2, 2);
  EXPECT_EQ(dft(std::span<const double>(x)), dft(to_complex(x)));
  EXPECT_EQ(idft(std::span<const double>(x)), idft(to_complex(x)));
}

TEST(Dft, RoundTrip) {
  for (const std::size_t n : {4u, 10u, 16u, 40u, 64u, 256u}) {
    const auto y = random_complex(n, 77 + n);
    double scale = 0.0;
    for (const auto& c : y) scale = std::max(scale, std::abs(c));
    EXPECT_LE(ref::max_abs_diff(idft(dft(y)), y), 1e-12 * scale);
    EXPECT_LE(ref::max_abs_diff(dft(idft(y)), y), 1e-12 * scale);
  }
}

TEST(Idft, ConjugateSymmetryOfRealInput) {
  for (const std::size_t n : {16u, 40u}) {
    const auto y = ref::uniform(n, 5, -1, 1);
    const auto out = idft(std::span<const double>(y));
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_LT(std::abs(out[k] - std::conj(out[(n - k) % n])), 1e-12);
    }
  }
}

TEST(Dft, MagnitudeIdentityForRealInput) {
  for (const std::size_t n : {8u, 16u, 40u, 64u}) {
    const auto y = ref::uniform(n, 3 * n, -1, 1);
    const auto f = dft(std::span<const double>(y));
    const auto b = idft(std::span<const double>(y));
    for (std::size_t k = 0; k < n; ++k) {
      // dft(y)/N and idft(y) are exact conjugates: equal up to one rounding of the 1/N scale.
      EXPECT_EQ(std::abs(f[k] / static_cast<double>(n)), std::abs(b[k]));
      EXPECT_NEAR(std::abs(f[k]) / static_cast<double>(n), std::abs(b[k]),
                  1e-15 * std::max(1.0, std::abs(b[k])));
    }
  }
}

TEST(FftShift, Definition) {
  const std::vector<char> y{'a', 'b', 'c', 'd'};
  EXPECT_EQ(fft_shift<char>(y), (std::vector<char>{'c', 'd', 'a', 'b'}));
  const auto x = random_complex(10, 4);
  const auto once = fft_shift<Complex>(x);
  EXPECT_EQ(fft_shift<Complex>(once), x);
}

TEST(FftShift, OddLengthIsParityError) {
  const std::vector<double> y{1, 2, 3};
  try {
    fft_shift<double>(y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parity);
  }
}

TEST(FftShift, PreservesSpectralMagnitude) {
  const auto y = ref::uniform(40, 12, -1, 1);
  const auto shifted = fft_shift<double>(y);
  const auto a = ref::naive_dft(to_complex(y));
  const auto b = ref::naive_dft(to_complex(shifted));
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(std::abs(a[k]), std::abs(b[k]), 1e-12);
}

TEST(PhaseRamp, FrozenValues) {
  const auto sym = phase_ramp(4, Scheme::Symmetric);
  const ComplexSequence alt{1, -1, 1, -1};
  EXPECT_EQ(sym, alt);
  EXPECT_EQ(phase_ramp(4, Scheme::NonSymZero), (ComplexSequence{1, 1, 1, 1}));
  const auto one = phase_ramp(8, Scheme::NonSymOne);
  EXPECT_NEAR(one[1].real(), 0.70711, 1e-5);
  EXPECT_NEAR(one[1].imag(), 0.70711, 1e-5);
  EXPECT_NEAR(std::abs(one[1] - std::polar(1.0, ref::kPi / 4)), 0.0, 1e-15);
}

TEST(PhaseRamp, UnitModulusAndConjugatePairs) {
  for (const Scheme s : kAllSchemes) {
    const auto r = phase_ramp(40, s);
    for (std::size_t k = 0; k < r.size(); ++k) {
      EXPECT_NEAR(std::abs(r[k]), 1.0, 1e-15);
      EXPECT_LT(std::abs(r[(40 - k) % 40] - std::conj(r[k])), 1e-15);
    }
  }
}

TEST(UnitRoot, ReducesExactly) {
  EXPECT_EQ(unit_root(0, 8), Complex(1, 0));
  EXPECT_EQ(unit_root(2, 8), Complex(0, 1));
  EXPECT_EQ(unit_root(4, 8), Complex(-1, 0));
  EXPECT_EQ(unit_root(-2, 8), Complex(0, -1));
  EXPECT_EQ(unit_root(8 * 1000 + 3, 8), unit_root(3, 8));
  EXPECT_EQ(unit_root(-5, 8), unit_root(3, 8));
}

TEST(PowerOfTwo, Predicate) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(40));
}
