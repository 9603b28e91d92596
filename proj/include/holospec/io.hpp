#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "holospec/forward.hpp"
#include "holospec/harness.hpp"

namespace holospec {

/// Shortest form that round-trips: 17 significant digits.
std::string format_double(double v);

// Interferogram CSV:
//   # scheme=<nonsym1|nonsym0|sym>
//   # n=<N>
//   # setup=<spectro|holo>
//   # r=<R>            (holo only)
//   tau,value
//   <tau>,<J(tau)>     one row per sample, tau signed
void write_interferogram_csv(std::ostream& out, const Interferogram& j);
/// Raises Errc::parse (with line numbers) on malformed input and
/// Errc::convention_conflict when the tau column disagrees with the scheme.
Interferogram read_interferogram_csv(std::istream& in, const std::string& source = "<stream>");

void save_interferogram(const std::filesystem::path& path, const Interferogram& j);
Interferogram load_interferogram(const std::filesystem::path& path);

// Spectrum CSV: "u,value" (spectroscopy) or "u,amplitude,phase" (holography).
struct SpectrumTable {
  bool complex = false;
  std::vector<double> values;     ///< real table
  std::vector<double> amplitude;  ///< complex table
  std::vector<double> phase;
};

void write_real_spectrum_csv(std::ostream& out, std::span<const double> values);
void write_complex_spectrum_csv(std::ostream& out, std::span<const Complex> values);
SpectrumTable read_spectrum_csv(std::istream& in, const std::string& source = "<stream>");
SpectrumTable load_spectrum_csv(const std::filesystem::path& path);

// Cube container: flat little-endian float64 data plus a "<path>.hdr" sidecar
// of key=value lines (height, width, n, scheme, setup, r).
std::filesystem::path sidecar_path(const std::filesystem::path& data);
void save_cube(const std::filesystem::path& data, const HyperCube& cube);
HyperCube load_cube(const std::filesystem::path& data);

/// Spectrum volumes use the same container; complex volumes interleave re, im.
void save_volume(const std::filesystem::path& data, const SpectrumVolume<double>& vol);
void save_volume(const std::filesystem::path& data, const SpectrumVolume<Complex>& vol);

void write_f64_le(std::ostream& out, std::span<const double> values);
std::vector<double> read_f64_le(std::istream& in, std::size_t count);

}  // namespace holospec
