#include "holospec/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "holospec/errors.hpp"

namespace holospec {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw Error(Errc::parse, source + ":" + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view text, const std::string& source, std::size_t line) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc{} || ptr != last) {
    parse_fail(source, line, "not a number: '" + t + "'");
  }
  return v;
}

long parse_integer(std::string_view text, const std::string& source, std::size_t line) {
  const std::string t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    parse_fail(source, line, "not an integer: '" + t + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(trim(f));
  return fields;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error(Errc::parse, "cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error(Errc::parse, "cannot open " + path.string());
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

void write_interferogram_csv(std::ostream& out, const Interferogram& j) {
  validate(j);
  out << "# scheme=" << to_string(j.scheme) << '\n';
  out << "# n=" << j.n << '\n';
  out << "# setup=" << (j.setup == Setup::Holography ? "holo" : "spectro") << '\n';
  if (j.setup == Setup::Holography) out << "# r=" << format_double(j.reference) << '\n';
  out << "tau,value\n";
  for (std::size_t i = 0; i < j.values.size(); ++i) {
    out << j.tau_at(i) << ',' << format_double(j.values[i]) << '\n';
  }
}

Interferogram read_interferogram_csv(std::istream& in, const std::string& source) {
  std::map<std::string, std::pair<std::string, std::size_t>> header;
  std::vector<std::pair<long, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool seen_rows = false;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (seen_rows) parse_fail(source, lineno, "header line after data rows");
      const std::string body = trim(std::string_view(t).substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      header[trim(body.substr(0, eq))] = {trim(body.substr(eq + 1)), lineno};
      continue;
    }
    const auto fields = split_csv(t);
    if (!seen_rows && fields.size() == 2 && fields[0] == "tau") {
      seen_rows = true;
      continue;
    }
    seen_rows = true;
    if (fields.size() != 2) parse_fail(source, lineno, "expected 'tau,value'");
    rows.emplace_back(parse_integer(fields[0], source, lineno),
                      parse_number(fields[1], source, lineno));
  }

  auto need = [&](const char* key) -> const std::pair<std::string, std::size_t>& {
    const auto it = header.find(key);
    if (it == header.end()) parse_fail(source, lineno, std::string("missing header '# ") + key + "='");
    return it->second;
  };

  Interferogram j;
  const auto& [scheme_text, scheme_line] = need("scheme");
  const auto scheme = parse_scheme(scheme_text);
  if (!scheme) parse_fail(source, scheme_line, "unknown scheme '" + scheme_text + "'");
  j.scheme = *scheme;

  const auto& [n_text, n_line] = need("n");
  const long n = parse_integer(n_text, source, n_line);
  if (n < 4 || n % 2 != 0) parse_fail(source, n_line, "n must be even and >= 4");
  j.n = static_cast<int>(n);

  const auto& [setup_text, setup_line] = need("setup");
  if (setup_text == "spectro") {
    j.setup = Setup::Spectroscopy;
    if (header.count("r")) parse_fail(source, header["r"].second, "r given for a spectroscopy file");
  } else if (setup_text == "holo") {
    j.setup = Setup::Holography;
    const auto& [r_text, r_line] = need("r");
    j.reference = parse_number(r_text, source, r_line);
    if (!(j.reference > 0.0)) parse_fail(source, r_line, "r must be positive");
  } else {
    parse_fail(source, setup_line, "unknown setup '" + setup_text + "'");
  }

  if (rows.size() != static_cast<std::size_t>(n)) {
    parse_fail(source, lineno, "expected " + std::to_string(n) + " rows, found " +
                                   std::to_string(rows.size()));
  }
  j.values.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != j.tau_at(i)) {
      throw Error(Errc::convention_conflict,
                  source + ": row " + std::to_string(i + 1) + " has tau=" +
                      std::to_string(rows[i].first) + " but scheme " +
                      std::string(to_string(j.scheme)) + " expects tau=" +
                      std::to_string(j.tau_at(i)));
    }
    j.values[i] = rows[i].second;
  }
  return j;
}

void save_interferogram(const std::filesystem::path& path, const Interferogram& j) {
  auto out = open_out(path);
  write_interferogram_csv(out, j);
}

Interferogram load_interferogram(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_interferogram_csv(in, path.string());
}

// ---------------------------------------------------------------------------

void write_real_spectrum_csv(std::ostream& out, std::span<const double> values) {
  out << "u,value\n";
  for (std::size_t u = 0; u < values.size(); ++u) out << u << ',' << format_double(values[u]) << '\n';
}

void write_complex_spectrum_csv(std::ostream& out, std::span<const Complex> values) {
  out << "u,amplitude,phase\n";
  for (std::size_t u = 0; u < values.size(); ++u) {
    out << u << ',' << format_double(std::abs(values[u])) << ','
        << format_double(std::arg(values[u])) << '\n';
  }
}

SpectrumTable read_spectrum_csv(std::istream& in, const std::string& source) {
  SpectrumTable table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t expected_u = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split_csv(t);
    if (!have_header) {
      if (fields == std::vector<std::string>{"u", "value"}) {
        table.complex = false;
      } else if (fields == std::vector<std::string>{"u", "amplitude", "phase"}) {
        table.complex = true;
      } else {
        parse_fail(source, lineno, "expected header 'u,value' or 'u,amplitude,phase'");
      }
      have_header = true;
      continue;
    }
    const std::size_t width = table.complex ? 3 : 2;
    if (fields.size() != width) {
      parse_fail(source, lineno, "expected " + std::to_string(width) + " columns");
    }
    const long u = parse_integer(fields[0], source, lineno);
    if (u != static_cast<long>(expected_u)) {
      parse_fail(source, lineno, "u must run 0,1,2,... (got " + std::to_string(u) + ")");
    }
    ++expected_u;
    if (table.complex) {
      table.amplitude.push_back(parse_number(fields[1], source, lineno));
      table.phase.push_back(parse_number(fields[2], source, lineno));
    } else {
      table.values.push_back(parse_number(fields[1], source, lineno));
    }
  }
  if (!have_header) parse_fail(source, lineno, "missing spectrum header");
  if (expected_u == 0) parse_fail(source, lineno, "spectrum has no rows");
  return table;
}

SpectrumTable load_spectrum_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_spectrum_csv(in, path.string());
}

// ---------------------------------------------------------------------------

void write_f64_le(std::ostream& out, std::span<const double> values) {
  for (const double v : values) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) {
      bytes[b] = static_cast<unsigned char>(bits & 0xFFu);
      bits >>= 8;
    }
    out.write(reinterpret_cast<const char*>(bytes), 8);
  }
}

std::vector<double> read_f64_le(std::istream& in, std::size_t count) {
  std::vector<double> out(count);
  unsigned char bytes[8];
  for (std::size_t i = 0; i < count; ++i) {
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
      throw Error(Errc::parse, "binary data ends after " + std::to_string(i) + " of " +
                                   std::to_string(count) + " values");
    }
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | bytes[b];
    out[i] = std::bit_cast<double>(bits);
  }
  return out;
}

std::filesystem::path sidecar_path(const std::filesystem::path& data) {
  auto p = data;
  p += ".hdr";
  return p;
}

void save_cube(const std::filesystem::path& data, const HyperCube& cube) {
  validate(cube);
  {
    auto out = open_out(data, std::ios::out | std::ios::binary);
    write_f64_le(out, cube.frames);
  }
  auto hdr = open_out(sidecar_path(data));
  hdr << "height=" << cube.height << '\n'
      << "width=" << cube.width << '\n'
      << "n=" << cube.n << '\n'
      << "scheme=" << to_string(cube.scheme) << '\n'
      << "setup=" << (cube.setup == Setup::Holography ? "holo" : "spectro") << '\n';
  if (cube.setup == Setup::Holography) hdr << "r=" << format_double(cube.reference) << '\n';
}

HyperCube load_cube(const std::filesystem::path& data) {
  const auto hdr_path = sidecar_path(data);
  auto hdr = open_in(hdr_path);
  const std::string source = hdr_path.string();
  std::map<std::string, std::pair<std::string, std::size_t>> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(hdr, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) parse_fail(source, lineno, "expected key=value");
    kv[trim(t.substr(0, eq))] = {trim(t.substr(eq + 1)), lineno};
  }
  auto need = [&](const char* key) -> const std::pair<std::string, std::size_t>& {
    const auto it = kv.find(key);
    if (it == kv.end()) parse_fail(source, lineno, std::string("missing key '") + key + "'");
    return it->second;
  };

  HyperCube cube;
  cube.height = static_cast<int>(parse_integer(need("height").first, source, need("height").second));
  cube.width = static_cast<int>(parse_integer(need("width").first, source, need("width").second));
  cube.n = static_cast<int>(parse_integer(need("n").first, source, need("n").second));
  const auto scheme = parse_scheme(need("scheme").first);
  if (!scheme) parse_fail(source, need("scheme").second, "unknown scheme");
  cube.scheme = *scheme;
  const auto& setup = need("setup");
  if (setup.first == "spectro") {
    cube.setup = Setup::Spectroscopy;
  } else if (setup.first == "holo") {
    cube.setup = Setup::Holography;
    cube.reference = parse_number(need("r").first, source, need("r").second);
  } else {
    parse_fail(source, setup.second, "unknown setup '" + setup.first + "'");
  }
  if (cube.height <= 0 || cube.width <= 0 || cube.n < 4 || cube.n % 2 != 0) {
    throw Error(Errc::shape, source + ": invalid cube dimensions");
  }

  auto in = open_in(data, std::ios::in | std::ios::binary);
  const auto count = static_cast<std::size_t>(cube.height) * cube.width * cube.n;
  cube.frames = read_f64_le(in, count);
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(Errc::shape, data.string() + ": more data than H*W*N values");
  }
  return cube;
}

namespace {

void write_volume_header(const std::filesystem::path& data, int h, int w, int bins,
                         const char* kind) {
  auto hdr = open_out(sidecar_path(data));
  hdr << "height=" << h << '\n' << "width=" << w << '\n' << "bins=" << bins << '\n'
      << "kind=" << kind << '\n';
}

}  // namespace

void save_volume(const std::filesystem::path& data, const SpectrumVolume<double>& vol) {
  auto out = open_out(data, std::ios::out | std::ios::binary);
  write_f64_le(out, vol.values);
  write_volume_header(data, vol.height, vol.width, vol.bins, "real");
}

void save_volume(const std::filesystem::path& data, const SpectrumVolume<Complex>& vol) {
  std::vector<double> flat;
  flat.reserve(vol.values.size() * 2);
  for (const auto& c : vol.values) {
    flat.push_back(c.real());
    flat.push_back(c.imag());
  }
  auto out = open_out(data, std::ios::out | std::ios::binary);
  write_f64_le(out, flat);
  write_volume_header(data, vol.height, vol.width, vol.bins, "complex-interleaved");
}

}  // namespace holospec
