#include "ruelle/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

namespace {

void check_index(int n, int j) {
  if (j < 0 || j > 2 * n)
    throw Error(ErrorCode::IndexOutOfRange,
                "index j = " + std::to_string(j) + " outside [0, " + std::to_string(2 * n) + "]");
}

}  // namespace

void LengthSpectrum::validate_and_sort() {
  if (n < 1) throw Error(ErrorCode::InvalidSpectrum, "n must be positive");
  if (r < 1) throw Error(ErrorCode::InvalidSpectrum, "rank must be positive");
  for (const auto& e : entries) {
    if (!(e.l0 > 0.0)) throw Error(ErrorCode::InvalidSpectrum, "primitive length must be positive");
    if (e.k < 1) throw Error(ErrorCode::InvalidSpectrum, "power must be at least 1");
    if (static_cast<int>(e.thetas.size()) != n)
      throw Error(ErrorCode::InvalidSpectrum, "expected " + std::to_string(n) + " holonomy angles");
    if (std::abs(e.trace_rho) > r + 1e-12)
      throw Error(ErrorCode::InvalidSpectrum, "|Tr rho| exceeds the rank");
    if (e.length() > cutoff + 1e-12)
      throw Error(ErrorCode::InvalidSpectrum,
                  "length " + io::format_double(e.length()) + " beyond cutoff " + io::format_double(cutoff));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const GeodesicEntry& a, const GeodesicEntry& b) { return a.length() < b.length(); });
}

LengthSpectrum parse_spectrum(std::string_view text) {
  auto lines = io::significant_lines(text);
  std::size_t i = 0;
  auto is_header = [](const std::string& s) {
    auto f = io::split(s, ',');
    return f.size() == 3 && io::trim(f[0]) == "n" && io::trim(f[1]) == "r" && io::trim(f[2]) == "cutoff";
  };
  if (i < lines.size() && is_header(lines[i].text)) ++i;
  if (i >= lines.size()) throw Error(ErrorCode::Parse, "spectrum file lacks the 'n,r,cutoff' line");

  LengthSpectrum s;
  {
    auto f = io::split(lines[i].text, ',');
    if (f.size() != 3) throw Error(ErrorCode::Parse, "expected 'n,r,cutoff' on line " + std::to_string(lines[i].number));
    s.n = static_cast<int>(io::parse_int(io::trim(f[0]), lines[i].number));
    s.r = static_cast<int>(io::parse_int(io::trim(f[1]), lines[i].number));
    s.cutoff = io::parse_double(io::trim(f[2]), lines[i].number);
    ++i;
  }
  if (s.n < 1 || s.r < 1) throw Error(ErrorCode::InvalidSpectrum, "n and r must be positive");

  const std::size_t width = static_cast<std::size_t>(s.n) + 4;
  for (; i < lines.size(); ++i) {
    auto f = io::split(lines[i].text, ',');
    const int ln = lines[i].number;
    if (f.size() != width)
      throw Error(ErrorCode::Parse, "expected " + std::to_string(width) + " fields on line " + std::to_string(ln));
    GeodesicEntry e;
    e.l0 = io::parse_double(io::trim(f[0]), ln);
    e.k = static_cast<int>(io::parse_int(io::trim(f[1]), ln));
    for (int a = 0; a < s.n; ++a) e.thetas.push_back(io::parse_double(io::trim(f[2 + a]), ln));
    e.trace_rho = cplx(io::parse_double(io::trim(f[2 + s.n]), ln), io::parse_double(io::trim(f[3 + s.n]), ln));
    s.entries.push_back(std::move(e));
  }
  s.validate_and_sort();
  return s;
}

LengthSpectrum load_spectrum(const std::string& path) { return parse_spectrum(io::read_file(path)); }

std::string serialize(const LengthSpectrum& s) {
  std::string out = "n,r,cutoff\n" + std::to_string(s.n) + "," + std::to_string(s.r) + "," +
                    io::format_double(s.cutoff) + "\n";
  for (const auto& e : s.entries) {
    out += io::format_double(e.l0) + "," + std::to_string(e.k);
    for (double th : e.thetas) out += "," + io::format_double(th);
    out += "," + io::format_double(e.trace_rho.real()) + "," + io::format_double(e.trace_rho.imag()) + "\n";
  }
  return out;
}

double sigma_trace(const std::vector<double>& thetas, int j) {
  const int n = static_cast<int>(thetas.size());
  check_index(n, j);
  // Coefficients of prod_i (1 + 2 cos(theta_i) x + x^2).
  std::vector<double> c{1.0};
  for (double th : thetas) {
    std::vector<double> next(c.size() + 2, 0.0);
    const double b = 2.0 * std::cos(th);
    for (std::size_t a = 0; a < c.size(); ++a) {
      next[a] += c[a];
      next[a + 1] += b * c[a];
      next[a + 2] += c[a];
    }
    c = std::move(next);
  }
  return c[j];
}

double delta_gamma(const GeodesicEntry& e) {
  const double q = std::exp(-e.length());
  double d = 1.0;
  for (double th : e.thetas) d *= 1.0 - 2.0 * q * std::cos(th) + q * q;
  return d;
}

cplx weight_alpha(const GeodesicEntry& e, int j) {
  return e.trace_rho * sigma_trace(e.thetas, j) * e.l0 / delta_gamma(e);
}

cplx s_j(const LengthSpectrum& spec, int j, cplx z) {
  check_index(spec.n, j);
  cplx acc = 0.0;
  for (const auto& e : spec.entries) acc += weight_alpha(e, j) * std::exp(-z * e.length());
  return acc;
}

cplx log_S_j(const LengthSpectrum& spec, int j, cplx z) {
  check_index(spec.n, j);
  cplx acc = 0.0;
  for (const auto& e : spec.entries) acc -= weight_alpha(e, j) / e.length() * std::exp(-z * e.length());
  return acc;
}

cplx hyperbolic_heat_term(const LengthSpectrum& spec, int j, double t) {
  check_index(spec.n, j);
  const double c = std::abs(spec.n - j);
  cplx acc = 0.0;
  for (const auto& e : spec.entries) {
    const double l = e.length();
    acc += weight_alpha(e, j) * std::exp(-(l * l / (4.0 * t) + t * c * c + spec.n * l));
  }
  return acc / std::sqrt(4.0 * std::numbers::pi * t);
}

LengthSpectrum power_closure(int n, const std::vector<PrimitiveGeodesic>& primitives, int max_power) {
  LengthSpectrum s;
  s.n = n;
  s.r = 1;
  for (const auto& p : primitives) {
    for (int k = 1; k <= max_power; ++k) {
      GeodesicEntry e;
      e.l0 = p.l0;
      e.k = k;
      for (double th : p.thetas) e.thetas.push_back(k * th);
      e.trace_rho = std::pow(p.xi, k);
      s.cutoff = std::max(s.cutoff, e.length());
      s.entries.push_back(std::move(e));
    }
  }
  s.validate_and_sort();
  return s;
}

}  // namespace ruelle
