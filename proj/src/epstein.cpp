#include "ruelle/epstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"
#include "ruelle/quadrature.hpp"

namespace ruelle {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_right_half(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// Modified Lentz evaluation of the continued fraction for Gamma(a, x).
cplx incomplete_gamma_cf(cplx a, double x) {
  constexpr double tiny = 1e-300;
  cplx b = x + 1.0 - a;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 5000; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return std::exp(a * std::log(x) - x) * h;
  }
  throw Error(ErrorCode::NonconvergentTheta, "incomplete gamma continued fraction did not converge");
}

void check_alpha(const Eigen::Vector2d& alpha) {
  for (int i = 0; i < 2; ++i)
    if (!(alpha(i) >= 0.0 && alpha(i) < 1.0))
      throw Error(ErrorCode::InvalidLattice, "character vector must lie in [0, 1)^2");
  if (alpha(0) == 0.0 && alpha(1) == 0.0)
    throw Error(ErrorCode::InvalidLattice, "trivial character is not cuspidal");
}

long box_extent(double radius, double norm, long max_box) {
  const double m = std::ceil(radius * norm);
  if (!std::isfinite(m) || m > static_cast<double>(max_box))
    throw Error(ErrorCode::NonconvergentTheta, "lattice enumeration box exceeds the maximum size");
  return static_cast<long>(m);
}

}  // namespace

cplx reciprocal_gamma(cplx z) {
  if (z.real() < 0.5) return std::sin(kPi * z) * gamma_right_half(1.0 - z) / kPi;
  return 1.0 / gamma_right_half(z);
}

cplx upper_incomplete_gamma(cplx a, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::IndexOutOfRange, "incomplete gamma needs x > 0");
  const double x0 = std::max(1.0, a.real() + 1.0);
  if (x >= x0) return incomplete_gamma_cf(a, x);
  // int_x^{x0} t^{a-1} e^{-t} dt with t = e^v
  auto f = [&](double v) { return std::exp(a * v - std::exp(v)); };
  const double lo = std::log(x);
  const double hi = std::log(x0);
  const double scale = (hi - lo) * std::max({1.0, std::abs(f(lo)), std::abs(f(hi))});
  return incomplete_gamma_cf(a, x0) + quad::integrate_complex(f, lo, hi, 1e-14 * scale);
}

CharLattice::CharLattice(const Eigen::Matrix2d& basis, const Eigen::Vector2d& alpha)
    : basis_(basis), alpha_(alpha) {
  if (!(std::abs(basis.determinant()) > 1e-14) || !basis.allFinite())
    throw Error(ErrorCode::InvalidLattice, "lattice basis is singular");
  check_alpha(alpha);
}

cplx CharLattice::character(long m1, long m2) const {
  const double phase = alpha_(0) * static_cast<double>(m1) + alpha_(1) * static_cast<double>(m2);
  return std::polar(1.0, 2.0 * kPi * (phase - std::floor(phase)));
}

CharLattice CharLattice::conjugate() const {
  Eigen::Vector2d a;
  for (int i = 0; i < 2; ++i) a(i) = alpha_(i) == 0.0 ? 0.0 : 1.0 - alpha_(i);
  return CharLattice(basis_, a);
}

void CuspData::validate() const {
  for (const auto& l : lattices)
    if (std::abs(l.covolume() - covolume) > 1e-12 * std::max(1.0, covolume))
      throw Error(ErrorCode::InvalidLattice, "cusp covolume " + io::format_double(covolume) +
                                                 " does not match |det basis| = " +
                                                 io::format_double(l.covolume()));
}

cplx epstein_value(const CharLattice& l, cplx s, const ThetaOptions& options) {
  const double R = options.radius;
  if (!(std::exp(-kPi * R * R) < 1e-16))
    throw Error(ErrorCode::NonconvergentTheta,
                "truncation radius " + io::format_double(R) + " leaves a tail above 1e-16");
  const cplx w = s + 1.0;
  const Eigen::Matrix2d& B = l.basis();
  const Eigen::Matrix2d Binv = B.inverse();
  const double V = l.covolume();

  // Direct side: t >= 1 part of the theta integral.
  cplx direct = 0.0;
  const long M1 = box_extent(R, Binv.row(0).norm(), options.max_box);
  const long M2 = box_extent(R, Binv.row(1).norm(), options.max_box);
  for (long m1 = -M1; m1 <= M1; ++m1) {
    for (long m2 = -M2; m2 <= M2; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const Eigen::Vector2d eta = B * Eigen::Vector2d(static_cast<double>(m1), static_cast<double>(m2));
      const double n2 = eta.squaredNorm();
      if (n2 > R * R) continue;
      const double q = kPi * n2;
      direct += l.character(m1, m2) * std::exp(-w * std::log(q)) * upper_incomplete_gamma(w, q);
    }
  }

  // Dual side: Poisson image of the t < 1 part on B^{-T} (k - alpha).
  cplx dual = 0.0;
  const Eigen::Matrix2d BinvT = Binv.transpose();
  const Eigen::Vector2d& a = l.alpha();
  const long K1 = box_extent(R, B.col(0).norm(), options.max_box) + 1;
  const long K2 = box_extent(R, B.col(1).norm(), options.max_box) + 1;
  for (long k1 = -K1; k1 <= K1; ++k1) {
    for (long k2 = -K2; k2 <= K2; ++k2) {
      const Eigen::Vector2d mu = BinvT * Eigen::Vector2d(k1 - a(0), k2 - a(1));
      const double n2 = mu.squaredNorm();
      if (n2 > R * R) continue;
      const double q = kPi * n2;
      dual += std::exp((w - 1.0) * std::log(q)) * upper_incomplete_gamma(1.0 - w, q);
    }
  }
  dual /= V;

  // pi^w / Gamma(w) [direct + dual - 1/w], written so w = 0 stays finite.
  return std::exp(w * std::log(kPi)) * (reciprocal_gamma(w) * (direct + dual) - reciprocal_gamma(w + 1.0));
}

cplx tau_nu(const CuspData& cusp, const ThetaOptions& options) {
  cusp.validate();
  cplx acc = 0.0;
  for (const auto& l : cusp.lattices) acc += epstein_value(l, 0.0, options);
  return acc;
}

cplx delta_constant(const std::vector<CuspData>& cusps, const ThetaOptions& options) {
  cplx acc = 0.0;
  for (const auto& c : cusps) acc += c.covolume * tau_nu(c, options);
  return acc / (2.0 * kPi);
}

std::vector<CuspData> parse_cusps(std::string_view text) {
  std::vector<CuspData> out;
  std::optional<Eigen::Matrix2d> pending;
  std::string rest;
  for (const auto& line : io::significant_lines(text)) {
    const int ln = line.number;
    if (io::strip_key(line.text, "covolume", rest)) {
      if (pending) throw Error(ErrorCode::Parse, "basis without alpha before line " + std::to_string(ln));
      CuspData c;
      c.covolume = io::parse_double(io::trim(rest), ln);
      if (!(c.covolume > 0.0)) throw Error(ErrorCode::InvalidLattice, "covolume must be positive");
      out.push_back(std::move(c));
    } else if (io::strip_key(line.text, "basis", rest)) {
      if (out.empty()) throw Error(ErrorCode::Parse, "'basis:' before any 'covolume:' (line " + std::to_string(ln) + ")");
      if (pending) throw Error(ErrorCode::Parse, "two 'basis:' lines in a row (line " + std::to_string(ln) + ")");
      auto t = io::split_whitespace(rest);
      if (t.size() != 4) throw Error(ErrorCode::Parse, "'basis:' needs four reals (line " + std::to_string(ln) + ")");
      Eigen::Matrix2d b;
      b << io::parse_double(t[0], ln), io::parse_double(t[2], ln), io::parse_double(t[1], ln),
          io::parse_double(t[3], ln);
      pending = b;
    } else if (io::strip_key(line.text, "alpha", rest)) {
      if (!pending) throw Error(ErrorCode::Parse, "'alpha:' without a preceding 'basis:' (line " + std::to_string(ln) + ")");
      auto t = io::split_whitespace(rest);
      if (t.size() != 2) throw Error(ErrorCode::Parse, "'alpha:' needs two reals (line " + std::to_string(ln) + ")");
      out.back().lattices.emplace_back(*pending, Eigen::Vector2d(io::parse_double(t[0], ln), io::parse_double(t[1], ln)));
      pending.reset();
    } else {
      throw Error(ErrorCode::Parse, "unrecognized line " + std::to_string(ln) + ": " + line.text);
    }
  }
  if (pending) throw Error(ErrorCode::Parse, "final 'basis:' has no 'alpha:'");
  for (const auto& c : out) {
    if (c.lattices.empty()) throw Error(ErrorCode::InvalidLattice, "cusp without characters");
    c.validate();
  }
  return out;
}

std::vector<CuspData> load_cusps(const std::string& path) { return parse_cusps(io::read_file(path)); }

}  // namespace ruelle
