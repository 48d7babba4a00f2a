#include "ruelle/volume.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

cplx dilog_series(cplx z) {
  cplx acc = 0.0;
  cplx power = z;
  for (int n = 1; n < 200; ++n) {
    const cplx term = power / static_cast<double>(n * n);
    acc += term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(acc))) break;
    power *= z;
  }
  return acc;
}

// Li_2(z) = sum_n B_n u^{n+1} / (n+1)!, u = -log(1 - z), valid for |u| < 2 pi.
cplx dilog_bernoulli(cplx z) {
  const cplx u = -std::log(1.0 - z);
  const cplx u2 = u * u;
  cplx acc = u - u2 / 4.0;
  cplx power = u;  // u^{2k+1} / (2k+1)!
  for (int k = 1; k < 60; ++k) {
    power *= u2 / static_cast<double>((2 * k) * (2 * k + 1));
    const cplx term = boost::math::bernoulli_b2n<double>(k) * power;
    acc += term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(acc))) break;
  }
  return acc;
}

}  // namespace

cplx dilog(cplx z) {
  if (z == cplx(0.0)) return 0.0;
  if (z == cplx(1.0)) return kZeta2;
  if (std::abs(z) > 1.0) {
    const cplx l = std::log(-z);
    return -kZeta2 - 0.5 * l * l - dilog(1.0 / z);
  }
  if (z.real() > 0.5) return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
  if (std::abs(z) <= 0.5) return dilog_series(z);
  return dilog_bernoulli(z);
}

bool is_bloch_wigner_singular(cplx z) { return z == cplx(0.0) || z == cplx(1.0); }

double bloch_wigner(cplx z) {
  if (is_bloch_wigner_singular(z)) return 0.0;
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

TetraVolume tetra_volume(cplx z) {
  if (z.imag() < 0.0)
    throw Error(ErrorCode::InvalidShape, "shape " + io::format_complex(z) + " is negatively oriented");
  if (z.imag() == 0.0) return {0.0, true};
  return {bloch_wigner(z), false};
}

double manifold_volume(const std::vector<cplx>& shapes) {
  if (shapes.empty()) throw Error(ErrorCode::InvalidShape, "shape list is empty");
  double acc = 0.0;
  for (const auto& z : shapes) {
    if (!(z.imag() > 0.0))
      throw Error(ErrorCode::InvalidShape, "shape " + io::format_complex(z) + " needs Im z > 0");
    acc += tetra_volume(z).value;
  }
  return acc;
}

std::vector<cplx> parse_shapes(std::string_view text) {
  std::vector<cplx> out;
  for (const auto& part : io::split(text, ';')) {
    const auto t = io::trim(part);
    if (t.empty()) continue;
    out.push_back(io::parse_complex_pair(t));
  }
  return out;
}

double l2_torsion_log(int r, double vol) {
  if (r < 1) throw Error(ErrorCode::IndexOutOfRange, "rank must be positive");
  if (vol < 0.0) throw Error(ErrorCode::InvalidShape, "volume must be nonnegative");
  return to_double(l2_torsion_coefficient(r)) * vol / kPi;
}

Rational l2_torsion_coefficient(int r) { return Rational(r, 6); }

}  // namespace ruelle
