#include "ruelle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ruelle/errors.hpp"
#include "ruelle/quadrature.hpp"
#include "ruelle/traceformula.hpp"

namespace ruelle {

namespace {

constexpr double kPi = std::numbers::pi;

void require_even(const RatPoly& P) {
  if (!P.is_even()) throw Error(ErrorCode::ShapeMismatch, "polynomial must be even");
}

}  // namespace

SyntheticSpectrum::SyntheticSpectrum(std::vector<std::vector<double>> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  for (auto& ev : eigenvalues_) {
    for (double x : ev)
      if (!(x >= 0.0)) throw Error(ErrorCode::InvalidSpectrum, "eigenvalues must be nonnegative");
    std::sort(ev.begin(), ev.end());
  }
}

const std::vector<double>& SyntheticSpectrum::eigenvalues(int p) const {
  if (p < 0 || p >= num_degrees())
    throw Error(ErrorCode::IndexOutOfRange, "degree " + std::to_string(p) + " out of range");
  return eigenvalues_[p];
}

int SyntheticSpectrum::kernel_dim(int p) const {
  const auto& ev = eigenvalues(p);
  return static_cast<int>(std::count(ev.begin(), ev.end(), 0.0));
}

double SyntheticSpectrum::log_det_prime(int p) const {
  double acc = 0.0;
  for (double x : eigenvalues(p))
    if (x > 0.0) acc += std::log(x);
  return acc;
}

PiTagged mellin_poly_gaussian_exact(const RatPoly& P, const Rational& c) {
  require_even(P);
  // -2 pi sum_k p_{2k} (-1)^k c^{2k+1} / (2k+1)
  Rational acc = 0;
  Rational c_pow = c;
  for (int k = 0; 2 * k <= P.degree(); ++k) {
    const Rational term = P.coeff(2 * k) * c_pow / (2 * k + 1);
    acc += k % 2 == 0 ? Rational(-2 * term) : Rational(2 * term);
    c_pow *= c * c;
  }
  return {RatPoly(acc), 1};
}

double mellin_poly_gaussian(const RatPoly& P, double c) {
  require_even(P);
  double acc = 0.0;
  for (int k = 0; 2 * k <= P.degree(); ++k) {
    const double term = to_double(P.coeff(2 * k)) * std::pow(c, 2 * k + 1) / (2 * k + 1);
    acc += k % 2 == 0 ? -term : term;
  }
  return 2.0 * kPi * acc;
}

double mellin_poly_gaussian_quadrature(const RatPoly& P, double c) {
  require_even(P);
  if (!(c > 0.0)) throw Error(ErrorCode::IndexOutOfRange, "c must be positive");
  double acc = 0.0;
  for (int k = 0; 2 * k <= P.degree(); ++k) {
    const double p2k = to_double(P.coeff(2 * k));
    if (p2k == 0.0) continue;
    const double ck = std::sqrt(kPi) * to_double(Rational(double_factorial_odd(k))) / std::ldexp(1.0, k);
    // int t^{-1} e^{-t c^2} t^{-1/2-k} dt, continued
    acc += p2k * ck * regularized_power_integral(-1.5 - k, c * c, k + 1);
  }
  return acc;
}

double heat_trace(const SyntheticSpectrum& spec, int p, double t) {
  double acc = 0.0;
  for (double x : spec.eigenvalues(p)) acc += std::exp(-t * x);
  return acc;
}

double heat_trace_laplace_quadrature(const SyntheticSpectrum& spec, int p, double c, double z) {
  const auto& ev = spec.eigenvalues(p);
  if (!ev.empty() && !(z * z - c * c + ev.front() > 0.0))
    throw Error(ErrorCode::IndexOutOfRange, "Laplace transform diverges: need z^2 > c^2 - min sigma");
  return quad::integrate_half_line(
      [&](double t) {
        double acc = 0.0;
        for (double x : ev) acc += std::exp(-t * (z * z - c * c + x));
        return 2.0 * z * acc;
      },
      1e-10);
}

double e0_mellin_at_zero(int r, double vol, double delta) {
  const double identity = r * vol / (4.0 * kPi * kPi) * mellin_poly_gaussian(RatPoly::monomial(1, 2), 1.0);
  const double unipotent = delta / (2.0 * kPi) * mellin_poly_gaussian(RatPoly(1), 1.0);
  return identity + unipotent;
}

double s0_log_difference(int r, double vol, double delta) { return r * vol / (3.0 * kPi) - 2.0 * delta; }

int zeta1_at_zero(int h1) { return -h1; }

S0IdentityCheck s0_product_identity_check(const std::function<double(double)>& log_s0_at, double log_det0) {
  S0IdentityCheck out;
  out.log_s0_at_0 = log_s0_at(0.0);
  out.log_s0_at_2 = log_s0_at(2.0);
  out.log_det0 = log_det0;
  out.residual = std::abs(out.log_s0_at_0 + out.log_s0_at_2 - 2.0 * log_det0);
  return out;
}

}  // namespace ruelle
