#include "ruelle/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
constexpr unsigned kMaxDepth = 15;
// Below this relative level the Kronrod-Gauss difference is roundoff.
constexpr double kRelFloor = 1e-13;

void check(double result, double error, double abs_tol) {
  if (!std::isfinite(result) || error > abs_tol)
    throw Error(ErrorCode::QuadratureFailure, "error estimate " + io::format_double(error) +
                                                  " exceeds tolerance " + io::format_double(abs_tol));
}

// One pass on the whole interval gives the L1 scale; the adaptive pass then
// asks for abs_tol relative to it. Integrals so large that abs_tol is below
// double resolution are held to kRelFloor instead.
// The interval is mapped onto [-1, 1] first: Boost's roundoff floor on the
// error estimate is absolute in the integrand values, so short intervals
// would otherwise never meet a tolerance proportional to their width.
template <class F0>
double adaptive(const F0& f0, double a, double b, double abs_tol) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto f = [&](double u) { return f0(mid + half * u) * half; };
  double err = 0.0;
  double l1 = 0.0;
  double r = GK::integrate(f, -1.0, 1.0, 0, 0.0, &err, &l1);
  if (err <= abs_tol) return r;
  const double rel = std::max(kRelFloor, abs_tol / std::max(l1, 1e-300));
  r = GK::integrate(f, -1.0, 1.0, kMaxDepth, rel, &err, &l1);
  check(r, err, std::max(abs_tol, kRelFloor * l1));
  return r;
}

// Walk outward from u0 in unit steps until the integrand stays negligible.
double find_cut(const std::function<double(double)>& g, double u0, double step, double peak) {
  double u = u0;
  int quiet = 0;
  for (int i = 0; i < 400 && quiet < 4; ++i) {
    u += step;
    const double v = std::abs(g(u));
    if (!std::isfinite(v)) break;
    quiet = v <= 1e-20 * peak ? quiet + 1 : 0;
  }
  return u;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  return adaptive(f, a, b, abs_tol);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol) {
  double re = integrate([&](double x) { return f(x).real(); }, a, b, abs_tol);
  double im = integrate([&](double x) { return f(x).imag(); }, a, b, abs_tol);
  return {re, im};
}

double integrate_half_line(const std::function<double(double)>& f, double abs_tol) {
  auto g = [&](double u) {
    const double t = std::exp(u);
    if (t == 0.0 || !std::isfinite(t)) return 0.0;
    return f(t) * t;
  };
  // Locate the bulk of the mass on a coarse grid.
  double peak = 0.0;
  double u_peak = 0.0;
  for (double u = -60.0; u <= 60.0; u += 0.5) {
    const double v = std::abs(g(u));
    if (std::isfinite(v) && v > peak) {
      peak = v;
      u_peak = u;
    }
  }
  if (peak == 0.0) return 0.0;
  const double lo = find_cut(g, u_peak, -1.0, peak);
  const double hi = find_cut(g, u_peak, 1.0, peak);
  return adaptive(g, lo, hi, abs_tol);
}

}  // namespace ruelle::quad
