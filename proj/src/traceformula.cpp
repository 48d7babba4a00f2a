#include "ruelle/traceformula.hpp"

#include <cmath>
#include <numbers>

#include "ruelle/errors.hpp"
#include "ruelle/quadrature.hpp"

namespace ruelle {

namespace {

void require_positive_n(int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be at least 1");
}

cplx evaluate(const RatPoly& p, cplx z) {
  cplx acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Rational plancherel_scale(int n) {
  BigInt df = double_factorial_odd(n);
  BigInt four = 1;
  for (int i = 1; i < n; ++i) four *= 4;
  return Rational(1) / Rational(four * df * df);
}

// e^{-x} - sum_{m<k} (-x)^m / m!, without cancellation for small x.
double exp_remainder(double x, int k) {
  if (x < 2.0) {
    double term = 1.0;
    for (int m = 1; m <= k; ++m) term *= -x / m;
    double acc = 0.0;
    for (int m = k; m < k + 60; ++m) {
      acc += term;
      term *= -x / (m + 1);
      if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
  }
  double acc = std::exp(-x);
  double term = 1.0;
  for (int m = 0; m < k; ++m) {
    acc -= term;
    term *= -x / (m + 1);
  }
  return acc;
}

RatPoly chi_from_table(const GammaTable& t) {
  const int n = t.n;
  RatPoly chi;
  for (int j = 0; j <= n; ++j) {
    RatPoly inner;
    const RatPoly plus = RatPoly::shift(j - n);
    const RatPoly minus = RatPoly::shift(n - j);
    for (int k = 0; k <= n; ++k) {
      Rational g = t.gamma[j][k];
      if (g == 0) continue;
      if (k % 2 == 1) g = -g;
      inner += (plus.pow(2 * k) + minus.pow(2 * k)) * g;
    }
    Rational b(binomial(2 * n, j));
    chi += inner * (j % 2 == 0 ? b : Rational(-b));
  }
  return chi;
}

}  // namespace

RatPoly GammaTable::q(int j) const {
  std::vector<Rational> c(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[2 * k] = gamma.at(j).at(k);
  return RatPoly(std::move(c));
}

GammaTable gamma_coeffs(int n) {
  require_positive_n(n);
  GammaTable t;
  t.n = n;
  for (int j = 0; j <= n; ++j) {
    // Polynomial in mu = lambda^2.
    RatPoly q(1);
    for (int k = 1; k <= j; ++k) q = q * RatPoly(std::vector<Rational>{Rational((n - k + 1) * (n - k + 1)), Rational(1)});
    for (int k = j + 1; k <= n; ++k) q = q * RatPoly(std::vector<Rational>{Rational((n - k) * (n - k)), Rational(1)});
    std::vector<Rational> row(n + 1);
    for (int k = 0; k <= n; ++k) row[k] = q.coeff(k);
    t.gamma.push_back(std::move(row));
  }
  return t;
}

PiTagged plancherel_poly(int n, int j) {
  require_positive_n(n);
  if (j < 0 || j > n)
    throw Error(ErrorCode::IndexOutOfRange, "Plancherel index " + std::to_string(j) + " outside [0, " +
                                                std::to_string(n) + "]");
  Rational s = plancherel_scale(n) * Rational(binomial(2 * n, j));
  return {gamma_coeffs(n).q(j) * s, -1};
}

PiTagged laplace_gaussian_moment_poly(int k) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "moment order must be nonnegative");
  return {RatPoly::monomial(Rational(k % 2 == 0 ? 2 : -2), 2 * k), 1};
}

double laplace_gaussian_moment(int k, double z) { return laplace_gaussian_moment_poly(k)(z); }

double laplace_gaussian_moment_quadrature(int k, double z) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "moment order must be nonnegative");
  if (!(z > 0.0)) throw Error(ErrorCode::IndexOutOfRange, "quadrature companion needs z > 0");
  // int e^{-t lambda^2} lambda^{2k} d lambda = C_k t^{-1/2-k}
  const double ck = std::sqrt(std::numbers::pi) * to_double(Rational(double_factorial_odd(k))) / std::ldexp(1.0, k);
  return 2.0 * z * ck * regularized_power_integral(-0.5 - k, z * z, k);
}

double regularized_power_integral(double p, double x, int nsub) {
  if (!(x > 0.0)) throw Error(ErrorCode::IndexOutOfRange, "regularized integral needs x > 0");
  auto near = [&](double u) {
    const double t = std::exp(u);
    return std::pow(t, p + 1.0) * exp_remainder(t * x, nsub);
  };
  const double inner = quad::integrate(near, -90.0, 0.0);
  const double outer =
      quad::integrate([&](double t) { return std::pow(t, p) * std::exp(-t * x); }, 1.0, 1.0 + 60.0 / x);
  double tails = 0.0;
  double term = 1.0;
  for (int m = 0; m < nsub; ++m) {
    tails += term / (-(p + m + 1.0));
    term *= -x / (m + 1);
  }
  return inner + outer - tails;
}

RatPoly identity_term_laplace(int n, int j) {
  require_positive_n(n);
  if (j < 0 || j > 2 * n)
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(j) + " outside [0, 2n]");
  const int jj = std::min(j, 2 * n - j);
  const auto g = gamma_coeffs(n);
  std::vector<Rational> c(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[2 * k] = k % 2 == 0 ? g.gamma[jj][k] : Rational(-g.gamma[jj][k]);
  Rational weight = plancherel_scale(n) * Rational(binomial(2 * n, jj));
  if (jj != n) weight /= 2;
  return RatPoly(std::move(c)) * weight;
}

HeatGeodesicCheck heat_to_geodesic_check(const LengthSpectrum& spec, int j, double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::IndexOutOfRange, "z must be positive");
  const double c = std::abs(spec.n - j);
  auto integrand = [&](double t) {
    return 2.0 * z * std::exp(t * (c * c - z * z)) * hyperbolic_heat_term(spec, j, t);
  };
  HeatGeodesicCheck out;
  const double re = quad::integrate_half_line([&](double t) { return integrand(t).real(); });
  const double im = quad::integrate_half_line([&](double t) { return integrand(t).imag(); });
  out.by_quadrature = {re, im};
  out.by_summation = s_j(spec, j, z + spec.n);
  out.residual = std::abs(out.by_quadrature - out.by_summation);
  return out;
}

double ExactC1::value(double vol, double delta) const {
  return to_double(vol_over_pi) * vol / std::numbers::pi + to_double(delta_coeff) * delta;
}

std::string ExactC1::to_string() const {
  std::string out = ruelle::to_string(vol_over_pi) + "*vol/pi";
  if (delta_coeff != 0) out += (delta_coeff < 0 ? " - " : " + ") +
                               ruelle::to_string(delta_coeff < 0 ? Rational(-delta_coeff) : delta_coeff) +
                               "*delta";
  return out;
}

double FuncEqReport::prefactor() const { return to_double(prefactor_rational) * r * vol / std::numbers::pi; }

cplx FuncEqReport::exponent(cplx z) const {
  return prefactor() * evaluate(X, z) + 4.0 * alternating_count() * delta * z;
}

FuncEqReport chi_poly(int n, int r, double vol, double delta) {
  require_positive_n(n);
  FuncEqReport rep;
  rep.n = n;
  rep.r = r;
  rep.vol = vol;
  rep.delta = delta;
  rep.gamma = gamma_coeffs(n);
  rep.chi = chi_from_table(rep.gamma);
  rep.X = rep.chi.integral();
  rep.prefactor_rational = plancherel_scale(n);
  rep.c1_exact = c1_exact(n, r);
  rep.c1 = rep.c1_exact.value(vol, delta);
  return rep;
}

ExactC1 c1_exact(int n, int r) {
  require_positive_n(n);
  const Rational chi0 = chi_from_table(gamma_coeffs(n)).coeff(0);
  ExactC1 c;
  c.vol_over_pi = plancherel_scale(n) * r * chi0 / 2;
  c.delta_coeff = n % 2 == 0 ? 2 : 0;
  return c;
}

double c1(int n, int r, double vol, double delta) { return c1_exact(n, r).value(vol, delta); }

long order_at_origin(int n, const std::vector<int>& h) {
  require_positive_n(n);
  if (static_cast<int>(h.size()) != n)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n) + " Betti numbers, got " +
                                              std::to_string(h.size()));
  long acc = 0;
  for (int l = 0; l < n; ++l) {
    if (h[l] < 0) throw Error(ErrorCode::ShapeMismatch, "Betti numbers must be nonnegative");
    const long term = static_cast<long>(n - l) * h[l];
    acc += l % 2 == 0 ? term : -term;
  }
  return 2 * acc;
}

RatFunc resolvent_laplace(const Rational& c_squared, const std::vector<Rational>& sigmas) {
  RatFunc acc{RatPoly(), RatPoly(1)};
  for (const auto& s : sigmas) {
    RatFunc term{RatPoly::monomial(2, 1), RatPoly(std::vector<Rational>{s - c_squared, Rational(0), Rational(1)})};
    acc = acc.num.is_zero() ? term : acc + term;
  }
  return acc;
}

}  // namespace ruelle
