#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruelle/geodesics.hpp"
#include "ruelle/rational.hpp"

namespace ruelle {

/// gamma[j][k] is the coefficient of lambda^{2k} in
/// q_j(lambda) = prod_{k=1}^{j} (lambda^2 + (n-k+1)^2) prod_{k=j+1}^{n} (lambda^2 + (n-k)^2).
struct GammaTable {
  int n = 1;
  std::vector<std::vector<Rational>> gamma;

  /// q_j as a polynomial in lambda (odd coefficients zero).
  RatPoly q(int j) const;
};

GammaTable gamma_coeffs(int n);

/// Plancherel density 4^{1-n} C(2n, j) / (2n-1)!!^2 * q_j, times 1/pi.
PiTagged plancherel_poly(int n, int j);

/// Closed form (-1)^k 2 pi z^{2k} of the Laplace transform
/// L(g)(z) = 2z int_0^inf e^{-t z^2} g(t) dt applied to int e^{-t lambda^2} lambda^{2k} d lambda.
PiTagged laplace_gaussian_moment_poly(int k);
double laplace_gaussian_moment(int k, double z);
/// The same value by quadrature of the regularized defining integral; z > 0.
double laplace_gaussian_moment_quadrature(int k, double z);

/// int_0^inf t^p (e^{-x t} - sum_{m<nsub} (-x t)^m / m!) dt by quadrature,
/// split at t = 1 with the subtracted tails done in closed form. This is the
/// continuation of Gamma(p + 1) x^{-p-1} for -nsub - 1 < p < -nsub.
double regularized_power_integral(double p, double x, int nsub);

/// Laplace transform of the identity contribution e^{t c_j^2} i_j, as a
/// rational polynomial in z times r vol / pi. The j = n term carries the
/// doubled weight.
RatPoly identity_term_laplace(int n, int j);

struct HeatGeodesicCheck {
  cplx by_quadrature;
  cplx by_summation;
  double residual = 0.0;
};
/// L(e^{t c_j^2} h_j)(z) by quadrature against s_j(z + n) by summation.
HeatGeodesicCheck heat_to_geodesic_check(const LengthSpectrum& spec, int j, double z);

/// c1 = vol_over_pi * vol / pi + delta_coeff * delta, both coefficients exact.
struct ExactC1 {
  Rational vol_over_pi;
  Rational delta_coeff;

  double value(double vol, double delta) const;
  std::string to_string() const;
};

struct FuncEqReport {
  int n = 1;
  int r = 1;
  double vol = 0.0;
  double delta = 0.0;
  GammaTable gamma;
  RatPoly chi;  // even
  RatPoly X;    // odd, X' = chi, X(0) = 0
  /// prefactor = prefactor_rational * r * vol / pi
  Rational prefactor_rational;
  ExactC1 c1_exact;
  double c1 = 0.0;
  std::vector<int> order_formula_inputs;  // h^1..h^n when supplied

  double prefactor() const;
  /// prefactor * chi as exact rationals times r vol / pi.
  RatPoly scaled_chi() const { return chi * prefactor_rational; }
  RatPoly scaled_X() const { return X * prefactor_rational; }
  /// sum_{j=0}^{n} (-1)^j
  int alternating_count() const { return n % 2 == 0 ? 1 : 0; }
  /// prefactor X(z) + 4 (sum (-1)^j) delta z
  cplx exponent(cplx z) const;
};

FuncEqReport chi_poly(int n, int r, double vol, double delta = 0.0);

ExactC1 c1_exact(int n, int r);
double c1(int n, int r, double vol, double delta);

/// 2 sum_{l=0}^{n-1} (-1)^l (n - l) h^{l+1}. Throws ShapeMismatch unless h has
/// n nonnegative entries.
long order_at_origin(int n, const std::vector<int>& h);

/// sum_k 2z / (z^2 - c^2 + sigma_k) over a discrete spectrum, exactly.
RatFunc resolvent_laplace(const Rational& c_squared, const std::vector<Rational>& sigmas);

}  // namespace ruelle
