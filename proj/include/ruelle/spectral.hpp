#pragma once

#include <functional>
#include <vector>

#include "ruelle/rational.hpp"

namespace ruelle {

/// Finite nonnegative spectra of the Laplacians Delta^p, one list per degree.
class SyntheticSpectrum {
 public:
  /// Sorts each degree; throws InvalidSpectrum on a negative eigenvalue.
  explicit SyntheticSpectrum(std::vector<std::vector<double>> eigenvalues);

  int num_degrees() const noexcept { return static_cast<int>(eigenvalues_.size()); }
  const std::vector<double>& eigenvalues(int p) const;
  /// Number of zero eigenvalues in degree p.
  int kernel_dim(int p) const;
  /// Sum of log over the positive eigenvalues.
  double log_det_prime(int p) const;

 private:
  std::vector<std::vector<double>> eigenvalues_;
};

/// M(int e^{-t(lambda^2 + c^2)} P(lambda) d lambda)(0) = -2 pi int_0^c P(iy) dy
/// for an even polynomial P in lambda. Throws ShapeMismatch for odd terms.
double mellin_poly_gaussian(const RatPoly& P, double c);
/// Exact form for rational c: a rational times pi.
PiTagged mellin_poly_gaussian_exact(const RatPoly& P, const Rational& c);
/// The Mellin integral continued by subtracting the small-t terms of each
/// t^{-1/2-k} e^{-t c^2} piece, evaluated by quadrature.
double mellin_poly_gaussian_quadrature(const RatPoly& P, double c);

/// sum_l e^{-t sigma_p(l)}
double heat_trace(const SyntheticSpectrum& spec, int p, double t);

/// L(e^{t c^2} Tr e^{-t Delta^p})(z) by quadrature, for z^2 > c^2 - min sigma.
double heat_trace_laplace_quadrature(const SyntheticSpectrum& spec, int p, double c, double z);

/// Mellin value at 0 of the d = 3 identity plus unipotent heat term in
/// degree 0: r vol / (6 pi) - delta, assembled from mellin_poly_gaussian.
double e0_mellin_at_zero(int r, double vol, double delta);
/// log S_0(2) - log S_0(0) = r vol / (3 pi) - 2 delta.
double s0_log_difference(int r, double vol, double delta);
/// zeta^{(1)}(0) = -h^1.
int zeta1_at_zero(int h1);

struct S0IdentityCheck {
  double log_s0_at_0 = 0.0;
  double log_s0_at_2 = 0.0;
  double log_det0 = 0.0;
  double residual = 0.0;
};
/// |log S_0(0) + log S_0(2) - 2 log det Delta^0|; a diagnostic only.
S0IdentityCheck s0_product_identity_check(const std::function<double(double)>& log_s0_at, double log_det0);

}  // namespace ruelle
