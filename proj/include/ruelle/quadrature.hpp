#pragma once

#include <complex>
#include <functional>

namespace ruelle::quad {

inline constexpr double kAbsTol = 1e-10;

/// Adaptive Gauss-Kronrod on [a, b]. Throws QuadratureFailure when the error
/// estimate exceeds abs_tol, or 1e-13 of the L1 norm when that is larger.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = kAbsTol);
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol = kAbsTol);

/// Integral over (0, inf) after t = e^u. The u-range is cut where the
/// transformed integrand has decayed below 1e-20 of its peak.
double integrate_half_line(const std::function<double(double)>& f, double abs_tol = kAbsTol);

}  // namespace ruelle::quad
