#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace ruelle {

using cplx = std::complex<double>;

/// One hyperbolic conjugacy class gamma = gamma_0^k.
struct GeodesicEntry {
  double l0 = 1.0;            // primitive length
  int k = 1;                  // power
  std::vector<double> thetas;  // holonomy angles of m_gamma (already for the k-th power)
  cplx trace_rho = 1.0;       // Tr rho(gamma)

  double length() const noexcept { return k * l0; }
};

struct LengthSpectrum {
  int n = 1;  // dimension d = 2n + 1
  int r = 1;  // rank of rho
  double cutoff = 0.0;
  std::vector<GeodesicEntry> entries;

  /// Sorts entries by length and throws InvalidSpectrum on any violated
  /// invariant (l0 > 0, k >= 1, n angles, |Tr rho| <= r, length <= cutoff).
  void validate_and_sort();
};

/// CSV: a "n,r,cutoff" line (optionally preceded by that literal header),
/// then rows "l0,k,theta_1..theta_n,re_tr,im_tr".
LengthSpectrum parse_spectrum(std::string_view text);
LengthSpectrum load_spectrum(const std::string& path);
std::string serialize(const LengthSpectrum& s);

/// j-th elementary symmetric polynomial in the 2n eigenvalues e^{+-i theta}.
double sigma_trace(const std::vector<double>& thetas, int j);

/// det(I - e^{-l} m_gamma) = prod_i (1 - 2 e^{-l} cos theta_i + e^{-2l}).
double delta_gamma(const GeodesicEntry& e);

/// Tr rho * Tr sigma_j * l0 / Delta(gamma).
cplx weight_alpha(const GeodesicEntry& e, int j);

/// sum alpha_j(gamma) e^{-z l(gamma)}
cplx s_j(const LengthSpectrum& spec, int j, cplx z);

/// log S_j(z) = -sum alpha_j(gamma) / l(gamma) e^{-z l(gamma)}
cplx log_S_j(const LengthSpectrum& spec, int j, cplx z);

/// The hyperbolic heat term
/// (4 pi t)^{-1/2} sum alpha_j exp(-(l^2 / 4t + t c_j^2 + n l)), c_j = |n - j|.
cplx hyperbolic_heat_term(const LengthSpectrum& spec, int j, double t);

/// A rank-one spectrum listing powers k = 1..max_power of each primitive,
/// with angles k theta and traces xi^k.
struct PrimitiveGeodesic {
  double l0 = 1.0;
  std::vector<double> thetas;
  cplx xi = 1.0;
};
LengthSpectrum power_closure(int n, const std::vector<PrimitiveGeodesic>& primitives, int max_power);

}  // namespace ruelle
