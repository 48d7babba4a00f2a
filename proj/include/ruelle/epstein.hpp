#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ruelle {

using cplx = std::complex<double>;

/// Rank-2 lattice with generators as the columns of `basis` and the character
/// chi(m_1 b_1 + m_2 b_2) = exp(2 pi i alpha . m).
class CharLattice {
 public:
  /// Throws InvalidLattice for a singular basis, alpha outside [0, 1)^2, or
  /// the trivial character.
  CharLattice(const Eigen::Matrix2d& basis, const Eigen::Vector2d& alpha);

  const Eigen::Matrix2d& basis() const noexcept { return basis_; }
  const Eigen::Vector2d& alpha() const noexcept { return alpha_; }
  double covolume() const { return std::abs(basis_.determinant()); }
  cplx character(long m1, long m2) const;
  /// The lattice with the conjugate character, alpha -> -alpha mod 1.
  CharLattice conjugate() const;

 private:
  Eigen::Matrix2d basis_;
  Eigen::Vector2d alpha_;
};

struct CuspData {
  double covolume = 0.0;
  std::vector<CharLattice> lattices;  // one per character of the cusp

  /// Throws InvalidLattice unless every lattice has |det basis| = covolume.
  void validate() const;
};

struct ThetaOptions {
  /// Truncation radius in the lattice norm for both the direct and the dual
  /// sums.
  double radius = 4.5;
  /// Largest coefficient box half-width before giving up.
  long max_box = 20000;
};

/// Sum over nonzero lattice points chi(eta) |eta|^{-2(s+1)}, continued to all
/// s by the theta-kernel split at t = 1 and Poisson summation onto the
/// shifted dual lattice. Throws NonconvergentTheta when the truncation bound
/// e^{-pi R^2} < 1e-16 is not met or the point box is too large.
cplx epstein_value(const CharLattice& l, cplx s, const ThetaOptions& options = {});

/// Sum of epstein_value(., 0) over the cusp's characters.
cplx tau_nu(const CuspData& cusp, const ThetaOptions& options = {});

/// (1 / 2 pi) sum covolume_nu tau_nu; zero for an empty list.
cplx delta_constant(const std::vector<CuspData>& cusps, const ThetaOptions& options = {});

/// "covolume: v" opens a cusp; each character is a "basis: b11 b21 b12 b22"
/// line (columns are the generators) followed by "alpha: a1 a2".
std::vector<CuspData> parse_cusps(std::string_view text);
std::vector<CuspData> load_cusps(const std::string& path);

/// Special functions used by the continuation, exposed for testing.
cplx reciprocal_gamma(cplx z);
/// Upper incomplete gamma Gamma(a, x) for complex a and real x > 0.
cplx upper_incomplete_gamma(cplx a, double x);

}  // namespace ruelle
