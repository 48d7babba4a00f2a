#pragma once

#include <vector>

#include "ruelle/foxcalc.hpp"

namespace ruelle {

/// Finite chain complex of C-vector spaces with column-vector boundaries
/// D_p : C_p -> C_{p-1}, stored for p = 1..k as boundaries[p - 1].
class ChainComplex {
 public:
  ChainComplex(std::vector<int> dims, std::vector<CMatrix> boundaries);

  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  /// D_p; the zero map for p outside 1..top_degree.
  CMatrix boundary(int p) const;
  const std::vector<CMatrix>& boundaries() const noexcept { return boundaries_; }

  /// Largest |entry| of D_{p-1} D_p over all p.
  double chain_defect() const;

 private:
  std::vector<int> dims_;
  std::vector<CMatrix> boundaries_;
};

/// "dims: d0 d1 ... dk", then for each p >= 1 a "D<p>:" line followed by
/// d_{p-1} lines of 2 d_p reals (re/im pairs).
ChainComplex parse_chain_complex(std::string_view text);
ChainComplex load_chain_complex(const std::string& path);

/// The presentation complex specialized at t = 1: dims (r, n r, (n-1) r) and
/// D_1, D_2 the transposes of the row-convention Fox matrices.
ChainComplex complex_from_presentation(const Presentation& p, const TwistData& rho);

/// D_{p+1} D_{p+1}^* + D_p^* D_p.
CMatrix comb_laplacian(const ChainComplex& c, int p);

/// Eigenvalues below this are kernel.
inline constexpr double kKernelCutoff = 1e-9;
/// Eigenvalues in (kKernelCutoff, kGuardBand) are rejected as ambiguous.
inline constexpr double kGuardBand = 1e-7;

struct TorsionReport {
  std::vector<int> betti;
  /// Sum of log lambda over positive Laplacian eigenvalues, per degree.
  std::vector<double> per_degree_logdet;
  double log_tau_star = 0.0;

  double tau_star() const;
  bool acyclic() const;
};

/// tau* = exp(-1/2 sum_p (-1)^p p zeta'_p(0)) with zeta'_p(0) = -log det' Laplacian_p.
/// Throws IllConditioned when an eigenvalue falls inside the guard band.
TorsionReport torsion_star(const ChainComplex& c);

/// Change of basis psi_i = sum_j P_ij phi_j between two bases of the same
/// subspace, given as equal-length lists of vectors in a common ambient space.
struct PeriodBlock {
  CMatrix matrix;
  double abs_det = 1.0;
};
PeriodBlock period_matrix(const std::vector<CVector>& basis_l2, const std::vector<CVector>& basis_L2);

/// prod_p |det P_p|^{(-1)^p}; blocks are indexed by degree. Empty input
/// (acyclic case) gives 1.
double period(const std::vector<PeriodBlock>& blocks_by_degree);

/// (tau* Per)^2, the leading coefficient of R_X at the origin in dimension 3.
double leading_coefficient(double tau_star, double per);

}  // namespace ruelle
