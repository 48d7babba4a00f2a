#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "ruelle/rational.hpp"

namespace ruelle {

using cplx = std::complex<double>;

/// Principal branch of Li_2 with the cut on [1, inf).
cplx dilog(cplx z);

/// D(z) = Im Li_2(z) + arg(1 - z) log|z|; 0 at the singular points 0 and 1.
double bloch_wigner(cplx z);
bool is_bloch_wigner_singular(cplx z);

struct TetraVolume {
  double value = 0.0;
  bool degenerate = false;  // real cross-ratio
};

/// Volume of the ideal tetrahedron with cross-ratio z. Throws InvalidShape
/// for Im z < 0.
TetraVolume tetra_volume(cplx z);

/// Sum of tetrahedron volumes. Throws InvalidShape for an empty list or any
/// shape with Im z <= 0.
double manifold_volume(const std::vector<cplx>& shapes);

/// "re,im;re,im;..."
std::vector<cplx> parse_shapes(std::string_view text);

/// log of the L2-analytic torsion in dimension 3: r vol / (6 pi).
double l2_torsion_log(int r, double vol);
/// Its exact coefficient of vol / pi.
Rational l2_torsion_coefficient(int r);

}  // namespace ruelle
