#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ruelle {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Coefficients at or below this modulus are dropped from sparse maps.
inline constexpr double kTrim = 1e-12;

/// Element of the Laurent polynomial ring C[t, t^-1], stored sparsely.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(cplx constant);  // NOLINT: implicit scalar embedding
  static LaurentPoly monomial(cplx c, int exponent);
  /// Dense coefficient list starting at exponent `lowest`.
  static LaurentPoly from_coeffs(const std::vector<cplx>& coeffs, int lowest = 0);

  const std::map<int, cplx>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;
  cplx coeff(int exponent) const;
  cplx operator()(cplx t) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(cplx c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, cplx c) { return a *= c; }
  friend LaurentPoly operator*(cplx c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const { return *this * cplx(-1.0); }

  /// p(t) -> p(c t)
  LaurentPoly rescale_variable(cplx c) const;
  /// Drops coefficients with modulus <= tol.
  LaurentPoly trimmed(double tol) const;
  double max_abs_coeff() const noexcept;

  std::string to_string() const;

 private:
  void add_term(int e, cplx c);
  std::map<int, cplx> terms_;
};

/// Coefficientwise comparison within `tol`.
bool approx_equal(const LaurentPoly& a, const LaurentPoly& b, double tol);

/// Equality up to a unit c * t^k with |c| = 1: align the lowest exponent and
/// the phase of the leading coefficient, then compare coefficientwise.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b, double tol);

/// Divides by (t - 1) assuming p(1) == 0 (synthetic division on the dense
/// coefficient list).
LaurentPoly divide_by_t_minus_one(const LaurentPoly& p);

/// Rectangular matrix over C[t, t^-1].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols);
  static LaurentMatrix identity(int n);
  static LaurentMatrix from_constant(const CMatrix& m);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  LaurentPoly& operator()(int i, int j) { return entries_[index(i, j)]; }
  const LaurentPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }

  CMatrix evaluate(cplx t) const;
  LaurentMatrix block(int row, int col, int nrows, int ncols) const;
  void set_block(int row, int col, const LaurentMatrix& b);
  /// Drops the columns [first, first + count).
  LaurentMatrix without_columns(int first, int count) const;
  LaurentMatrix transpose() const;

  /// Lowest and highest exponent any determinant term can carry: sums over
  /// rows of the per-row minimum and maximum entry degrees. Empty rows give
  /// `has_zero_row`.
  struct DegreeWindow {
    int lo = 0;
    int hi = 0;
    bool has_zero_row = false;
  };
  DegreeWindow degree_window() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(LaurentMatrix a, cplx c);

  double max_abs_coeff() const noexcept;

 private:
  std::size_t index(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

bool approx_equal(const LaurentMatrix& a, const LaurentMatrix& b, double tol);

/// Determinant by evaluation at roots of unity and inverse DFT. The number of
/// sample points exceeds the degree window width, so no exponent aliases.
LaurentPoly det(const LaurentMatrix& m);

}  // namespace ruelle
