#include "ruelle/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

LaurentPoly::LaurentPoly(cplx constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(cplx c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<cplx>& coeffs, int lowest) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(lowest + static_cast<int>(i), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(int e, cplx c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= kTrim) terms_.erase(it);
}

int LaurentPoly::min_degree() const { return terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.rbegin()->first; }

cplx LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx LaurentPoly::operator()(cplx t) const {
  cplx s{};
  for (const auto& [e, c] : terms_) s += c * std::pow(t, e);
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = std::abs(it->second) <= kTrim ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, cplx> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly out;
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::rescale_variable(cplx c) const {
  LaurentPoly out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * std::pow(c, e));
  return out;
}

LaurentPoly LaurentPoly::trimmed(double tol) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(e, c);
  return out;
}

double LaurentPoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::string coef;
    bool real = std::abs(c.imag()) <= kTrim * std::max(1.0, std::abs(c));
    bool negative = false;
    if (real) {
      negative = c.real() < 0;
      coef = io::format_double(std::abs(c.real()));
    } else {
      coef = "(" + io::format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
             io::format_double(std::abs(c.imag())) + "i)";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (e == 0) {
      out += coef;
      continue;
    }
    if (coef != "1") out += coef + "*";
    out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

bool approx_equal(const LaurentPoly& a, const LaurentPoly& b, double tol) {
  auto diff = a - b;
  return diff.max_abs_coeff() <= tol;
}

namespace {
LaurentPoly normalize_unit(const LaurentPoly& p) {
  LaurentPoly shifted;
  int lo = p.min_degree();
  for (const auto& [e, c] : p.terms()) shifted += LaurentPoly::monomial(c, e - lo);
  cplx lead = shifted.terms().rbegin()->second;
  return shifted * (std::abs(lead) / lead);
}
}  // namespace

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b, double tol) {
  if (a.is_zero() || b.is_zero()) return a.max_abs_coeff() <= tol && b.max_abs_coeff() <= tol;
  return approx_equal(normalize_unit(a), normalize_unit(b), tol);
}

LaurentPoly divide_by_t_minus_one(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  int lo = p.min_degree();
  int hi = p.max_degree();
  // p = (t - 1) q; q_{k-1} = -(p_lo + ... + p_{k-1}) summed from the bottom.
  std::vector<cplx> q;
  cplx acc{};
  for (int e = lo; e < hi; ++e) {
    acc += p.coeff(e);
    q.push_back(-acc);
  }
  return LaurentPoly::from_coeffs(q, lo);
}

LaurentMatrix::LaurentMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1.0);
  return m;
}

LaurentMatrix LaurentMatrix::from_constant(const CMatrix& c) {
  LaurentMatrix m(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m(i, j) = LaurentPoly(c(i, j));
  return m;
}

std::size_t LaurentMatrix::index(int i, int j) const {
  return static_cast<std::size_t>(i) * cols_ + j;
}

CMatrix LaurentMatrix::evaluate(cplx t) const {
  CMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j)(t);
  return out;
}

LaurentMatrix LaurentMatrix::block(int row, int col, int nrows, int ncols) const {
  LaurentMatrix b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void LaurentMatrix::set_block(int row, int col, const LaurentMatrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(row + i, col + j) = b(i, j);
}

LaurentMatrix LaurentMatrix::without_columns(int first, int count) const {
  LaurentMatrix out(rows_, cols_ - count);
  for (int i = 0; i < rows_; ++i) {
    int jj = 0;
    for (int j = 0; j < cols_; ++j) {
      if (j >= first && j < first + count) continue;
      out(i, jj++) = (*this)(i, j);
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

LaurentMatrix::DegreeWindow LaurentMatrix::degree_window() const {
  DegreeWindow w;
  for (int i = 0; i < rows_; ++i) {
    bool any = false;
    int lo = 0, hi = 0;
    for (int j = 0; j < cols_; ++j) {
      const auto& p = (*this)(i, j);
      if (p.is_zero()) continue;
      lo = any ? std::min(lo, p.min_degree()) : p.min_degree();
      hi = any ? std::max(hi, p.max_degree()) : p.max_degree();
      any = true;
    }
    if (!any) {
      w.has_zero_row = true;
      continue;
    }
    w.lo += lo;
    w.hi += hi;
  }
  return w;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw Error(ErrorCode::ShapeMismatch, "matrix sum of mismatched shapes");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product of mismatched shapes");
  LaurentMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

LaurentMatrix operator*(LaurentMatrix a, cplx c) {
  for (auto& e : a.entries_) e *= c;
  return a;
}

double LaurentMatrix::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, e.max_abs_coeff());
  return m;
}

bool approx_equal(const LaurentMatrix& a, const LaurentMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

LaurentPoly det(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentPoly(1.0);
  auto window = m.degree_window();
  if (window.has_zero_row) return {};

  // t^-lo det M(t) is a polynomial of degree <= hi - lo; sample it at
  // K = hi - lo + 1 roots of unity and invert the DFT.
  const int K = window.hi - window.lo + 1;
  std::vector<cplx> samples(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    cplx t = std::polar(1.0, 2.0 * std::numbers::pi * k / K);
    samples[k] = m.evaluate(t).determinant() * std::pow(t, -window.lo);
  }
  std::vector<cplx> coeffs(static_cast<std::size_t>(K));
  double scale = 0.0;
  for (int e = 0; e < K; ++e) {
    cplx acc{};
    for (int k = 0; k < K; ++k)
      acc += samples[k] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(
                                                 (static_cast<long long>(k) * e) % K) / K);
    coeffs[e] = acc / static_cast<double>(K);
    scale = std::max(scale, std::abs(coeffs[e]));
  }
  // Interpolation noise sits near machine epsilon times the largest coefficient.
  double floor = std::max(kTrim, 1e-13 * scale);
  for (auto& c : coeffs)
    if (std::abs(c) <= floor) c = 0.0;
  return LaurentPoly::from_coeffs(coeffs, window.lo);
}

}  // namespace ruelle
