#include "ruelle/torsion.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"

namespace ruelle {

ChainComplex::ChainComplex(std::vector<int> dims, std::vector<CMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw Error(ErrorCode::ShapeMismatch, "chain complex needs at least C_0");
  for (int d : dims_)
    if (d < 0) throw Error(ErrorCode::ShapeMismatch, "negative chain group dimension");
  if (boundaries_.size() + 1 != dims_.size())
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(dims_.size() - 1) +
                                              " boundary matrices, got " +
                                              std::to_string(boundaries_.size()));
  for (std::size_t p = 1; p < dims_.size(); ++p) {
    const auto& d = boundaries_[p - 1];
    if (d.rows() != dims_[p - 1] || d.cols() != dims_[p])
      throw Error(ErrorCode::ShapeMismatch, "D" + std::to_string(p) + " must be " +
                                                std::to_string(dims_[p - 1]) + "x" +
                                                std::to_string(dims_[p]));
  }
  if (chain_defect() > 1e-9)
    throw Error(ErrorCode::ShapeMismatch, "boundary maps do not compose to zero");
}

CMatrix ChainComplex::boundary(int p) const {
  if (p >= 1 && p <= top_degree()) return boundaries_[p - 1];
  // Zero maps at the ends: D_0 : C_0 -> 0, D_{k+1} : 0 -> C_k.
  if (p <= 0) return CMatrix::Zero(0, p == 0 ? dims_[0] : 0);
  return CMatrix::Zero(p - 1 <= top_degree() ? dims_[p - 1] : 0, 0);
}

double ChainComplex::chain_defect() const {
  double m = 0.0;
  for (std::size_t p = 1; p < boundaries_.size(); ++p) {
    CMatrix prod = boundaries_[p - 1] * boundaries_[p];
    if (prod.size() > 0) m = std::max(m, prod.cwiseAbs().maxCoeff());
  }
  return m;
}

ChainComplex parse_chain_complex(std::string_view text) {
  auto lines = io::significant_lines(text);
  std::string rest;
  if (lines.empty() || !io::strip_key(lines.front().text, "dims", rest))
    throw Error(ErrorCode::Parse, "chain complex file must start with 'dims:'");
  std::vector<int> dims;
  for (const auto& tok : io::split_whitespace(rest)) {
    long d = io::parse_int(tok, lines.front().number);
    if (d < 0) throw Error(ErrorCode::ShapeMismatch, "negative dimension in 'dims:'");
    dims.push_back(static_cast<int>(d));
  }
  if (dims.empty()) throw Error(ErrorCode::Parse, "'dims:' lists no dimensions");

  std::vector<CMatrix> boundaries;
  std::size_t i = 1;
  for (std::size_t p = 1; p < dims.size(); ++p) {
    const std::string key = "D" + std::to_string(p);
    if (i >= lines.size() || !io::strip_key(lines[i].text, key, rest))
      throw Error(ErrorCode::Parse, "expected '" + key + ":'");
    if (!io::trim(rest).empty())
      throw Error(ErrorCode::Parse, "unexpected text after '" + key + ":' on line " +
                                        std::to_string(lines[i].number));
    ++i;
    const int rows = dims[p - 1];
    const int cols = dims[p];
    CMatrix d(rows, cols);
    for (int row = 0; row < rows; ++row, ++i) {
      if (i >= lines.size()) throw Error(ErrorCode::Parse, key + " is missing rows");
      auto toks = io::split_whitespace(lines[i].text);
      if (static_cast<int>(toks.size()) != 2 * cols)
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(2 * cols) +
                                                  " reals on line " + std::to_string(lines[i].number));
      for (int col = 0; col < cols; ++col)
        d(row, col) = cplx(io::parse_double(toks[2 * col], lines[i].number),
                           io::parse_double(toks[2 * col + 1], lines[i].number));
    }
    boundaries.push_back(std::move(d));
  }
  if (i != lines.size())
    throw Error(ErrorCode::Parse, "trailing content on line " + std::to_string(lines[i].number));
  return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex load_chain_complex(const std::string& path) {
  return parse_chain_complex(io::read_file(path));
}

ChainComplex complex_from_presentation(const Presentation& p, const TwistData& rho) {
  p.validate_wirtinger();
  auto b = boundary_matrices(p, rho);
  const int r = rho.rank();
  const int n = p.num_generators;
  CMatrix d1 = b.d1.evaluate(1.0).transpose();
  CMatrix d2 = b.d2.evaluate(1.0).transpose();
  return ChainComplex({r, n * r, (n - 1) * r}, {std::move(d1), std::move(d2)});
}

CMatrix comb_laplacian(const ChainComplex& c, int p) {
  if (p < 0 || p > c.top_degree())
    throw Error(ErrorCode::IndexOutOfRange, "degree " + std::to_string(p) + " outside [0, " +
                                                std::to_string(c.top_degree()) + "]");
  const int d = c.dims()[p];
  CMatrix lap = CMatrix::Zero(d, d);
  if (p + 1 <= c.top_degree()) {
    const CMatrix& up = c.boundaries()[p];
    lap += up * up.adjoint();
  }
  if (p >= 1) {
    const CMatrix& down = c.boundaries()[p - 1];
    lap += down.adjoint() * down;
  }
  return lap;
}

double TorsionReport::tau_star() const { return std::exp(log_tau_star); }

bool TorsionReport::acyclic() const {
  for (int b : betti)
    if (b != 0) return false;
  return true;
}

TorsionReport torsion_star(const ChainComplex& c) {
  TorsionReport rep;
  double zeta_prime = 0.0;
  for (int p = 0; p <= c.top_degree(); ++p) {
    CMatrix lap = comb_laplacian(c, p);
    int kernel = 0;
    double logdet = 0.0;
    if (lap.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(lap, Eigen::EigenvaluesOnly);
      for (double lambda : es.eigenvalues()) {
        if (lambda <= kKernelCutoff) {
          ++kernel;
        } else if (lambda < kGuardBand) {
          throw Error(ErrorCode::IllConditioned, "Laplacian eigenvalue " + io::format_double(lambda) +
                                                     " in degree " + std::to_string(p) +
                                                     " is too close to the kernel cutoff");
        } else {
          logdet += std::log(lambda);
        }
      }
    }
    rep.betti.push_back(kernel);
    rep.per_degree_logdet.push_back(logdet);
    const double sign = p % 2 == 0 ? 1.0 : -1.0;
    zeta_prime += sign * p * (-logdet);
  }
  rep.log_tau_star = -0.5 * zeta_prime;
  return rep;
}

namespace {

CMatrix as_columns(const std::vector<CVector>& vs, Eigen::Index ambient) {
  CMatrix m(ambient, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != ambient)
      throw Error(ErrorCode::ShapeMismatch, "basis vectors have different lengths");
    m.col(static_cast<Eigen::Index>(j)) = vs[j];
  }
  return m;
}

}  // namespace

PeriodBlock period_matrix(const std::vector<CVector>& basis_l2, const std::vector<CVector>& basis_L2) {
  if (basis_l2.size() != basis_L2.size())
    throw Error(ErrorCode::ShapeMismatch, "bases have " + std::to_string(basis_l2.size()) + " and " +
                                              std::to_string(basis_L2.size()) + " vectors");
  PeriodBlock out;
  if (basis_l2.empty()) {
    out.matrix = CMatrix(0, 0);
    return out;
  }
  const auto ambient = basis_l2.front().size();
  CMatrix phi = as_columns(basis_l2, ambient);
  CMatrix psi = as_columns(basis_L2, ambient);

  // psi = phi * P^T
  Eigen::ColPivHouseholderQR<CMatrix> qr(phi);
  if (qr.rank() < phi.cols())
    throw Error(ErrorCode::SingularPeriodMatrix, "first basis is linearly dependent");
  CMatrix pt = qr.solve(psi);
  const double scale = std::max(1.0, psi.cwiseAbs().maxCoeff());
  if ((phi * pt - psi).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw Error(ErrorCode::ShapeMismatch, "bases do not span the same subspace");

  out.matrix = pt.transpose();
  out.abs_det = std::abs(out.matrix.determinant());
  if (out.abs_det <= 1e-14)
    throw Error(ErrorCode::SingularPeriodMatrix, "period matrix is singular");
  return out;
}

double period(const std::vector<PeriodBlock>& blocks_by_degree) {
  double log_per = 0.0;
  for (std::size_t p = 0; p < blocks_by_degree.size(); ++p) {
    const double l = std::log(blocks_by_degree[p].abs_det);
    log_per += p % 2 == 0 ? l : -l;
  }
  return std::exp(log_per);
}

double leading_coefficient(double tau_star, double per) {
  const double v = tau_star * per;
  return v * v;
}

}  // namespace ruelle
