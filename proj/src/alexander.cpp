#include "ruelle/alexander.hpp"

#include <cmath>

#include "ruelle/errors.hpp"

namespace ruelle {

bool equal_up_to_units(const RationalFunction& a, const RationalFunction& b, double tol) {
  return equal_up_to_units(a.num * b.den, b.num * a.den, tol);
}

namespace {

double coeff_l1(const LaurentPoly& p) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) s += std::abs(c);
  return s;
}

bool vanishes_at_one(const LaurentPoly& p) {
  return std::abs(p(1.0)) <= 1e-9 * std::max(1.0, coeff_l1(p));
}

AlexanderReport report_for_column(const BoundaryMatrices& b, int r, int column) {
  AlexanderReport rep;
  rep.chosen_column = column;
  rep.delta0 = det(b.d1.block(column * r, 0, r, r));
  if (rep.delta0.is_zero())
    throw Error(ErrorCode::AllColumnsSingular, "det Phi(x_k - 1) vanishes for column " +
                                                   std::to_string(column));
  rep.delta1 = det(b.d2.without_columns(column * r, r));

  LaurentPoly num = rep.delta1;
  LaurentPoly den = rep.delta0;
  if (num.is_zero()) {
    rep.value_at_1 = 0.0;
    rep.special_value = 0.0;
    return rep;
  }
  while (vanishes_at_one(num) && vanishes_at_one(den)) {
    num = divide_by_t_minus_one(num);
    den = divide_by_t_minus_one(den);
  }
  if (vanishes_at_one(den)) {
    rep.kind = ValueAtOne::Pole;
    return rep;
  }
  cplx v = vanishes_at_one(num) ? cplx{} : num(1.0) / den(1.0);
  rep.value_at_1 = v;
  rep.special_value = std::norm(v);
  return rep;
}

}  // namespace

AlexanderReport alexander_with_column(const Presentation& p, const TwistData& rho, int column) {
  if (column < 0 || column >= p.num_generators)
    throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(column) + " out of range");
  p.validate_wirtinger();
  return report_for_column(boundary_matrices(p, rho), rho.rank(), column);
}

AlexanderReport alexander(const Presentation& p, const TwistData& rho) {
  p.validate_wirtinger();
  rho.check_generators(p.num_generators);
  const int r = rho.rank();
  auto b = boundary_matrices(p, rho);
  for (int k = 0; k < p.num_generators; ++k)
    if (!det(b.d1.block(k * r, 0, r, r)).is_zero()) return report_for_column(b, r, k);
  throw Error(ErrorCode::AllColumnsSingular, "det Phi(x_k - 1) vanishes for every generator");
}

double special_value_rank1(const LaurentPoly& alexander_poly, cplx xi) {
  if (std::abs(xi - 1.0) <= 1e-12)
    throw Error(ErrorCode::CuspidalityViolation, "xi = 1 is not a cuspidal character");
  cplx a = alexander_poly(xi);
  if (std::abs(a) <= 1e-12)
    throw Error(ErrorCode::NonAcyclic, "A_K(xi) = 0, the twisted complex is not acyclic");
  return std::norm(a / (1.0 - xi));
}

bool acyclicity_check(const AlexanderReport& report) {
  return report.kind == ValueAtOne::Finite && report.value_at_1 &&
         std::abs(*report.value_at_1) > 1e-12;
}

double ruelle_special_value(const AlexanderReport& report) {
  if (!acyclicity_check(report))
    throw Error(ErrorCode::NonAcyclic, report.kind == ValueAtOne::Pole
                                           ? "Delta_{K,rho} has a pole at t = 1"
                                           : "Delta_{K,rho}(1) = 0");
  return *report.special_value;
}

}  // namespace ruelle
