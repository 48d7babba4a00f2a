#pragma once

#include <optional>

#include "ruelle/foxcalc.hpp"

namespace ruelle {

/// num / den kept as computed; no gcd normalization.
struct RationalFunction {
  LaurentPoly num;
  LaurentPoly den;
};

/// Cross-multiplied comparison up to units c t^k, |c| = 1.
bool equal_up_to_units(const RationalFunction& a, const RationalFunction& b, double tol);

/// How Delta_1(t) / Delta_0(t) behaves at t = 1.
enum class ValueAtOne { Finite, Pole };

struct AlexanderReport {
  LaurentPoly delta0;
  LaurentPoly delta1;
  int chosen_column = 0;
  ValueAtOne kind = ValueAtOne::Finite;
  /// Limit of Delta_1 / Delta_0 at t = 1 after cancelling common (t - 1)
  /// factors; empty for a pole.
  std::optional<cplx> value_at_1;
  /// |value_at_1|^2 when finite.
  std::optional<double> special_value;

  RationalFunction function() const { return {delta1, delta0}; }
  bool delta1_is_zero() const noexcept { return delta1.is_zero(); }
};

/// Twisted Alexander function of a Wirtinger-valid presentation. The first
/// generator column k (ascending) with det Phi(x_k - 1) != 0 gives Delta_0;
/// Delta_1 is the determinant of d2 with block column k removed.
/// Throws AllColumnsSingular when no column qualifies.
AlexanderReport alexander(const Presentation& p, const TwistData& rho);
/// Same, forcing the column choice.
AlexanderReport alexander_with_column(const Presentation& p, const TwistData& rho, int column);

/// |A_K(xi) / (1 - xi)|^2 for a rank-one character.
/// Throws CuspidalityViolation for xi = 1 and NonAcyclic when A_K(xi) = 0.
double special_value_rank1(const LaurentPoly& alexander_poly, cplx xi);

/// True iff Delta_{K,rho}(1) is finite and nonzero.
bool acyclicity_check(const AlexanderReport& report);

/// Alexander-route R(0, rho); throws NonAcyclic unless acyclicity_check holds.
double ruelle_special_value(const AlexanderReport& report);

}  // namespace ruelle
