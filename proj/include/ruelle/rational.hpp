#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ruelle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& q);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Dense polynomial with exact rational coefficients; coeffs[i] multiplies z^i.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(const Rational& constant);  // NOLINT: implicit scalar embedding
  RatPoly(int constant) : RatPoly(Rational(constant)) {}  // NOLINT
  static RatPoly monomial(const Rational& c, int degree);
  /// z + a
  static RatPoly shift(const Rational& a);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;

  Rational operator()(const Rational& z) const;
  double operator()(double z) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  RatPoly pow(int e) const;
  /// p(z) -> p(-z)
  RatPoly reflect() const;
  RatPoly derivative() const;
  /// Antiderivative vanishing at 0.
  RatPoly integral() const;

  bool is_even() const;
  bool is_odd() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// A rational polynomial times pi^pi_power; the transcendental factor is kept
/// symbolic.
struct PiTagged {
  RatPoly rational;
  int pi_power = 0;

  double operator()(double z) const;
  std::string to_string(const std::string& var = "z") const;
};

/// Quotient of rational polynomials, kept unreduced.
struct RatFunc {
  RatPoly num;
  RatPoly den = RatPoly(1);

  double operator()(double z) const;
  RatFunc reflect() const { return {num.reflect(), den.reflect()}; }
  /// f(-z) = -f(z) as rational functions: N(-z) D(z) + N(z) D(-z) == 0.
  bool is_odd() const;
  bool is_even() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
};

BigInt factorial(int n);
/// (2n - 1)!!, with (-1)!! = 1.
BigInt double_factorial_odd(int n);
BigInt binomial(int n, int k);

}  // namespace ruelle
