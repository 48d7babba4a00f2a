#include "ruelle/rational.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

namespace ruelle {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const Rational& constant) : coeffs_{constant} { normalize(); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::shift(const Rational& a) { return RatPoly(std::vector<Rational>{a, Rational(1)}); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational RatPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RatPoly::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) { return *this += -o; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::pow(int e) const {
  RatPoly acc(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

RatPoly RatPoly::reflect() const {
  auto v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<int>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / static_cast<int>(i + 1);
  return RatPoly(std::move(v));
}

bool RatPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool RatPoly::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string monomial = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      out += ruelle::to_string(mag);
    else if (mag == 1)
      out += monomial;
    else
      out += ruelle::to_string(mag) + "*" + monomial;
  }
  return out;
}

double PiTagged::operator()(double z) const {
  return rational(z) * std::pow(boost::math::constants::pi<double>(), pi_power);
}

std::string PiTagged::to_string(const std::string& var) const {
  std::string body = "(" + rational.to_string(var) + ")";
  if (pi_power == 0) return body;
  if (pi_power == 1) return body + "*pi";
  if (pi_power == -1) return body + "/pi";
  return body + "*pi^" + std::to_string(pi_power);
}

double RatFunc::operator()(double z) const { return num(z) / den(z); }

bool RatFunc::is_odd() const { return (num.reflect() * den + num * den.reflect()).is_zero(); }

bool RatFunc::is_even() const { return (num.reflect() * den - num * den.reflect()).is_zero(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

BigInt factorial(int n) {
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt double_factorial_odd(int n) {
  BigInt acc = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2) acc *= i;
  return acc;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

}  // namespace ruelle
