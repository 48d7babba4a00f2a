#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ruelle/rational.hpp"
#include "ruelle/traceformula.hpp"
#include "test_util.hpp"

using namespace ruelle;

namespace {

constexpr double kPi = std::numbers::pi;

RatPoly rp(std::vector<Rational> c) { return RatPoly(std::move(c)); }

// q_j(lambda) straight from the product form.
std::complex<double> q_product(int n, int j, std::complex<double> lambda) {
  std::complex<double> acc = 1.0;
  for (int k = 1; k <= j; ++k) acc *= lambda * lambda + double((n - k + 1) * (n - k + 1));
  for (int k = j + 1; k <= n; ++k) acc *= lambda * lambda + double((n - k) * (n - k));
  return acc;
}

double binom(int n, int k) { return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)); }

// chi(z) = sum_j (-1)^j C(2n, j) [q_j(i(z + j - n)) + q_j(i(z - j + n))]
double chi_product(int n, double z) {
  const std::complex<double> i(0.0, 1.0);
  double acc = 0.0;
  for (int j = 0; j <= n; ++j)
    acc += (j % 2 == 0 ? 1 : -1) * binom(2 * n, j) *
           (q_product(n, j, i * (z + j - n)) + q_product(n, j, i * (z - j + n))).real();
  return acc;
}

double odd_double_factorial(int n) {
  double acc = 1.0;
  for (int i = 2 * n - 1; i > 1; i -= 2) acc *= i;
  return acc;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("polynomial arithmetic") {
    const RatPoly a = rp({1, 2});        // 1 + 2z
    const RatPoly b = rp({Rational(1, 2), 0, 3});  // 1/2 + 3z^2
    CHECK(a * b == rp({Rational(1, 2), 1, 3, 6}));
    CHECK(a + b == rp({Rational(3, 2), 2, 3}));
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == rp({1, 6, 12, 8}));
    CHECK(b.derivative() == rp({0, 6}));
    CHECK(b.integral() == rp({0, Rational(1, 2), 0, 1}));
    CHECK(b.integral().derivative() == b);
    CHECK(a.reflect() == rp({1, -2}));
    CHECK(b.is_even());
    CHECK_FALSE(a.is_even());
    CHECK(rp({0, 1, 0, 5}).is_odd());
    CHECK(RatPoly::shift(-2) == rp({-2, 1}));
    CHECK(RatPoly::monomial(3, 2) == rp({0, 0, 3}));
    CHECK(rp({1, 0, 0}).degree() == 0);
    CHECK(a(Rational(1, 2)) == Rational(2));
    CHECK(b(2.0) == doctest::Approx(12.5));
  }

  TEST_CASE("formatting") {
    CHECK(rp({-6, 0, 2}).to_string("z") == "2*z^2 - 6");
    CHECK(rp({0, Rational(-1, 3)}).to_string("z") == "-1/3*z");
    CHECK(RatPoly().to_string("z") == "0");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    const PiTagged t{rp({0, 0, 2}), -1};
    CHECK(t.to_string("l") == "(2*l^2)/pi");
    CHECK(t(1.0) == doctest::Approx(2.0 / kPi));
  }

  TEST_CASE("integer helpers") {
    CHECK(factorial(5) == 120);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 5) == 0);
  }

  TEST_CASE("rational function parity") {
    const RatFunc odd{rp({0, 2}), rp({3, 0, 1})};
    CHECK(odd.is_odd());
    CHECK_FALSE(odd.is_even());
    const RatFunc even{rp({1, 0, 1}), rp({3, 0, 1})};
    CHECK(even.is_even());
    CHECK((odd + odd).is_odd());
    CHECK(odd(2.0) == doctest::Approx(4.0 / 7.0));
  }
}

TEST_SUITE("gamma table") {
  TEST_CASE("n = 1") {
    const auto g = gamma_coeffs(1);
    CHECK(g.gamma[0] == std::vector<Rational>{0, 1});
    CHECK(g.gamma[1] == std::vector<Rational>{1, 1});
  }

  TEST_CASE("n = 2") {
    const auto g = gamma_coeffs(2);
    CHECK(g.q(0) == rp({0, 0, 1, 0, 1}));
    CHECK(g.q(1) == rp({0, 0, 4, 0, 1}));
    CHECK(g.q(2) == rp({4, 0, 5, 0, 1}));
  }

  TEST_CASE("monic integer entries and product form agreement for n <= 6") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 1; n <= 6; ++n) {
      const auto g = gamma_coeffs(n);
      REQUIRE(g.gamma.size() == static_cast<std::size_t>(n + 1));
      for (int j = 0; j <= n; ++j) {
        CHECK(g.gamma[j][n] == 1);
        for (const auto& c : g.gamma[j]) {
          CHECK(denominator(c) == 1);
          CHECK(c >= 0);
        }
        for (int s = 0; s < 20; ++s) {
          const double lam = u(rng);
          const double expected = q_product(n, j, lam).real();
          CHECK(g.q(j)(lam) == doctest::Approx(expected).epsilon(1e-10));
        }
      }
    }
  }

  TEST_CASE("bad n") { CHECK_ERROR(gamma_coeffs(0), ErrorCode::IndexOutOfRange); }
}

TEST_SUITE("plancherel") {
  TEST_CASE("n = 1") {
    const auto p0 = plancherel_poly(1, 0);
    const auto p1 = plancherel_poly(1, 1);
    CHECK(p0.pi_power == -1);
    CHECK(p0.rational == rp({0, 0, 1}));
    CHECK(p1.rational == rp({2, 0, 2}));
  }

  TEST_CASE("positive coefficients and range") {
    for (int n = 1; n <= 4; ++n)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= plancherel_poly(n, j).rational.degree(); ++k)
          CHECK(plancherel_poly(n, j).rational.coeff(k) >= 0);
    CHECK_ERROR(plancherel_poly(1, 2), ErrorCode::IndexOutOfRange);
    CHECK_ERROR(plancherel_poly(2, -1), ErrorCode::IndexOutOfRange);
  }
}

TEST_SUITE("gaussian moments") {
  TEST_CASE("closed forms") {
    CHECK(laplace_gaussian_moment(0, 3.0) == doctest::Approx(2.0 * kPi));
    CHECK(laplace_gaussian_moment(1, 2.0) == doctest::Approx(-8.0 * kPi));
    CHECK(laplace_gaussian_moment(2, 1.0) == doctest::Approx(2.0 * kPi));
    CHECK(laplace_gaussian_moment_poly(3).rational == RatPoly::monomial(-2, 6));
    CHECK_ERROR(laplace_gaussian_moment(-1, 1.0), ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("quadrature agrees on a grid") {
    for (int k = 0; k <= 3; ++k)
      for (double z : {0.5, 1.0, 2.0, 3.0})
        CHECK(std::abs(laplace_gaussian_moment_quadrature(k, z) - laplace_gaussian_moment(k, z)) < 1e-7);
    CHECK_ERROR(laplace_gaussian_moment_quadrature(0, -1.0), ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("regularized power integral against Gamma") {
    // Gamma(p + 1) x^{-p-1} for -nsub - 1 < p < -nsub
    for (double x : {0.3, 1.0, 4.0}) {
      CHECK(regularized_power_integral(0.5, x, 0) == doctest::Approx(std::tgamma(1.5) * std::pow(x, -1.5)));
      CHECK(regularized_power_integral(-1.5, x, 1) == doctest::Approx(std::tgamma(-0.5) * std::pow(x, 0.5)));
      CHECK(regularized_power_integral(-2.5, x, 2) == doctest::Approx(std::tgamma(-1.5) * std::pow(x, 1.5)));
    }
    CHECK_ERROR(regularized_power_integral(0.5, 0.0, 0), ErrorCode::IndexOutOfRange);
  }
}

TEST_SUITE("identity term") {
  TEST_CASE("halved weight except at j = n, symmetric in j <-> 2n - j") {
    for (int n = 1; n <= 3; ++n) {
      const auto g = gamma_coeffs(n);
      const Rational scale = Rational(1) / Rational(BigInt(1) << (2 * (n - 1))) /
                             Rational(double_factorial_odd(n) * double_factorial_odd(n));
      for (int j = 0; j <= 2 * n; ++j) {
        const RatPoly t = identity_term_laplace(n, j);
        CHECK(t.is_even());
        CHECK(t == identity_term_laplace(n, 2 * n - j));
      }
      for (int j = 0; j <= n; ++j) {
        // q_j(i z) coefficients, scaled
        std::vector<Rational> c(2 * n + 1);
        for (int k = 0; k <= n; ++k) c[2 * k] = k % 2 == 0 ? g.gamma[j][k] : Rational(-g.gamma[j][k]);
        Rational w = scale * Rational(binomial(2 * n, j));
        if (j != n) w /= 2;
        CHECK(identity_term_laplace(n, j) == RatPoly(c) * w);
      }
    }
    CHECK_ERROR(identity_term_laplace(1, 3), ErrorCode::IndexOutOfRange);
  }
}

TEST_SUITE("functional equation") {
  TEST_CASE("n = 1 polynomial") {
    const auto rep = chi_poly(1, 1, 2.0);
    CHECK(rep.chi == rp({-6, 0, 2}));
    CHECK(rep.X == rp({0, -6, 0, Rational(2, 3)}));
    CHECK(rep.prefactor_rational == 1);
    CHECK(rep.prefactor() == doctest::Approx(2.0 / kPi));
    // (2 r vol / pi)(z^3/3 - 3z) at z = 1.5
    const double z = 1.5;
    CHECK(rep.exponent(z).real() == doctest::Approx(2.0 * 2.0 / kPi * (z * z * z / 3.0 - 3.0 * z)));
  }

  TEST_CASE("chi is even, X odd with X' = chi, for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const auto rep = chi_poly(n, 1, 1.0);
      CHECK(rep.chi.is_even());
      CHECK(rep.X.is_odd());
      CHECK(rep.X.derivative() == rep.chi);
      CHECK(rep.X.coeff(0) == 0);
      for (double z : {0.0, 0.7, 2.0})
        CHECK(rep.chi(z) == doctest::Approx(chi_product(n, z)).epsilon(1e-12));
    }
  }

  TEST_CASE("c1 for n = 1 is -3 r vol / pi for any delta") {
    for (int r : {1, 2, 5})
      for (double d : {0.0, 1.7, -4.0}) {
        CHECK(c1(1, r, 2.5, d) == doctest::Approx(-3.0 * r * 2.5 / kPi));
        CHECK(c1_exact(1, r).vol_over_pi == -3 * r);
      }
    CHECK(c1_exact(1, 2).to_string() == "-6*vol/pi");
  }

  TEST_CASE("c1 at zero volume is the delta term") {
    CHECK(c1(1, 1, 0.0, 3.0) == 0.0);
    CHECK(c1(2, 1, 0.0, 3.0) == doctest::Approx(2.0 * 3.0));
    CHECK(c1(3, 2, 0.0, 3.0) == 0.0);
  }

  TEST_CASE("c1 for n = 2 from an independent chi(0)") {
    const double prefactor = 1.0 / (4.0 * odd_double_factorial(2) * odd_double_factorial(2));
    const double expected = 0.5 * prefactor * chi_product(2, 0.0) * kPi / kPi;
    CHECK(c1(2, 1, kPi, 0.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(c1_exact(2, 1).delta_coeff == 2);
    for (int n = 1; n <= 5; ++n) {
      const double pre = 1.0 / (std::pow(4.0, n - 1) * odd_double_factorial(n) * odd_double_factorial(n));
      CHECK(to_double(c1_exact(n, 1).vol_over_pi) == doctest::Approx(0.5 * pre * chi_product(n, 0.0)));
    }
  }

  TEST_CASE("exponent alternating delta term") {
    const auto odd = chi_poly(1, 1, 0.0, 2.0);
    CHECK(odd.alternating_count() == 0);
    CHECK(std::abs(odd.exponent(1.3)) == 0.0);
    const auto even = chi_poly(2, 1, 0.0, 2.0);
    CHECK(even.alternating_count() == 1);
    CHECK(even.exponent(1.5).real() == doctest::Approx(4.0 * 2.0 * 1.5));
  }
}

TEST_SUITE("order at origin") {
  TEST_CASE("examples") {
    for (int h : {0, 1, 5}) CHECK(order_at_origin(1, {h}) == 2 * h);
    CHECK(order_at_origin(3, {0, 0, 0}) == 0);
    for (int a : {0, 1, 3})
      for (int b : {0, 2, 7}) CHECK(order_at_origin(2, {a, b}) == 2 * (2 * a - b));
    CHECK(order_at_origin(3, {1, 1, 1}) == 2 * (3 - 2 + 1));
  }

  TEST_CASE("errors") {
    CHECK_ERROR(order_at_origin(2, {1}), ErrorCode::ShapeMismatch);
    CHECK_ERROR(order_at_origin(1, {-1}), ErrorCode::ShapeMismatch);
  }
}

TEST_SUITE("resolvent") {
  TEST_CASE("discrete spectrum Laplace transform is odd") {
    const auto f = resolvent_laplace(Rational(1), {0, Rational(1, 2), 3, 7});
    CHECK(f.is_odd());
    CHECK(f(-2.5) == doctest::Approx(-f(2.5)));
    double direct = 0.0;
    for (double s : {0.0, 0.5, 3.0, 7.0}) direct += 2.0 * 2.5 / (2.5 * 2.5 - 1.0 + s);
    CHECK(f(2.5) == doctest::Approx(direct));
    CHECK(resolvent_laplace(Rational(4), {}).num.is_zero());
  }
}

TEST_SUITE("heat kernel vs geodesic sum") {
  TEST_CASE("single entry") {
    LengthSpectrum s;
    s.entries = {{1.0, 1, {0.0}, 1.0}};
    const auto chk = heat_to_geodesic_check(s, 0, 3.0);
    CHECK(chk.residual < 1e-8);
    const double alpha = 1.0 / std::pow(1.0 - std::exp(-1.0), 2);
    CHECK(chk.by_summation.real() == doctest::Approx(alpha * std::exp(-4.0)));
  }

  TEST_CASE("empty spectrum") {
    LengthSpectrum s;
    const auto chk = heat_to_geodesic_check(s, 1, 3.0);
    CHECK(chk.by_quadrature == std::complex<double>(0.0));
    CHECK(chk.by_summation == std::complex<double>(0.0));
  }

  TEST_CASE("two entries and n = 2") {
    LengthSpectrum s;
    s.entries = {{0.8, 1, {0.4}, 1.0}, {1.9, 1, {2.0}, std::complex<double>(0.0, -1.0)}};
    for (int j = 0; j <= 2; ++j) CHECK(heat_to_geodesic_check(s, j, 2.5).residual < 1e-8);
    LengthSpectrum t;
    t.n = 2;
    t.entries = {{1.2, 1, {0.4, 1.1}, 1.0}, {1.5, 2, {0.1, 2.0}, 0.5}};
    for (int j = 0; j <= 4; ++j) CHECK(heat_to_geodesic_check(t, j, 3.0).residual < 1e-8);
  }
}
