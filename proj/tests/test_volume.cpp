#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ruelle/volume.hpp"
#include "test_util.hpp"

using namespace ruelle;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFig8Volume = 2.029883212819307;

}  // namespace

TEST_SUITE("dilogarithm") {
  TEST_CASE("special values") {
    CHECK(std::abs(dilog(0.0)) == 0.0);
    CHECK(std::abs(dilog(1.0) - kPi * kPi / 6.0) < 1e-14);
    CHECK(std::abs(dilog(-1.0) + kPi * kPi / 12.0) < 1e-14);
    CHECK(std::abs(dilog(0.5) - (kPi * kPi / 12.0 - std::log(2.0) * std::log(2.0) / 2.0)) < 1e-14);
    // Li_2(i) = -pi^2/48 + i G
    CHECK(std::abs(dilog(cplx(0.0, 1.0)) - cplx(-kPi * kPi / 48.0, 0.915965594177219015)) < 1e-14);
  }

  TEST_CASE("series and quadrature agree inside the unit disc") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> rad(0.0, 0.9);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 50; ++i) {
      const cplx z = std::polar(rad(rng), ang(rng));
      CHECK(std::abs(dilog(z) - oracle::dilog_series(z)) < 1e-13);
      CHECK(std::abs(dilog(z) - oracle::dilog_quadrature(z)) < 1e-12);
    }
  }

  TEST_CASE("quadrature agrees off the cut outside the disc") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
      const cplx z(u(rng), u(rng));
      if (std::abs(z.imag()) < 0.05 && z.real() > 1.0) continue;
      CHECK(std::abs(dilog(z) - oracle::dilog_quadrature(z)) < 1e-11);
    }
  }

  TEST_CASE("reflection formula") {
    std::mt19937_64 rng(63);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      const cplx z(u(rng), u(rng) + 0.1);
      // Li_2(z) + Li_2(1 - z) = pi^2/6 - log z log(1 - z)
      const cplx refl = dilog(z) + dilog(1.0 - z) - (kPi * kPi / 6.0 - std::log(z) * std::log(1.0 - z));
      CHECK(std::abs(refl) < 1e-12);
    }
  }
}

TEST_SUITE("bloch wigner") {
  TEST_CASE("symmetries") {
    std::mt19937_64 rng(64);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
      const cplx z(u(rng), u(rng));
      const double d = bloch_wigner(z);
      CHECK(bloch_wigner(std::conj(z)) == doctest::Approx(-d).epsilon(1e-12));
      CHECK(bloch_wigner(1.0 - z) == doctest::Approx(-d).epsilon(1e-11));
      CHECK(bloch_wigner(1.0 / z) == doctest::Approx(-d).epsilon(1e-11));
      CHECK(bloch_wigner(1.0 / (1.0 - z)) == doctest::Approx(d).epsilon(1e-11));
    }
  }

  TEST_CASE("real axis and singular points") {
    for (double x : {-3.0, -0.5, 0.0, 0.3, 1.0, 2.0, 10.0}) CHECK(bloch_wigner(x) == doctest::Approx(0.0));
    CHECK(is_bloch_wigner_singular(0.0));
    CHECK(is_bloch_wigner_singular(1.0));
    CHECK_FALSE(is_bloch_wigner_singular(cplx(0.5, 0.5)));
    CHECK(bloch_wigner(0.0) == 0.0);
    CHECK(bloch_wigner(1.0) == 0.0);
  }

  TEST_CASE("maximum at the regular tetrahedron") {
    const cplx w = std::polar(1.0, kPi / 3.0);
    CHECK(bloch_wigner(w) == doctest::Approx(oracle::clausen_pi_over_3()).epsilon(1e-14));
    CHECK(bloch_wigner(w) == doctest::Approx(1.0149416064096536).epsilon(1e-14));
    std::mt19937_64 rng(65);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) CHECK(bloch_wigner(cplx(u(rng), u(rng))) <= bloch_wigner(w) + 1e-14);
  }
}

TEST_SUITE("volumes") {
  TEST_CASE("tetrahedra") {
    const cplx w = std::polar(1.0, kPi / 3.0);
    const auto t = tetra_volume(w);
    CHECK_FALSE(t.degenerate);
    CHECK(t.value == doctest::Approx(1.0149416064096536));
    const auto flat = tetra_volume(2.0);
    CHECK(flat.degenerate);
    CHECK(flat.value == 0.0);
    CHECK_ERROR(tetra_volume(cplx(0.5, -0.5)), ErrorCode::InvalidShape);
    // the three edge parameters of one tetrahedron give the same volume
    const cplx z(0.3, 1.2);
    CHECK(tetra_volume(1.0 / (1.0 - z)).value == doctest::Approx(tetra_volume(z).value));
    CHECK(tetra_volume(1.0 - 1.0 / z).value == doctest::Approx(tetra_volume(z).value));
  }

  TEST_CASE("figure-eight complement") {
    const cplx w = std::polar(1.0, kPi / 3.0);
    CHECK(manifold_volume({w, w}) == doctest::Approx(kFig8Volume).epsilon(1e-14));
    CHECK_ERROR(manifold_volume({}), ErrorCode::InvalidShape);
    CHECK_ERROR(manifold_volume({w, 2.0}), ErrorCode::InvalidShape);
    CHECK_ERROR(manifold_volume({w, cplx(0.5, -0.1)}), ErrorCode::InvalidShape);
  }

  TEST_CASE("shape strings") {
    const auto s = parse_shapes("0.5,0.8660254037844386;0.5,0.8660254037844386");
    REQUIRE(s.size() == 2);
    CHECK(manifold_volume(s) == doctest::Approx(kFig8Volume).epsilon(1e-12));
    CHECK(parse_shapes(" 1 , 2 ").at(0) == cplx(1.0, 2.0));
    CHECK(parse_shapes("1,2;").size() == 1);
    CHECK(parse_shapes("3").at(0) == cplx(3.0));
    CHECK(parse_shapes("").empty());
    CHECK_ERROR(manifold_volume(parse_shapes("")), ErrorCode::InvalidShape);
    CHECK_ERROR(parse_shapes("1,2,3"), ErrorCode::Parse);
    CHECK_ERROR(parse_shapes("a,b"), ErrorCode::Parse);
  }
}

TEST_SUITE("l2 torsion") {
  TEST_CASE("examples") {
    CHECK(l2_torsion_log(1, kFig8Volume) == doctest::Approx(0.10768868).epsilon(1e-7));
    CHECK(l2_torsion_log(3, kFig8Volume) == doctest::Approx(3.0 * kFig8Volume / (6.0 * kPi)));
    CHECK(l2_torsion_log(2, 0.0) == 0.0);
    CHECK(l2_torsion_coefficient(1) == Rational(1, 6));
    CHECK(l2_torsion_coefficient(4) == Rational(2, 3));
  }

  TEST_CASE("linear in r and vol") {
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 20; ++i) {
      const double v = u(rng);
      CHECK(l2_torsion_log(2, v) == doctest::Approx(2.0 * l2_torsion_log(1, v)));
      CHECK(l2_torsion_log(1, 2.0 * v) == doctest::Approx(2.0 * l2_torsion_log(1, v)));
    }
  }

  TEST_CASE("errors") {
    CHECK_ERROR(l2_torsion_log(1, -1.0), ErrorCode::InvalidShape);
    CHECK_ERROR(l2_torsion_log(0, 1.0), ErrorCode::IndexOutOfRange);
  }
}
