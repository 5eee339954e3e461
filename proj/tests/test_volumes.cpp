#include "generators.hpp"

#include "hypack/errors.hpp"
#include "hypack/oracles.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/volumes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace hypack;
using hypack::testing::Gen;
using std::numbers::pi;

TEST_CASE("hyperball pieces match quadrature") {
  Gen g(83);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 0; k < 30; ++k) {
      const double a = g.uniform(0.0, 2.0);
      const double h = g.uniform(0.0, 3.0);
      const double closed = hyperball_piece_volume({n, a, h});
      const double quad = oracle::hyperball_piece_quadrature(n, a, h);
      CHECK(std::abs(closed - quad) <= 1e-12 * std::max(1.0, quad));
    }
  }
}

TEST_CASE("hyperball piece reference values") {
  CHECK(hyperball_piece_volume({3, 1.0, 1.0}) == doctest::Approx(1.4067151019617548).epsilon(1e-15));
  CHECK(hyperball_piece_volume({4, 1.0, 1.0}) == doctest::Approx(1.7162238058503425).epsilon(1e-15));
  CHECK(hyperball_piece_volume({4, 2.0, 0.0}) == 0.0);
  CHECK(hyperball_piece_volume({5, 0.0, 1.0}) == 0.0);
}

TEST_CASE("hyperball piece is linear in the base and increasing in the height") {
  Gen g(89);
  for (int k = 0; k < 50; ++k) {
    const int n = g.integer(3, 5);
    const double a = g.uniform(0.1, 2.0), h = g.uniform(0.0, 2.0);
    const double v = hyperball_piece_volume({n, a, h});
    CHECK(hyperball_piece_volume({n, 3 * a, h}) == doctest::Approx(3 * v).epsilon(1e-14));
    CHECK(hyperball_piece_volume({n, a, h + 0.01}) > v);
  }
}

TEST_CASE("hyperball piece rejects bad input") {
  CHECK_THROWS_AS(hyperball_piece_volume({2, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hyperball_piece_volume({6, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hyperball_piece_volume({4, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hyperball_piece_volume({4, 1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hyperball_piece_volume({4, 1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("orthoscheme angles") {
  const OrthoschemeAngles3 a(pi / 5.5, pi / 3, pi / 3);
  CHECK(a.theta() == doctest::Approx(0.39516164851088447).epsilon(1e-14));
  CHECK_THROWS_AS(OrthoschemeAngles3(-0.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(OrthoschemeAngles3(1.0, 2.0, 1.0), DomainError);
  // Lambert cube: cos^2 a12 < sin^2 a01 sin^2 a23.
  CHECK_THROWS_AS(OrthoschemeAngles3(1.4, 1.4, 1.4), DomainError);
}

TEST_CASE("3-orthoscheme volume reference values") {
  CHECK(base_orthoscheme_volume(5.5) == doctest::Approx(0.010308973870038196).epsilon(1e-13));
  // Regular ideal tetrahedron split into 24 orthoschemes (pi/3, pi/3, pi/6).
  const double ideal = orthoscheme3_volume(OrthoschemeAngles3(pi / 3, pi / 3, pi / 6));
  CHECK(24 * ideal == doctest::Approx(1.0149416064096536).epsilon(1e-13));
}

TEST_CASE("3-orthoscheme volume is symmetric under swapping the outer angles") {
  Gen g(97);
  for (int k = 0; k < 100; ++k) {
    const double a = g.uniform(0.2, 1.2), b = g.uniform(0.2, 1.2), c = g.uniform(0.8, 1.4);
    const double sa = std::sin(a), sc = std::sin(c);
    if (std::cos(b) * std::cos(b) <= sa * sa * sc * sc) continue;
    const double v1 = orthoscheme3_volume(OrthoschemeAngles3(a, b, c));
    const double v2 = orthoscheme3_volume(OrthoschemeAngles3(c, b, a));
    CHECK(std::abs(v1 - v2) < 1e-14);
  }
}

TEST_CASE("3-orthoscheme volume is smooth across the small-theta switch") {
  // theta tends to 0 at the lower end of the domain; locate theta = 0.05.
  auto theta = [](double p) { return OrthoschemeAngles3(pi / p, pi / 3, pi / 3).theta(); };
  double a = p_lower() + 1e-9, b = 6.0 - 1e-9;
  for (int i = 0; i < 100; ++i) {
    const double m = 0.5 * (a + b);
    (theta(m) < 0.05 ? a : b) = m;
  }
  // Second differences across the switch stay on one smooth curve.
  const double h = 1e-6;
  auto d2 = [&](int k) {
    return base_orthoscheme_volume(a + (k + 1) * h) - 2 * base_orthoscheme_volume(a + k * h) +
           base_orthoscheme_volume(a + (k - 1) * h);
  };
  const double ref = d2(-3);
  CHECK(ref > 0.0);
  for (int k = -2; k <= 3; ++k) CHECK(std::abs(d2(k) - ref) < 0.01 * ref);
}

TEST_CASE("3-orthoscheme volume vanishes with theta") {
  const double v1 = base_orthoscheme_volume(p_lower() + 1e-6);
  const double v2 = base_orthoscheme_volume(p_lower() + 1e-9);
  CHECK(v1 > 0.0);
  CHECK(v2 > 0.0);
  CHECK(v2 < v1);
  CHECK(v2 < 1e-11);
  const OrthoschemeAngles3 flat(std::acos(std::sqrt(2.0 / 3.0)), pi / 3, pi / 3);
  CHECK(flat.theta() < 1e-7);
  CHECK(orthoscheme3_volume(flat) < 1e-20);
}

TEST_CASE("3-orthoscheme volume at the upper end is the ideal one") {
  const double ideal = orthoscheme3_volume(OrthoschemeAngles3(pi / 6, pi / 3, pi / 3));
  CHECK(base_orthoscheme_volume(6.0 - 1e-9) == doctest::Approx(ideal).epsilon(1e-7));
}

TEST_CASE("4-orthoscheme volume") {
  CHECK(truncated_orthoscheme4_volume(5.5) == doctest::Approx(0.009969297374837732).epsilon(1e-14));
  CHECK(truncated_orthoscheme4_volume(6.0 - 1e-12) ==
        doctest::Approx(0.018277045187202516).epsilon(1e-10));
  CHECK(schlaefli_constant4() == doctest::Approx(16 * std::tgamma(2.5) / std::pow(pi, 2.5)).epsilon(1e-15));
  Gen g(101);
  for (int k = 0; k < 100; ++k) {
    const double a = g.p(), b = g.p();
    if (a < b) CHECK(truncated_orthoscheme4_volume(a) < truncated_orthoscheme4_volume(b));
  }
  CHECK_THROWS_AS(truncated_orthoscheme4_volume(6.0), DomainError);
  CHECK_THROWS_AS(base_orthoscheme_volume(5.0), DomainError);
}
