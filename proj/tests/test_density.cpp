#include "generators.hpp"

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/volumes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypack;
using hypack::testing::Gen;
using std::numbers::pi;

TEST_CASE("height reference values") {
  CHECK(height(5.19550) == doctest::Approx(1.2225076275897665).epsilon(1e-13));
  Gen g(103);
  for (int k = 0; k < 200; ++k) {
    const double p = g.uniform(5.11, 5.99);
    const double c = std::cos(2 * pi / p);
    CHECK(height(p) == doctest::Approx(0.5 * std::acosh(c / (3 * c - 1))).epsilon(1e-12));
  }
}

TEST_CASE("height is half the distance of two truncating planes") {
  Gen g(107);
  for (int k = 0; k < 50; ++k) {
    const double p = g.uniform(5.11, 5.999);
    const RegularSimplex4 m = build_simplex(p_to_s(p));
    const double d = plane_plane_relation(m.polar_forms[0], m.polar_forms[3]).distance;
    CHECK(height(p) == doctest::Approx(d / 2).epsilon(1e-10));
  }
}

TEST_CASE("height limits") {
  CHECK(height(6.0 - 1e-9) < 1e-4);
  CHECK(height(6.0 - 1e-9) > 0.0);
  CHECK(height(p_lower() + 1e-6) > height(p_lower() + 1e-3));
  CHECK_THROWS_AS(height(p_lower() + 1e-10), DomainError);
  CHECK_THROWS_AS(height(7.0), DomainError);
}

TEST_CASE("density report at the reference optimum") {
  const DensityReport r = density(5.19550);
  CHECK(r.p == 5.19550);
  CHECK(r.s == p_to_s(5.19550));
  CHECK(r.delta == doctest::Approx(0.75864825042005329).epsilon(1e-12));
  CHECK(r.h == doctest::Approx(1.2225076275897665).epsilon(1e-13));
  CHECK(r.vol3_base == base_orthoscheme_volume(5.19550));
  CHECK(r.vol4_orthoscheme == truncated_orthoscheme4_volume(5.19550));
  CHECK(r.vol4_hyperball_piece == hyperball_piece_volume({4, r.vol3_base, r.h}));
  CHECK(r.delta == r.vol4_hyperball_piece / r.vol4_orthoscheme);
}

TEST_CASE("density is a proper fraction on the domain") {
  Gen g(109);
  for (int k = 0; k < 300; ++k) {
    const DensityReport r = density(g.p());
    CHECK(r.delta > 0.0);
    CHECK(r.delta < 1.0);
  }
}

TEST_CASE("density limits at the endpoints") {
  const double ideal = density(p_lower() + 1e-6).delta;
  CHECK(ideal == doctest::Approx(0.7304646935).epsilon(1e-8));
  CHECK(ideal > 0.72);
  CHECK(ideal < 0.75);
  // Near p = 6 the density falls like sqrt(6 - p); at the guard it is still
  // about 4e-5.
  const double vanishing = density(6.0 - 1e-9).delta;
  CHECK(vanishing == doctest::Approx(4.0229e-5).epsilon(1e-3));
  CHECK(density(6.0 - 1e-7).delta == doctest::Approx(10 * vanishing).epsilon(1e-3));
  CHECK_THROWS_AS(density(6.0 - 1e-10), DomainError);
  CHECK_THROWS_AS(density(p_lower()), DomainError);
}

TEST_CASE("maximize") {
  const OptimumResult r = maximize(1e-10);
  CHECK(r.p_opt == doctest::Approx(5.1954422).epsilon(1e-7));
  CHECK(r.delta_opt == doctest::Approx(0.758648256741).epsilon(1e-11));
  CHECK(r.bracket_width <= 1e-10);
  CHECK(r.iterations > 0);
  CHECK(r.delta_opt >= density(5.19550).delta);
  CHECK(r.delta_opt >= density(r.p_opt + 1e-5).delta);
  CHECK(r.delta_opt >= density(r.p_opt - 1e-5).delta);
}

TEST_CASE("maximize is insensitive to the bracket and tolerance") {
  const OptimumResult a = maximize(1e-10);
  const OptimumResult b = maximize(1e-10, 5.15, 5.3);
  const OptimumResult c = maximize(1e-6);
  CHECK(std::abs(a.p_opt - b.p_opt) < 1e-6);
  CHECK(std::abs(a.p_opt - c.p_opt) < 1e-5);
  CHECK(std::abs(a.delta_opt - c.delta_opt) < 1e-11);
  CHECK_THROWS_AS(maximize(1e-16), std::invalid_argument);
  CHECK_THROWS_AS(maximize(0.1), std::invalid_argument);
}

TEST_CASE("density has one interior maximum") {
  const auto rows = sweep(0.0, 10.0, 2000);
  int changes = 0;
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const double d1 = rows[i - 1].delta - rows[i - 2].delta;
    const double d2 = rows[i].delta - rows[i - 1].delta;
    if ((d1 > 0) != (d2 > 0)) ++changes;
  }
  CHECK(changes == 1);
}

TEST_CASE("sweep clips to the guarded domain") {
  const auto rows = sweep(0.0, 10.0, 11);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().p == doctest::Approx(p_lower() + kEvalGuard).epsilon(1e-15));
  CHECK(rows.back().p == kPUpper - kEvalGuard);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].p > rows[i - 1].p);
  const auto again = sweep(0.0, 10.0, 11);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].delta == again[i].delta);
    CHECK(rows[i].delta == density(rows[i].p).delta);
  }
  CHECK_THROWS(sweep(5.5, 5.6, 1));
}

TEST_CASE("larger hyperballs do not give denser packings") {
  const MonotonicityWitness w = monotonicity_witness();
  CHECK(w.h2 > w.h1);
  CHECK(w.d2 < w.d1);
}
