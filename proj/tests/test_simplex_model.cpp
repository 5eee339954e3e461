#include "generators.hpp"

#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypack;
using hypack::testing::Gen;
using std::numbers::pi;

TEST_CASE("domain endpoints") {
  CHECK(p_lower() == doctest::Approx(5.1042993121195404).epsilon(1e-15));
  CHECK(std::abs(p_upper_computed() - 6.0) < 1e-14);
  CHECK(s_upper() == doctest::Approx(1.6329931618554521).epsilon(1e-15));
}

TEST_CASE("parameter conversions") {
  CHECK(s_to_p(1.2) == doctest::Approx(5.289406944691298).epsilon(1e-14));
  CHECK(p_to_s(5.5) == doctest::Approx(1.367431418481548).epsilon(1e-13));
  CHECK(p_to_s(5.19550) == doctest::Approx(1.106739221481115).epsilon(1e-13));
  CHECK(std::abs(s_to_p(p_to_s(5.5)) - 5.5) < 1e-12);
  CHECK(p_to_s(p_lower() + 1e-12) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(p_to_s(6.0 - 1e-12) == doctest::Approx(s_upper()).epsilon(1e-9));
  CHECK(s_to_p(1.0 + 1e-14) == doctest::Approx(p_lower()).epsilon(1e-9));
  CHECK(s_to_p(s_upper() - 1e-14) == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("conversions reject the closed endpoints and beyond") {
  CHECK_THROWS_AS(p_to_s(p_lower()), DomainError);
  CHECK_THROWS_AS(p_to_s(6.0), DomainError);
  CHECK_THROWS_AS(p_to_s(7.0), DomainError);
  CHECK_THROWS_AS(s_to_p(1.0), DomainError);
  CHECK_THROWS_AS(s_to_p(2.0), DomainError);
  CHECK_THROWS_AS(SimplexParameter::from_p(std::nan("")), DomainError);
}

TEST_CASE("conversions are monotone and mutually inverse") {
  Gen g(47);
  for (int k = 0; k < 500; ++k) {
    const double a = g.p(), b = g.p();
    if (a == b) continue;
    CHECK((p_to_s(a) < p_to_s(b)) == (a < b));
    CHECK(std::abs(s_to_p(p_to_s(a)) - a) < 1e-9);
    const SimplexParameter sp = SimplexParameter::from_p(a);
    CHECK(sp.s() == p_to_s(a));
  }
}

TEST_CASE("simplex vertices, centres and pairwise products") {
  const double s = 1.2;
  const RegularSimplex4 g = build_simplex(s);
  REQUIRE(g.vertices.size() == 5);
  CHECK(g.centers[0].coords() == Coords::Unit(5, 0));
  for (const auto& b : g.vertices) CHECK(bilinear_form(b, b) == doctest::Approx(s * s - 1).epsilon(1e-14));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      CHECK(std::abs(bilinear_form(g.vertices[i], g.vertices[j]) - (-1.0 - s * s / 4)) < 1e-12);
    }
  }
  const Coords p1{{1.0, -s * std::sqrt(10.0) / 16, 0.0, s * std::sqrt(5.0) / 16, s / 16}};
  const Coords p2{{1.0, 0.0, 0.0, s * std::sqrt(5.0) / 6, s / 6}};
  const Coords p3{{1.0, 0.0, s * std::sqrt(10.0) / 8, s * std::sqrt(5.0) / 8, 3 * s / 8}};
  CHECK((g.centers[1].coords() - p1).norm() < 1e-15);
  CHECK((g.centers[2].coords() - p2).norm() < 1e-15);
  CHECK((g.centers[3].coords() - p3).norm() < 1e-15);
}

TEST_CASE("first orthoscheme face form") {
  Gen g(53);
  for (int k = 0; k < 20; ++k) {
    const double s = g.s();
    const RegularSimplex4 m = build_simplex(s);
    const double r = std::sqrt(16.0 - s * s);
    const Coords expected{{s / r, std::sqrt(10.0) / r, 0.0, std::sqrt(5.0) / r, 1.0 / r}};
    // Equal up to the orientation of the coordinate axes.
    const Coords u = m.face_forms[0].coeffs();
    CHECK((u.cwiseAbs() - expected).norm() < 1e-12);
  }
}

TEST_CASE("Gram matrix of the orthoscheme faces") {
  Gen g(59);
  for (int k = 0; k < 20; ++k) {
    const double s = g.s();
    const RegularSimplex4 m = build_simplex(s);
    Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(5, 5);
    expected(0, 1) = expected(1, 0) = -std::sqrt(10.0) / std::sqrt(16.0 - s * s);
    for (int i = 1; i < 4; ++i) expected(i, i + 1) = expected(i + 1, i) = -0.5;
    CHECK((gram_of_forms(m.face_forms).entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Gram matrix of the simplex facets") {
  Gen g(61);
  for (int k = 0; k < 20; ++k) {
    const double s = g.s();
    const Eigen::MatrixXd gs = gram_of_forms(build_simplex(s).facet_forms).entries();
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i != j) CHECK(std::abs(gs(i, j) - (s * s + 4) / (s * s - 16)) < 1e-12);
      }
    }
  }
}

TEST_CASE("Gram matrix of the base cell") {
  Gen g(67);
  for (int k = 0; k < 20; ++k) {
    const double p = g.p();
    const RegularSimplex4 m = build_simplex(p_to_s(p));
    Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(4, 4);
    expected(0, 1) = expected(1, 0) = -std::cos(pi / p);
    expected(1, 2) = expected(2, 1) = -0.5;
    expected(2, 3) = expected(3, 2) = -0.5;
    CHECK((gram_of_forms(m.base_forms).entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("single form Gram matrix") {
  const RegularSimplex4 m = build_simplex(1.3);
  const std::vector<HyperplaneForm> one{m.face_forms[2]};
  const GramMatrix g = gram_of_forms(one);
  CHECK(g.size() == 1);
  CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Gram matrix rejects malformed input") {
  CHECK_THROWS(GramMatrix(Eigen::MatrixXd::Zero(2, 3)));
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS(GramMatrix(bad));
  const std::vector<HyperplaneForm> raw{HyperplaneForm::raw(Coords{{0.0, 2.0, 0.0, 0.0, 0.0}})};
  CHECK_THROWS(gram_of_forms(raw));
}

TEST_CASE("feet lie on the truncating plane and are proper") {
  Gen g(71);
  for (int k = 0; k < 50; ++k) {
    const RegularSimplex4 m = build_simplex(g.s());
    for (const auto& q : m.feet) {
      CHECK(std::abs(bilinear_form(m.polar_forms[0], q)) < 1e-12);
      CHECK(classify_point(q) == PointClass::Proper);
    }
    for (const auto& q : m.base_cell) CHECK(q.dim() == 3);
  }
}

TEST_CASE("truncating planes are pairwise equidistant") {
  Gen g(73);
  for (int k = 0; k < 20; ++k) {
    const RegularSimplex4 m = build_simplex(g.s());
    const double d0 = plane_plane_relation(m.polar_forms[0], m.polar_forms[1]).distance;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        CHECK(std::abs(plane_plane_relation(m.polar_forms[i], m.polar_forms[j]).distance - d0) < 1e-12);
      }
    }
  }
}

TEST_CASE("simplex dihedral angle is twice the orthoscheme angle") {
  CHECK(dihedral_consistency(5.5) <= 1e-12);
  CHECK(dihedral_consistency(5.2) <= 1e-12);
  Gen g(79);
  for (int k = 0; k < 100; ++k) CHECK(dihedral_consistency(g.p()) <= 1e-12);
  const double s2 = 8.0 / 3.0;
  CHECK((s2 + 4) / (s2 - 16) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("build_simplex rejects s outside (1, sqrt(8/3))") {
  CHECK_THROWS_AS(build_simplex(1.0), DomainError);
  CHECK_THROWS_AS(build_simplex(1.7), DomainError);
}
