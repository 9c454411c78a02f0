#include "doctest.h"
#include "mm/newton.hpp"
#include "mm/poly.hpp"

using namespace mm;

TEST_CASE("staircase hull of the three-term sextic") {
  NewtonPolygon np = newton_polygon(poly_parse("x^6+x^2*y^2+y^6"));
  REQUIRE(np.vertices.size() == 3);
  CHECK(np.vertices[0].a == 6);
  CHECK(np.vertices[0].b == 0);
  CHECK(np.vertices[1].a == 2);
  CHECK(np.vertices[1].b == 2);
  CHECK(np.vertices[2].a == 0);
  CHECK(np.vertices[2].b == 6);
  REQUIRE(np.edges.size() == 2);
  CHECK(np.edges[0].w1 == 1);
  CHECK(np.edges[0].w2 == 2);
  CHECK(np.edges[0].d == 6);
  CHECK(np.edges[1].w1 == 2);
  CHECK(np.edges[1].w2 == 1);
  CHECK(poly_str(np.edges[0].face) == "x^6+x^2y^2");
  CHECK(np.convenient());
  CHECK(is_nondegenerate(np));
}

TEST_CASE("interior points and dominated monomials do not matter") {
  NewtonPolygon np = newton_polygon(poly_parse("y^3+x^2+x^7"));
  REQUIRE(np.vertices.size() == 2);
  CHECK(np.vertices[0].a == 2);
  CHECK(np.vertices[1].b == 3);
  REQUIRE(np.edges.size() == 1);
  CHECK(poly_str(np.edges[0].face) == "x^2+y^3");
  CHECK(np.x_power == 2);
  CHECK(np.y_power == 3);
}

TEST_CASE("Milnor numbers from lattice data") {
  CHECK(kouchnirenko_mu(poly_parse("x^3+y^2")) == 2);
  CHECK(kouchnirenko_mu(poly_parse("x^6+x^2*y^2+y^6")) == 13);
  CHECK(kouchnirenko_mu(poly_parse("x^4+y^4")) == 9);
  CHECK(kouchnirenko_mu(poly_parse("x^2+y^2")) == 1);
  CHECK(kouchnirenko_mu(poly_parse("y^5+x^3")) == 8);
  CHECK(kouchnirenko_mu(poly_parse("x+y^7")) == 0);
}

TEST_CASE("torus Euler characteristic of a curve from its hull") {
  // Two times the lattice area of the hull against the origin, negated.
  CHECK(khovanskii_torus_chi(poly_parse("x^3+y^2")) == -6);
  CHECK(khovanskii_torus_chi(poly_parse("x+y")) == -1);
  CHECK(khovanskii_torus_chi(poly_parse("x^6+x^2*y^2+y^6")) == -36);
}

TEST_CASE("affine curve Euler characteristic adds axis points") {
  // The argument is the left-hand side of {g = 1}.
  CHECK(affine_curve_chi(poly_parse("x^3+y^2")) == -1);
  CHECK(affine_curve_chi(poly_parse("x^2")) == 2);
  CHECK(affine_curve_chi(poly_parse("x*y")) == 0);
  CHECK(affine_curve_chi(poly_parse("x^6+x^2*y^2")) == -6);
}

TEST_CASE("degenerate faces are detected") {
  // (x+y)^2 restricted to its only edge has a double root.
  NewtonPolygon np = newton_polygon(poly_parse("x^2+2x*y+y^2"));
  CHECK_FALSE(is_nondegenerate(np));
  CHECK(is_nondegenerate(newton_polygon(poly_parse("x^2+3x*y+y^2"))));
}

TEST_CASE("inputs outside the local setting are rejected") {
  CHECK_THROWS_AS(newton_polygon(poly_parse("0")), UnsupportedError);
  CHECK_THROWS_AS(newton_polygon(poly_parse("1+x")), UnsupportedError);
  CHECK_THROWS_AS(kouchnirenko_mu(poly_parse("x^2")), UnsupportedError);
}
