#include <numeric>

#include "doctest.h"
#include "mm/milnor.hpp"
#include "mm/poly.hpp"
#include "mm/tensor.hpp"

using namespace mm;

TEST_CASE("three-term sextic over the reals") {
  Poly2 f = poly_parse("x^6+x^2*y^2+y^6");
  TensorElem t = milnor_integral(f, Field::R);
  // The two symmetric boundary points share cell, weight, and grading, so
  // they merge: 1 merged boundary pair + 2 axis rays + 1 interior-vertex
  // ray + 2 edge points.
  CHECK(t.parts.size() == 6);

  GrothElem fb = motivic_fiber_b(f, Field::R);
  CHECK(fb.str() == "2*[{x^6+x^2y^2=1}] - [Gm]*[{x^2=1}]");

  // The curve atom keeps its deck-action parity tags.
  bool saw_curve = false, saw_kummer = false;
  for (const auto& [m, coeff] : fb.terms) {
    for (const Atom& a : m) {
      CHECK(a.field == Field::R);
      if (a.kind == Atom::Kind::CurveVariety) {
        saw_curve = true;
        CHECK(poly_str(a.face) == "x^6+x^2y^2");
        CHECK(a.par1 == 1);
        CHECK(a.par2 == 0);
        CHECK(coeff == APoly::scalar(2));
      }
      if (a.kind == Atom::Kind::KummerVariety) {
        saw_kummer = true;
        CHECK(a.order == 2);
        CHECK(coeff == -APoly::gm());
      }
    }
  }
  CHECK(saw_curve);
  CHECK(saw_kummer);
}

TEST_CASE("cusp over the complex numbers") {
  Poly2 f = poly_parse("x^3+y^2");
  GrothElem pre = eb(milnor_integral(f, Field::C));
  GrothElem expect =
      GrothElem::atom(kummer_torsor_atom(3, +1, Field::C)) +
      GrothElem::atom(kummer_torsor_atom(2, +1, Field::C)) +
      GrothElem::atom(face_torsor_atom(f, 0, 1, Field::C)) -
      GrothElem::from_apoly(APoly::gm());
  CHECK(pre == expect);
  GrothElem fb = motivic_fiber_b(f, Field::C);
  CHECK(fb == GrothElem::atom(curve_variety_atom(f, 0, 1, Field::C)) -
                  GrothElem::from_apoly(APoly::gm()));
}

TEST_CASE("real branch families outside the supported class are refused") {
  // The edge equation 1 + s of the cusp has a real root: branches through
  // it would need real-closed cancellation data we do not model.
  CHECK_THROWS_AS(milnor_integral(poly_parse("x^3+y^2"), Field::R),
                  UnsupportedError);
}

TEST_CASE("monomial family") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      Poly2 f;
      f.c[{p, q}] = 1;
      long long m = std::gcd(p, q);
      GrothElem fb = motivic_fiber_b(f, Field::C);
      GrothElem expect =
          -GrothElem::atom(kummer_variety_atom(m, +1, Field::C))
               .times(APoly::gm());
      CHECK(fb == expect);
      CHECK(motivic_fiber_g(f, Field::C) == fb.shifted(-2));
    }
  }
}

TEST_CASE("monomial Euler pairing closed versus open") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      Poly2 f;
      f.c[{p, q}] = 1;
      long long m = std::gcd(p, q);
      Int mp = m % 2 == 1 ? 1 : 2;
      TConvexResult r = tconvex_chi(f);
      CHECK(r.chi_closed == 2 * mp);
      CHECK(r.chi_open == -2 * mp);
      CHECK(r.relation_ok);
    }
  }
}

TEST_CASE("one-variable inputs take the short path") {
  Poly2 f = poly_parse("x^4");
  GrothElem fb = motivic_fiber_b(f, Field::C);
  CHECK(fb == GrothElem::atom(kummer_variety_atom(4, +1, Field::C)));
}

TEST_CASE("inconvenient or degenerate inputs are refused") {
  CHECK_THROWS_AS(milnor_integral(poly_parse("x^2+x*y"), Field::C),
                  UnsupportedError);
  CHECK_THROWS_AS(milnor_integral(poly_parse("x^2+2x*y+y^2"), Field::C),
                  UnsupportedError);
}
