#include "doctest.h"
#include "mm/milnor.hpp"
#include "mm/poly.hpp"
#include "mm/tensor.hpp"

using namespace mm;

namespace {

Summand on_interval(std::optional<Rat> lo, bool lo_strict, std::optional<Rat> hi,
                    bool hi_strict, const GrothElem& res) {
  Summand s;
  s.res = res;
  s.cell.cells.push_back(interval_cell(lo, lo_strict, hi, hi_strict));
  s.sig_lin = {Rat(1)};
  return s;
}

}  // namespace

TEST_CASE("retractions weigh cells by their Euler characteristic") {
  GrothElem one = GrothElem::scalar(1);
  TensorElem ray;
  ray.parts.push_back(on_interval(Rat(0), true, std::nullopt, false, one));
  CHECK(eb(ray).is_zero());                    // chi_b of the open ray is 0
  GrothElem g = eg(ray);
  CHECK(g == -GrothElem::scalar(1).times(APoly::apow(0)));  // chi_g is -1

  TensorElem open01;
  open01.parts.push_back(on_interval(Rat(0), true, Rat(1), true, one));
  CHECK(eb(open01) == -one);
  CHECK(eg(open01) == -one);

  TensorElem pt;
  pt.parts.push_back(on_interval(Rat(1), false, Rat(1), false, one));
  CHECK(eb(pt) == one);
  CHECK(eg(pt) == one);
}

TEST_CASE("geometric retraction applies the volume normalization") {
  GrothElem res = GrothElem::atom(kummer_torsor_atom(3, +1, Field::C));
  Summand s = on_interval(Rat(1), false, Rat(1), false, res);
  s.k = 1;
  s.l = 1;
  TensorElem t;
  t.parts.push_back(s);
  CHECK(eb(t) == res);
  CHECK(eg(t) == res.shifted(-2));
}

TEST_CASE("presentation relations collapse under both retractions") {
  TensorElem pm1 = p_minus_one();
  CHECK(eb(pm1).is_zero());
  CHECK(eg(pm1).is_zero());
  // The interval class is congruent to the unit, not to zero: half-open
  // intervals have bounded Euler characteristic zero, leaving the endpoint.
  for (int g = 1; g <= 3; ++g) {
    TensorElem pg = p_gamma(Rat(g));
    CHECK(eb(pg) == GrothElem::scalar(1));
    CHECK(eg(pg) == GrothElem::from_apoly(APoly::apow(-1)));
  }
}

TEST_CASE("coefficient map of the value-group relation") {
  TPoly t = hm(p_gamma(Rat(1)), 2);
  REQUIRE(t.size() == 2);
  CHECK(t.at(-1) == GrothElem::from_apoly(APoly::gm()));
  CHECK(t.at(-2) == GrothElem::from_apoly(APoly::apow(1)));
  // Evaluating T -> [A] collapses the relation to the unit.
  CHECK(eta(t) == GrothElem::scalar(1));
}

TEST_CASE("deformation evaluation is the identity on the relations") {
  for (int g = 1; g <= 3; ++g)
    for (long long m = 1; m <= 6; ++m)
      CHECK(eta(hm(p_gamma(Rat(g)), m)) == GrothElem::scalar(1));
}

TEST_CASE("coefficient map rejects unbounded finite pieces") {
  TensorElem ray;
  ray.parts.push_back(on_interval(Rat(0), true, std::nullopt, false,
                                  GrothElem::scalar(1)));
  CHECK_THROWS_AS(hm(ray, 1), UnsupportedError);
  ray.parts[0].at_infinity = true;  // boundary pieces are skipped instead
  CHECK(hm(ray, 1).empty());
}

TEST_CASE("the two retractions differ by the volume twist on integrals") {
  for (const char* s : {"x^3+y^2", "x^2*y^2", "x^6+x^2*y^2+y^6"}) {
    TensorElem t = milnor_integral(poly_parse(s), Field::C);
    CHECK(eg(t) == eb(t).shifted(-2));
  }
}

TEST_CASE("graded product adds weights and gradings") {
  GrothElem a = GrothElem::atom(kummer_torsor_atom(2, +1, Field::C));
  GrothElem b = GrothElem::atom(kummer_torsor_atom(3, +1, Field::C));
  Summand sa = on_interval(Rat(1), false, Rat(1), false, a);
  sa.k = 1;
  Summand sb = on_interval(Rat(2), false, Rat(2), false, b);
  sb.l = 1;
  TensorElem ta, tb;
  ta.parts.push_back(sa);
  tb.parts.push_back(sb);
  TensorElem tp = ta * tb;
  REQUIRE(tp.parts.size() == 1);
  const Summand& p = tp.parts[0];
  CHECK(p.k == 1);
  CHECK(p.l == 1);
  CHECK(p.res == a * b);
  CHECK(p.cell.ambient() == 2);
  CHECK(p.sigma({Rat(1), Rat(2)}) == Rat(3));
}
