#include <numeric>

#include "doctest.h"
#include "mm/convolve.hpp"
#include "mm/milnor.hpp"
#include "mm/poly.hpp"
#include "mm/realize.hpp"
#include "mm/tensor.hpp"

using namespace mm;

namespace {

GrothElem kt(long long m) {
  return GrothElem::atom(kummer_torsor_atom(m, +1, Field::C));
}

Int chi(const GrothElem& e) {
  KnowledgeBase kb;
  return realize_complex(theta(e), kb);
}

}  // namespace

TEST_CASE("unit law and commutativity") {
  GrothElem one = GrothElem::scalar(1);
  for (long long m : {2, 3, 5}) {
    CHECK(convolve(kt(m), one) == kt(m));
    CHECK(convolve(one, kt(m)) == kt(m));
  }
  CHECK(convolve(one, one) == one);
  for (long long a = 2; a <= 5; ++a)
    for (long long b = 2; b <= 5; ++b)
      CHECK(convolve(kt(a), kt(b)) == convolve(kt(b), kt(a)));
}

TEST_CASE("convolution multiplies Euler characteristics") {
  for (long long a = 1; a <= 5; ++a)
    for (long long b = 1; b <= 5; ++b)
      CHECK(chi(convolve(kt(a), kt(b))) == Int(a) * b);
}

TEST_CASE("pair value is the edge complement minus the branch torsor") {
  GrothElem v = convolve(kt(4), kt(6));
  Poly2 face;
  face.c[{4, 0}] = 1;
  face.c[{0, 6}] = 1;
  GrothElem expect =
      -GrothElem::atom(face_torsor_atom(face, 1, 0, Field::C)) +
      GrothElem::from_apoly(APoly::gm() * APoly::scalar(2));
  CHECK(v == expect);
}

TEST_CASE("diagonal operator rejects what it cannot reduce") {
  DiagClass d;
  d.dim = 2;
  d.chars = {{Int(2), Int(1)}, {Int(0), Int(3)}};  // entangled first map
  d.theta = {Rat(1), Rat(1)};
  CHECK_THROWS_AS(psi(d), UnsupportedError);

  DiagClass e;
  e.dim = 2;
  e.chars = {{Int(2), Int(0)}, {Int(0), Int(3)}};
  e.theta = {Rat(1), Rat(2)};  // first two weights must tie
  CHECK_THROWS_AS(psi(e), UnsupportedError);

  DiagClass z;
  z.dim = 2;
  z.chars = {{Int(2), Int(0)}, {Int(0), Int(3)}};
  z.theta = {Rat(1), Rat(1)};
  z.coeff = APoly();  // zero coefficient
  CHECK(psi(z).is_zero());

  GrothElem face_class = GrothElem::atom(
      face_torsor_atom(poly_parse("x^2+y^3"), 0, 1, Field::C));
  CHECK_THROWS_AS(convolve(face_class, kt(2)), UnsupportedError);
  GrothElem real_kt = GrothElem::atom(kummer_torsor_atom(2, +1, Field::R));
  CHECK_THROWS_AS(convolve(real_kt, kt(2)), UnsupportedError);
}

TEST_CASE("two-summand decomposition equals the joint computation") {
  for (long long a = 2; a <= 5; ++a) {
    for (long long b = 2; b <= 5; ++b) {
      std::string f = "x^" + std::to_string(a);
      std::string g = "y^" + std::to_string(b);
      TwoVariableSplit r = ts_two(f, g);
      CHECK(r.direct == r.assembled);
      CHECK(chi(r.cross) == chi(r.left) * chi(r.right));
      CHECK(1 - chi(r.direct) == Int(a - 1) * (b - 1));
    }
  }
}

TEST_CASE("a smooth summand leaves a point class") {
  TwoVariableSplit r = ts_two("x", "y^4");
  CHECK(r.assembled == GrothElem::scalar(1));
  CHECK(chi(r.direct) == 1);
  TwoVariableSplit s = ts_two("y^3", "x");  // variable order is free
  CHECK(s.assembled == GrothElem::scalar(1));
}

TEST_CASE("separated-variable validation") {
  CHECK_THROWS_AS(ts_two("x^2", "x^3"), UnsupportedError);
  CHECK_THROWS_AS(ts_two("x^2", "0"), UnsupportedError);
  CHECK_THROWS_AS(ts_two("x^2+y^2", "y^3"), UnsupportedError);
}

TEST_CASE("iterated decomposition matches the direct class") {
  for (auto [N, m] : std::vector<std::pair<long long, long long>>{
           {5, 2}, {7, 3}, {9, 2}, {4, 3}}) {
    AssembleResult r = ts_assemble("x", "y", N, {m});
    CHECK(r.direct == r.assembled);
    CHECK(chi(r.assembled) == 1 - (N - 1) * (m - 1));
    CHECK(r.diagnostic.empty() == (m < N));
  }
}

TEST_CASE("three and four stage decompositions telescope") {
  {
    AssembleResult r = ts_assemble("x", "y", 3, {2, 7});
    CHECK(r.direct == r.assembled);
    CHECK(chi(r.assembled) == 1 - (3 - 1) * (2 - 1));
    CHECK(r.pieces.size() == 5);
    // The branch-locus class and the last convolution correction coincide.
    CHECK(r.pieces[2] == r.pieces.back());
  }
  {
    AssembleResult r = ts_assemble("x", "y", 4, {3, 9, 10});
    CHECK(r.direct == r.assembled);
    CHECK(chi(r.assembled) == 1 - (4 - 1) * (3 - 1));
  }
  {
    // Ordering hypothesis violated: still flagged, still exact here.
    AssembleResult r = ts_assemble("x", "y", 9, {2, 5});
    CHECK_FALSE(r.diagnostic.empty());
    CHECK(r.direct == r.assembled);
  }
}

TEST_CASE("degenerate exponent data is rejected") {
  CHECK_THROWS_AS(ts_assemble("x", "y", 5, {}), UnsupportedError);
  CHECK_THROWS_AS(ts_assemble("x", "y", 5, {3, 3}), UnsupportedError);
  CHECK_THROWS_AS(ts_assemble("x", "y", 5, {1}), UnsupportedError);
  CHECK_THROWS_AS(ts_assemble("x", "y", 1, {2}), UnsupportedError);
  CHECK_THROWS_AS(ts_assemble("x^2", "y", 5, {2}), UnsupportedError);
  CHECK_THROWS_AS(ts_assemble("x", "x", 5, {2}), UnsupportedError);
}

TEST_CASE("field restriction distributes over the assembly") {
  TwoVariableSplit r = ts_two("x^3", "y^2");
  CHECK(xi(r.assembled) == xi(r.left) + xi(r.right) - xi(r.cross));
  CHECK(xi(r.direct) == xi(r.assembled));
}
