#include "doctest.h"
#include "mm/oracle.hpp"
#include "mm/poly.hpp"

using namespace mm;

namespace {

QPoly q(std::initializer_list<long long> cs) {
  QPoly p;
  for (long long c : cs) p.push_back(Rat(c));
  return p;
}

}  // namespace

TEST_CASE("dense rational polynomial arithmetic") {
  QPoly p = q({-1, 0, 1});  // x^2 - 1
  CHECK(qpoly_deg(p) == 2);
  CHECK(qpoly_eval(p, Rat(2)) == Rat(3));
  CHECK(qpoly_derivative(p) == q({0, 2}));
  CHECK(qpoly_from(Poly1{Int(3), Int(0), Int(0)}) == q({3}));
  CHECK(qpoly_deg(qpoly_trim(q({0, 0}))) == -1);
}

TEST_CASE("gcd is monic and squarefree parts divide exactly") {
  CHECK(qpoly_gcd(q({-1, 0, 1}), q({1, -2, 1})) == q({-1, 1}));
  CHECK(qpoly_gcd(q({1, -2, 1}), q({})) == q({1, -2, 1}) /* monic already */);
  // x (x-1)^2 -> x^2 - x
  CHECK(qpoly_squarefree_part(q({0, 1, -2, 1})) == q({0, -1, 1}));
  CHECK(qpoly_squarefree_part(q({-1, 0, 1})) == q({-1, 0, 1}));
}

TEST_CASE("real root counting by sign variations") {
  CHECK(real_root_count(q({-1, 0, 1})) == 2);   // x^2-1
  CHECK(real_root_count(q({1, 0, 1})) == 0);    // x^2+1
  CHECK(real_root_count(q({0, -2, 1, 1})) == 3);  // x(x-1)(x+2)
  CHECK(real_root_count(q({3, -5, 1, 1})) == 2);  // (x-1)^2 (x+3), distinct
  CHECK(real_root_count(q({-6, 11, -6, 1})) == 3);  // (x-1)(x-2)(x-3)
  CHECK(real_root_count(q({5})) == 0);
  CHECK(real_root_count(Poly1{Int(-2), Int(0), Int(1)}) == 2);
}

TEST_CASE("isolating intervals separate the distinct roots") {
  for (const QPoly& p : {q({-2, 0, 1}), q({0, -2, 1, 1}), q({3, -5, 1, 1}),
                         q({-6, 11, -6, 1}), q({1, 0, 1})}) {
    auto iso = isolate_real_roots(p);
    QPoly sf = qpoly_squarefree_part(p);
    CHECK(static_cast<int>(iso.size()) == real_root_count(p));
    for (size_t i = 0; i < iso.size(); ++i) {
      const auto& [lo, hi] = iso[i];
      CHECK(lo < hi);
      // Endpoints are non-roots, so a simple root forces a sign change.
      CHECK(qpoly_eval(sf, lo) * qpoly_eval(sf, hi) < 0);
      if (i + 1 < iso.size()) CHECK(hi <= iso[i + 1].first);
    }
  }
}

TEST_CASE("Euler characteristic of two-exponent real curves") {
  auto chi = [](const char* g, int s) { return real_curve_chi(poly_parse(g), s); };
  CHECK(chi("x^2+y^2", 1) == 0);    // circle
  CHECK(chi("x^2+y^2", -1) == 0);   // empty
  CHECK(chi("y^2-x^2", 1) == -2);   // hyperbola, two branches
  CHECK(chi("x^6+x^2*y^2", 1) == -2);  // two unbounded branches through (1,0), (-1,0)
  CHECK(chi("x", 1) == -1);         // vertical line
  CHECK(chi("x*y^2", 1) == -2);     // y^2 = 1/x over x > 0
  CHECK(chi("y+x^2*y", 1) == -1);   // graph of 1/(1+x^2)
  CHECK(chi("x+y+y^2", 1) == -1);   // parabola via the coordinate swap
  CHECK(chi("y+y^3", 1) == -1);     // horizontal line after the swap
  CHECK(chi("x^3+x*y", 1) == -2);   // graph of (1-x^3)/x, two branches
  CHECK(chi("x^2+x^2*y^2", 0) == -1);  // the y-axis, counted as a line
  CHECK_THROWS_AS(real_curve_chi(poly_parse("x*y+x^2*y^2"), 1), UnsupportedError);
}
