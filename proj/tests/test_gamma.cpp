#include <random>

#include "doctest.h"
#include "mm/gamma.hpp"

using namespace mm;

namespace {

GammaCell open_iv(const Rat& a, const Rat& b) {
  return interval_cell(a, true, b, true);
}

}  // namespace

TEST_CASE("half-line and interval Euler values") {
  // The two characteristics differ exactly on unbounded-above directions.
  GammaCell up3 = interval_cell(Rat(1) / 3, true, std::nullopt, false);
  CHECK(chi_b(up3) == 0);
  CHECK(chi_g(up3) == -1);

  CHECK(chi_b(open_iv(Rat(1) / 6, Rat(1) / 3)) == -1);
  CHECK(chi_g(open_iv(Rat(1) / 6, Rat(1) / 3)) == -1);

  GammaCell pos = interval_cell(Rat(0), true, std::nullopt, false);
  CHECK(chi_b(pos) == 0);
  CHECK(chi_g(pos) == -1);

  CHECK(chi_b(point_cell({Rat(2)})) == 1);
  CHECK(chi_g(point_cell({Rat(2)})) == 1);

  GammaCell closed = interval_cell(Rat(1), false, Rat(2), false);
  CHECK(chi_b(closed) == 1);
  CHECK(chi_g(closed) == 1);

  GammaCell half_open = interval_cell(Rat(1), true, Rat(2), false);
  CHECK(chi_b(half_open) == 0);
  CHECK(chi_g(half_open) == 0);
}

TEST_CASE("products multiply") {
  GammaCell up = interval_cell(Rat(0), true, std::nullopt, false);
  GammaCell open1 = open_iv(Rat(0), Rat(1));
  GammaCell p = product(up, open1);
  CHECK(chi_b(p) == chi_b(up) * chi_b(open1));
  CHECK(chi_g(p) == chi_g(up) * chi_g(open1));
  CHECK(p.ambient == 2);

  GammaCell q = product(open1, open1);
  CHECK(chi_b(q) == 1);
  CHECK(chi_g(q) == 1);
}

TEST_CASE("empty cells are recognised") {
  GammaCell c = interval_cell(Rat(2), true, Rat(1), true);
  CHECK_FALSE(c.feasible());
  CHECK(chi_b(c) == 0);
  CHECK(chi_g(c) == 0);
}

TEST_CASE("refinement preserves both characteristics") {
  std::mt19937 rng(20260813);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  int tested = 0;
  while (tested < 120) {
    // Random 2-dimensional cell: a box or triangle with mixed strictness,
    // possibly unbounded above in one direction.
    GammaCell c = full_cell(2);
    for (int i = 0; i < 2; ++i) {
      Constraint lo;
      lo.form.a = {Rat(i == 0), Rat(i == 1)};
      lo.form.c = -Rat(coef(rng));
      lo.rel = pick(rng) == 0 ? Rel::GE : Rel::GT;
      c.cons.push_back(lo);
      if (pick(rng) != 2 || i == 1) {
        Constraint hi;
        hi.form.a = {Rat(-(i == 0)), Rat(-(i == 1))};
        hi.form.c = Rat(coef(rng) + 5);
        hi.rel = pick(rng) == 0 ? Rel::GE : Rel::GT;
        c.cons.push_back(hi);
      }
    }
    if (!c.feasible()) continue;
    ++tested;
    GammaSet s;
    s.cells.push_back(c);
    long long b0 = chi_b(s), g0 = chi_g(s);

    std::vector<LinForm> cuts;
    for (int k = 0; k < 3; ++k) {
      LinForm f;
      f.a = {Rat(coef(rng)), Rat(coef(rng))};
      f.c = Rat(coef(rng));
      cuts.push_back(f);
    }
    GammaSet r = refine(s, cuts);
    CHECK(chi_b(r) == b0);
    CHECK(chi_g(r) == g0);
  }
  CHECK(tested >= 100);
}

TEST_CASE("dilated lattice points") {
  // Closed diagonal segment from (1/3, 2/3) to (1, 0): denominator 3.
  GammaCell c = full_cell(2);
  Constraint eq;
  eq.form.a = {Rat(1), Rat(1)};
  eq.form.c = Rat(-1);
  eq.rel = Rel::EQ;
  c.cons.push_back(eq);
  Constraint lo;
  lo.form.a = {Rat(1), Rat(0)};
  lo.form.c = -Rat(1) / 3;
  lo.rel = Rel::GE;
  c.cons.push_back(lo);
  Constraint hi;
  hi.form.a = {Rat(0), Rat(1)};
  hi.form.c = Rat(0);
  hi.rel = Rel::GE;
  c.cons.push_back(hi);

  CHECK(lattice_points(c, 1).size() == 1);  // (1, 0) only
  CHECK(lattice_points(c, 3).size() == 3);  // x in {1/3, 2/3, 1}
  auto pts = lattice_points(c, 6);
  CHECK(pts.size() == 5);
  for (const auto& p : pts) CHECK(c.contains(p));

  auto [lo_r, hi_r] = coordinate_range(c, 0);
  REQUIRE(lo_r.has_value());
  REQUIRE(hi_r.has_value());
  CHECK(*lo_r == Rat(1) / 3);
  CHECK(*hi_r == Rat(1));

  GammaCell ray = interval_cell(Rat(0), true, std::nullopt, false);
  CHECK_THROWS_AS(lattice_points(ray, 2), UnsupportedError);
}
