#pragma once

#include <map>
#include <string>
#include <utility>

#include "mm/rational.hpp"

namespace mm {

// Bivariate polynomial over Z, sparse in the exponent pair (deg_x, deg_y).
struct Poly2 {
  std::map<std::pair<int, int>, Int> c;

  bool zero() const { return c.empty(); }
  void add(int a, int b, const Int& v);
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  bool operator==(const Poly2& o) const { return c == o.c; }
  bool operator<(const Poly2& o) const { return c < o.c; }

  Rat eval(const Rat& x, const Rat& y) const;
  Poly2 swapped() const;  // x <-> y
  Int coeff(int a, int b) const;
};

Poly2 poly_from_term(const Int& coeff, int a, int b);

// Canonical display: terms by descending x-degree then ascending y-degree,
// e.g. "x^6+x^2y^2+y^6".
std::string poly_str(const Poly2& p);

// Grammar: signed integer coefficients, variables x and y, '^' powers,
// optional '*' between factors, '+'/'-' term separators.
// Throws ParseError on malformed input.
Poly2 poly_parse(const std::string& s);

// One-variable polynomial over Z as dense coefficient vector (index = degree).
using Poly1 = std::vector<Int>;

Poly1 poly1_trim(Poly1 p);
Poly1 poly1_mul(const Poly1& a, const Poly1& b);
Poly1 poly1_derivative(const Poly1& p);
int poly1_deg(const Poly1& p);  // -1 for zero
bool poly1_squarefree(const Poly1& p);
Rat poly1_eval(const Poly1& p, const Rat& x);

}  // namespace mm
