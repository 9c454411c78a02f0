#pragma once

#include <vector>

#include "mm/poly.hpp"

namespace mm {

// Dense univariate polynomial over Q, index = degree.
using QPoly = std::vector<Rat>;

QPoly qpoly_from(const Poly1& p);
QPoly qpoly_trim(QPoly p);
int qpoly_deg(const QPoly& p);
Rat qpoly_eval(const QPoly& p, const Rat& x);
QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_gcd(QPoly a, QPoly b);
QPoly qpoly_squarefree_part(const QPoly& p);

// Number of distinct real roots (Sturm chain over the whole line).
int real_root_count(const QPoly& p);
int real_root_count(const Poly1& p);

// Disjoint isolating intervals (lo, hi], one distinct real root each,
// sorted; consecutive intervals may share an endpoint (the sets are
// still disjoint because intervals are open on the left).
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p);

// Compactly supported Euler characteristic of the real curve {g = s} when g
// has at most the y-exponents {0, d}: g = u(x) + v(x)·y^d. Counts open
// arcs as -1, isolated points as +1, vertical lines as -1, exactly.
// Throws UnsupportedError for other shapes.
long long real_curve_chi(const Poly2& g, int s);

}  // namespace mm
