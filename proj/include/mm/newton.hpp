#pragma once

#include <vector>

#include "mm/poly.hpp"

namespace mm {

// Compact edge of the staircase hull: endpoints listed x-side first
// (a1 > a2), primitive inner normal (w1, w2) > 0, level d = w·endpoint.
struct NewtonEdge {
  long long a1 = 0, b1 = 0;
  long long a2 = 0, b2 = 0;
  long long w1 = 1, w2 = 1;
  long long d = 0;
  Poly2 face;        // terms of f supported on the edge
  Poly1 edge_poly;   // face in the edge parameter, index 0 at (a1, b1)
};

struct NewtonVertex {
  long long a = 0, b = 0;
  Int coeff;
};

// The lower-left convex hull of the support together with everything the
// singularity pipeline reads off it.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;  // by descending a
  std::vector<NewtonEdge> edges;       // same order, edge i joins vertex i, i+1

  bool on_x_axis = false;  // has a pure x^a term
  bool on_y_axis = false;
  long long x_power = 0;  // exponent of the x-axis vertex when present
  long long y_power = 0;

  bool convenient() const { return on_x_axis && on_y_axis; }
  bool is_monomial() const { return vertices.size() == 1 && edges.empty(); }
};

// Throws UnsupportedError when f is zero or has a nonzero constant term
// (the construction is local at the origin).
NewtonPolygon newton_polygon(const Poly2& f);

// Every edge polynomial squarefree.
bool is_nondegenerate(const NewtonPolygon& np);

// Milnor number of a convenient nondegenerate equation from lattice data:
// twice the staircase area minus both intercepts plus one.
Int kouchnirenko_mu(const Poly2& f);

// Euler characteristic of {g = 1} in the two-torus for g with generically
// positioned coefficients: minus the normalized area of the convex hull of
// the support together with the origin. Throws when the genericity test
// (squarefree edge polynomials of the hull of supp union origin) fails.
Int khovanskii_torus_chi(const Poly2& g);

// Euler characteristic of the affine curve {g = 1}: the torus count plus
// the axis root counts.
Int affine_curve_chi(const Poly2& g);

}  // namespace mm
