#pragma once

#include "mm/newton.hpp"
#include "mm/realize.hpp"
#include "mm/tensor.hpp"

namespace mm {

// The graded integral attached to a plane-curve equation at the origin:
// one summand per domination region of the staircase hull (axis boundary
// points, axis rays, interior vertices, edge points, and the leading-term
// cancellation rays along edge directions). Cells live in the normalized
// valuation plane: coordinates are val(x)/level and val(y)/level, so the
// level-m fiber reads off lattice points at denominator m.
//
// sign is the sign of the deformation target (+t or -t); it only matters
// over R. Throws UnsupportedError for equations outside the supported
// family (see README): f must vanish at the origin and be a monomial, a
// one-variable equation, or convenient and nondegenerate; over R every edge
// equation must stay root-free on the real line.
TensorElem milnor_integral(const Poly2& f, Field field, int sign = +1);

// Bounded retraction of the integral followed by the fiber-at-one map:
// the motivic Milnor fiber.
GrothElem motivic_fiber_b(const Poly2& f, Field field, int sign = +1);

// Geometric retraction followed by the fiber-at-one map.
GrothElem motivic_fiber_g(const Poly2& f, Field field, int sign = +1);

// Closed and open real Euler characteristics of the monomial fiber, plus
// the ambient-dimension duality check chi_closed = -chi_open.
struct TConvexResult {
  Int chi_closed;
  Int chi_open;
  bool relation_ok = false;
};
TConvexResult tconvex_chi(const Poly2& monomial, int sign = +1);

}  // namespace mm
