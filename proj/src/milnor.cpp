#include "mm/milnor.hpp"

#include "mm/oracle.hpp"

namespace mm {

namespace {

int target_sign(int sign, const Int& coeff) { return coeff < 0 ? -sign : sign; }

// {x^p y^q = target}: the residue class of a single monomial constraint.
GrothElem vertex_res(long long p, long long q, int tsign, Field field) {
  TorsorSpec spec;
  if (q == 0) {
    spec.rows = {{Int(p)}};
  } else if (p == 0) {
    spec.rows = {{Int(q)}};
  } else {
    spec.rows = {{Int(p), Int(q)}};
  }
  spec.positions = {Rat(1)};
  spec.signs = {tsign};
  spec.field = field;
  return monomial_torsor(spec);
}

// Boundary point of a compactified axis ray: full weight in the
// retractions, skipped by the coefficient map.
Summand axis_point(long long a, int tsign, Field field, bool x_axis) {
  (void)x_axis;
  Summand s;
  s.res = vertex_res(a, 0, tsign, field);
  s.cell.cells.push_back(full_cell(0));
  s.sig_const = Rat(1) / a;
  s.k = 1;
  s.at_infinity = true;
  return s;
}

// Open ray where one axis power dominates: {a*alpha = 1, beta > beta0}.
Summand axis_ray(long long a, const Rat& beta0, int tsign, Field field, bool x_axis) {
  Summand s;
  s.res = vertex_res(a, 0, tsign, field).times(APoly::gm());
  GammaCell c = full_cell(2);
  int on = x_axis ? 0 : 1;   // dominating coordinate
  int off = 1 - on;
  {
    Constraint eq;
    eq.form.a = {Rat(0), Rat(0)};
    eq.form.a[on] = Rat(a);
    eq.form.c = Rat(-1);
    eq.rel = Rel::EQ;
    c.cons.push_back(eq);
  }
  {
    Constraint gt;
    gt.form.a = {Rat(0), Rat(0)};
    gt.form.a[off] = Rat(1);
    gt.form.c = -beta0;
    gt.rel = Rel::GT;
    c.cons.push_back(gt);
  }
  s.cell.cells.push_back(c);
  s.sig_lin = {Rat(1), Rat(1)};
  s.k = 1;
  s.l = 1;
  return s;
}

Constraint weighted_gt(const Rat& cx, const Rat& cy, const Rat& rhs) {
  Constraint g;
  g.form.a = {cx, cy};
  g.form.c = -rhs;
  g.rel = Rel::GT;
  return g;
}

Constraint weighted_eq(const Rat& cx, const Rat& cy, const Rat& rhs) {
  Constraint g;
  g.form.a = {cx, cy};
  g.form.c = -rhs;
  g.rel = Rel::EQ;
  return g;
}

}  // namespace

TensorElem milnor_integral(const Poly2& f, Field field, int sign) {
  TensorElem t;
  if (f.zero()) throw UnsupportedError("zero equation");
  if (f.coeff(0, 0) != 0) throw UnsupportedError("equation does not vanish at the origin");

  // One-variable equations: the lowest term dominates every branch.
  bool only_x = true, only_y = true;
  for (const auto& [k, v] : f.c) {
    (void)v;
    if (k.second != 0) only_x = false;
    if (k.first != 0) only_y = false;
  }
  if (only_x || only_y) {
    long long a = 0;
    Int c;
    bool first = true;
    for (const auto& [k, v] : f.c) {
      long long e = only_x ? k.first : k.second;
      if (first || e < a) {
        a = e;
        c = v;
        first = false;
      }
    }
    int ts = target_sign(sign, c);
    t.parts.push_back(axis_point(a, ts, field, only_x));
    t.parts.push_back(axis_ray(a, Rat(0), ts, field, only_x));
    t.normalize();
    return t;
  }

  NewtonPolygon np = newton_polygon(f);

  if (np.is_monomial()) {
    const NewtonVertex& v = np.vertices[0];
    Summand s;
    s.res = vertex_res(v.a, v.b, target_sign(sign, v.coeff), field);
    GammaCell c = full_cell(2);
    c.cons.push_back(weighted_eq(Rat(v.a), Rat(v.b), Rat(1)));
    c.cons.push_back(weighted_gt(Rat(1), Rat(0), Rat(0)));
    c.cons.push_back(weighted_gt(Rat(0), Rat(1), Rat(0)));
    s.cell.cells.push_back(c);
    s.sig_lin = {Rat(1), Rat(1)};
    s.k = 1;
    s.l = 1;
    t.parts.push_back(s);
    t.normalize();
    return t;
  }

  if (!np.convenient())
    throw UnsupportedError("equation must be convenient (pure powers of both variables)");
  if (!is_nondegenerate(np)) throw UnsupportedError("degenerate edge equation");

  size_t n = np.vertices.size();

  // Axis boundary points and rays. The ray along an axis is bounded below
  // by the domination constraint of the adjacent edge's far endpoint.
  {
    const NewtonVertex& vx = np.vertices[0];  // (a, 0)
    const NewtonVertex& nb = np.vertices[1];
    int ts = target_sign(sign, vx.coeff);
    t.parts.push_back(axis_point(vx.a, ts, field, true));
    Rat beta0 = (Rat(1) - Rat(nb.a) / vx.a) / nb.b;
    t.parts.push_back(axis_ray(vx.a, beta0, ts, field, true));
  }
  {
    const NewtonVertex& vy = np.vertices[n - 1];  // (0, b)
    const NewtonVertex& nb = np.vertices[n - 2];
    int ts = target_sign(sign, vy.coeff);
    t.parts.push_back(axis_point(vy.b, ts, field, false));
    Rat alpha0 = (Rat(1) - Rat(nb.b) / vy.b) / nb.a;
    t.parts.push_back(axis_ray(vy.b, alpha0, ts, field, false));
  }

  // Interior vertices: the monomial dominates inside the cone cut out by
  // its polygon neighbours.
  for (size_t i = 1; i + 1 < n; ++i) {
    const NewtonVertex& v = np.vertices[i];
    Summand s;
    s.res = vertex_res(v.a, v.b, target_sign(sign, v.coeff), field);
    GammaCell c = full_cell(2);
    c.cons.push_back(weighted_eq(Rat(v.a), Rat(v.b), Rat(1)));
    c.cons.push_back(weighted_gt(Rat(np.vertices[i - 1].a), Rat(np.vertices[i - 1].b), Rat(1)));
    c.cons.push_back(weighted_gt(Rat(np.vertices[i + 1].a), Rat(np.vertices[i + 1].b), Rat(1)));
    s.cell.cells.push_back(c);
    s.sig_lin = {Rat(1), Rat(1)};
    s.k = 1;
    s.l = 1;
    t.parts.push_back(s);
  }

  // Edge points: both endpoint monomial groups tie; the residue class is
  // the face torsor at the primitive normal position.
  for (const NewtonEdge& e : np.edges) {
    Summand s;
    Atom face = face_torsor_atom(e.face, static_cast<int>(e.w1 % 2),
                                 static_cast<int>(e.w2 % 2), field);
    if (sign < 0 && field == Field::R) face.sign = -1;
    s.res = GrothElem::atom(face);
    s.cell.cells.push_back(point_cell({Rat(e.w1) / e.d, Rat(e.w2) / e.d}));
    s.sig_lin = {Rat(1), Rat(1)};
    s.k = 2;
    t.parts.push_back(s);
  }

  // Cancellation rays: along each edge direction below the edge position,
  // branches through the roots of the edge equation drop the leading term.
  // Each root contributes a translated torus; the deeper coordinates
  // reparametrize to one pinned and one free coordinate.
  for (const NewtonEdge& e : np.edges) {
    int root_count;
    if (field == Field::C) {
      root_count = poly1_deg(e.edge_poly);
    } else {
      root_count = real_root_count(e.edge_poly);
      if (root_count != 0)
        throw UnsupportedError("real cancellation branches unsupported");
    }
    if (root_count <= 0) continue;
    Summand s;
    s.res = GrothElem::scalar(root_count).times(APoly::gm());
    GammaCell c = full_cell(2);
    c.cons.push_back(weighted_eq(Rat(e.w2), Rat(-e.w1), Rat(0)));
    c.cons.push_back(weighted_gt(Rat(1), Rat(0), Rat(0)));
    c.cons.push_back(weighted_gt(Rat(-e.d) / e.w1, Rat(0), Rat(-1)));  // d*alpha < w1
    s.cell.cells.push_back(c);
    s.sig_lin = {Rat(e.w1 + e.w2 - e.d) / e.w1, Rat(0)};
    s.sig_const = Rat(1);
    s.k = 1;
    s.l = 1;
    t.parts.push_back(s);
  }

  t.normalize();
  return t;
}

GrothElem motivic_fiber_b(const Poly2& f, Field field, int sign) {
  return theta(eb(milnor_integral(f, field, sign)));
}

GrothElem motivic_fiber_g(const Poly2& f, Field field, int sign) {
  return theta(eg(milnor_integral(f, field, sign)));
}

TConvexResult tconvex_chi(const Poly2& monomial, int sign) {
  newton_polygon(monomial);  // validates: nonzero, vanishing at the origin
  if (monomial.c.size() != 1)
    throw UnsupportedError("closed/open comparison is for monomials");
  TensorElem t = milnor_integral(monomial, Field::R, sign);
  KnowledgeBase kb;
  TConvexResult r;
  r.chi_closed = realize_real(eb(t), kb);
  r.chi_open = -realize_real(eg(t), kb);
  r.relation_ok = (r.chi_closed == -r.chi_open);
  return r;
}

}  // namespace mm
