#include "mm/newton.hpp"

#include <algorithm>

namespace mm {

namespace {

using Pt = std::pair<long long, long long>;

long long cross(const Pt& o, const Pt& u, const Pt& v) {
  return (u.first - o.first) * (v.second - o.second) -
         (u.second - o.second) * (v.first - o.first);
}

long long lgcd(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Lattice points on the closed segment p -> q, inclusive, in order.
std::vector<Pt> segment_lattice(const Pt& p, const Pt& q) {
  long long dx = q.first - p.first, dy = q.second - p.second;
  long long g = lgcd(dx, dy);
  std::vector<Pt> out;
  for (long long j = 0; j <= g; ++j)
    out.push_back({p.first + j * dx / g, p.second + j * dy / g});
  return out;
}

Poly1 segment_poly(const Poly2& f, const Pt& p, const Pt& q, const Int& origin_coeff) {
  Poly1 c;
  for (const Pt& pt : segment_lattice(p, q)) {
    Int v = f.coeff(static_cast<int>(pt.first), static_cast<int>(pt.second));
    if (pt.first == 0 && pt.second == 0) v += origin_coeff;
    c.push_back(v);
  }
  return poly1_trim(c);
}

}  // namespace

NewtonPolygon newton_polygon(const Poly2& f) {
  if (f.zero()) throw UnsupportedError("zero equation has no staircase hull");
  if (f.coeff(0, 0) != 0)
    throw UnsupportedError("equation does not vanish at the origin");

  // Pareto-minimal support points, sorted by ascending a (b then strictly
  // descends).
  std::vector<Pt> pts;
  for (const auto& [k, v] : f.c) {
    (void)v;
    pts.push_back({k.first, k.second});
  }
  std::vector<Pt> pareto;
  for (const Pt& p : pts) {
    bool dominated = false;
    for (const Pt& q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    if (!dominated) pareto.push_back(p);
  }
  std::sort(pareto.begin(), pareto.end());

  // Lower convex chain of the Pareto staircase.
  std::vector<Pt> hull;
  for (const Pt& p : pareto) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  NewtonPolygon np;
  for (auto it = hull.rbegin(); it != hull.rend(); ++it) {
    NewtonVertex v;
    v.a = it->first;
    v.b = it->second;
    v.coeff = f.coeff(static_cast<int>(v.a), static_cast<int>(v.b));
    np.vertices.push_back(v);
  }
  for (size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    NewtonEdge e;
    e.a1 = np.vertices[i].a;
    e.b1 = np.vertices[i].b;
    e.a2 = np.vertices[i + 1].a;
    e.b2 = np.vertices[i + 1].b;
    long long da = e.a1 - e.a2, db = e.b2 - e.b1;
    long long g = lgcd(da, db);
    e.w1 = db / g;
    e.w2 = da / g;
    e.d = e.w1 * e.a1 + e.w2 * e.b1;
    for (const auto& [k, v] : f.c)
      if (e.w1 * k.first + e.w2 * k.second == e.d) e.face.add(k.first, k.second, v);
    e.edge_poly = segment_poly(f, {e.a1, e.b1}, {e.a2, e.b2}, 0);
    np.edges.push_back(e);
  }
  for (const auto& v : np.vertices) {
    if (v.b == 0) {
      np.on_x_axis = true;
      np.x_power = v.a;
    }
    if (v.a == 0) {
      np.on_y_axis = true;
      np.y_power = v.b;
    }
  }
  return np;
}

bool is_nondegenerate(const NewtonPolygon& np) {
  for (const auto& e : np.edges)
    if (!poly1_squarefree(e.edge_poly)) return false;
  return true;
}

Int kouchnirenko_mu(const Poly2& f) {
  NewtonPolygon np = newton_polygon(f);
  if (!np.convenient())
    throw UnsupportedError("lattice Milnor number needs both axis vertices");
  if (!is_nondegenerate(np))
    throw UnsupportedError("degenerate edge equation");
  // Twice the area between the staircase and the axes, by shoelace over
  // (0,0), (0, y_power), hull vertices (ascending a), (x_power, 0).
  std::vector<Pt> poly;
  poly.push_back({0, 0});
  for (auto it = np.vertices.rbegin(); it != np.vertices.rend(); ++it)
    poly.push_back({it->a, it->b});
  Int twice_area = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % poly.size()];
    twice_area += Int(p.first) * q.second - Int(q.first) * p.second;
  }
  if (twice_area < 0) twice_area = -twice_area;
  return twice_area - np.x_power - np.y_power + 1;
}

namespace {

// Full convex hull (counterclockwise) of a point set.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Pt> lo, hi;
  for (const Pt& p : pts) {
    while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo[lo.size() - 1], p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi[hi.size() - 1], *it) <= 0) hi.pop_back();
    hi.push_back(*it);
  }
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

Int khovanskii_torus_chi(const Poly2& g) {
  // {g = 1} in the torus is {h = 0} for h = g - 1; its polytope is the hull
  // of the support of g together with the origin.
  std::vector<Pt> pts{{0, 0}};
  for (const auto& [k, v] : g.c) {
    (void)v;
    pts.push_back({k.first, k.second});
  }
  std::vector<Pt> hull = convex_hull(pts);
  if (hull.size() <= 1) return 0;  // h is a monomial shift: empty or torus factor
  if (hull.size() == 2) {
    // Degenerate polytope: a segment. The curve is a union of translated
    // subtori; fall through to the edge test and count components.
    Poly1 ep = segment_poly(g, hull[0], hull[1], -1);
    if (!poly1_squarefree(ep)) throw UnsupportedError("degenerate face equation");
    return 0;  // each component is a torus coset, Euler characteristic zero
  }
  Int twice_area = 0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& p = hull[i];
    const Pt& q = hull[(i + 1) % hull.size()];
    twice_area += Int(p.first) * q.second - Int(q.first) * p.second;
    Poly1 ep = segment_poly(g, p, q, -1);
    if (!poly1_squarefree(ep)) throw UnsupportedError("degenerate face equation");
  }
  if (twice_area < 0) twice_area = -twice_area;
  return -twice_area;
}

namespace {

// Number of distinct complex roots: degree of p divided by gcd(p, p').
Int distinct_root_count(const Poly1& p) {
  Poly1 t = poly1_trim(p);
  int d = poly1_deg(t);
  if (d <= 0) return 0;
  // Degree of the squarefree part equals d minus deg gcd(p, p'); reuse the
  // squarefree machinery by successive gcd steps.
  // gcd via the same primitive remainder sequence used by poly1_squarefree.
  Poly1 der = poly1_derivative(t);
  // Local gcd (duplicated small helper to keep poly.cpp's internals private).
  auto norm = [](Poly1 v) {
    Int g = 0;
    for (const auto& x : v) g = igcd(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
    if (!v.empty() && v[poly1_deg(v)] < 0)
      for (auto& x : v) x = -x;
    return v;
  };
  auto prem = [](Poly1 a, const Poly1& b) {
    int db = poly1_deg(b);
    Int lb = b[db];
    while (true) {
      int da = poly1_deg(a);
      if (da < db) break;
      Int la = a[da];
      for (auto& v : a) v *= lb;
      for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
      a = poly1_trim(a);
      if (a.empty()) break;
    }
    return a;
  };
  Poly1 a = norm(t), b = norm(der);
  while (!b.empty()) {
    Poly1 r = prem(a, b);
    a = b;
    b = norm(r);
  }
  return d - poly1_deg(a);
}

}  // namespace

Int affine_curve_chi(const Poly2& g) {
  Int chi = khovanskii_torus_chi(g);
  // Points of {g = 1} on each axis.
  Poly1 gx, gy;
  for (const auto& [k, v] : g.c) {
    if (k.second == 0) {
      if (static_cast<size_t>(k.first) >= gx.size()) gx.resize(k.first + 1, Int(0));
      gx[k.first] += v;
    }
    if (k.first == 0) {
      if (static_cast<size_t>(k.second) >= gy.size()) gy.resize(k.second + 1, Int(0));
      gy[k.second] += v;
    }
  }
  auto minus_one = [](Poly1 p) {
    if (p.empty()) p.resize(1, Int(0));
    p[0] -= 1;
    return p;
  };
  chi += distinct_root_count(minus_one(gx));
  chi += distinct_root_count(minus_one(gy));
  // The origin would be double-counted were it on the curve; locally g(0,0)=0.
  return chi;
}

}  // namespace mm
