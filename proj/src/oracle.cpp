#include "mm/oracle.hpp"

#include <algorithm>

namespace mm {

QPoly qpoly_from(const Poly1& p) {
  QPoly q;
  q.reserve(p.size());
  for (const auto& v : p) q.push_back(Rat(v));
  return qpoly_trim(q);
}

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int qpoly_deg(const QPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Rat qpoly_eval(const QPoly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

QPoly qpoly_derivative(const QPoly& p) {
  QPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(Rat(Int(i)) * p[i]);
  return qpoly_trim(r);
}

namespace {

QPoly qpoly_rem(QPoly a, const QPoly& b) {
  int db = qpoly_deg(b);
  while (true) {
    int da = qpoly_deg(a);
    if (da < db) break;
    Rat f = a[da] / b[db];
    for (int j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
    a = qpoly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

QPoly qpoly_monic(QPoly p) {
  p = qpoly_trim(std::move(p));
  int d = qpoly_deg(p);
  if (d < 0) return p;
  Rat lead = p[d];
  for (auto& v : p) v /= lead;
  return p;
}

}  // namespace

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_trim(std::move(a));
  b = qpoly_trim(std::move(b));
  while (!b.empty()) {
    QPoly r = qpoly_rem(a, b);
    a = b;
    b = r;
  }
  return qpoly_monic(a);
}

QPoly qpoly_squarefree_part(const QPoly& p) {
  QPoly t = qpoly_trim(p);
  if (qpoly_deg(t) <= 0) return t;
  QPoly g = qpoly_gcd(t, qpoly_derivative(t));
  if (qpoly_deg(g) <= 0) return t;
  // Exact division t / g.
  QPoly q;
  QPoly rem = t;
  int dg = qpoly_deg(g);
  int dq = qpoly_deg(t) - dg;
  q.assign(dq + 1, Rat(0));
  for (int i = dq; i >= 0; --i) {
    int dr = qpoly_deg(rem);
    if (dr < dg + i) continue;
    Rat f = rem[dg + i] / g[dg];
    q[i] = f;
    for (int j = 0; j <= dg; ++j) rem[i + j] -= f * g[j];
    rem = qpoly_trim(rem);
    rem.resize(std::max<size_t>(rem.size(), 1));
  }
  return qpoly_trim(q);
}

namespace {

// Sturm chain with sign-variation counters.
struct Sturm {
  std::vector<QPoly> chain;

  explicit Sturm(const QPoly& p) {
    QPoly f0 = qpoly_trim(p);
    if (qpoly_deg(f0) < 0) return;
    chain.push_back(f0);
    QPoly f1 = qpoly_derivative(f0);
    if (qpoly_deg(f1) < 0) return;
    chain.push_back(f1);
    while (true) {
      const QPoly& a = chain[chain.size() - 2];
      const QPoly& b = chain[chain.size() - 1];
      QPoly r = qpoly_rem(a, b);
      if (qpoly_trim(r).empty()) break;
      for (auto& v : r) v = -v;
      chain.push_back(qpoly_trim(r));
    }
  }

  static int sgn(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

  int variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
      int s = sgn(qpoly_eval(f, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  int variations_at_inf(int dir) const {  // dir = +1 or -1
    int var = 0, prev = 0;
    for (const auto& f : chain) {
      int d = qpoly_deg(f);
      if (d < 0) continue;
      int s = sgn(f[d]);
      if (dir < 0 && d % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  // Distinct real roots in (a, b].
  int count(const Rat& a, const Rat& b) const { return variations_at(a) - variations_at(b); }
  int count_all() const { return variations_at_inf(-1) - variations_at_inf(+1); }
};

}  // namespace

int real_root_count(const QPoly& p) {
  QPoly sf = qpoly_squarefree_part(p);
  if (qpoly_deg(sf) <= 0) return 0;
  return Sturm(sf).count_all();
}

int real_root_count(const Poly1& p) { return real_root_count(qpoly_from(p)); }

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p0) {
  QPoly p = qpoly_squarefree_part(p0);
  int d = qpoly_deg(p);
  std::vector<std::pair<Rat, Rat>> out;
  if (d <= 0) return out;
  Sturm st(p);
  // Cauchy bound: all real roots lie strictly inside (-M, M).
  Rat maxr = 0;
  for (int i = 0; i < d; ++i) {
    Rat r = p[i] / p[d];
    if (r < 0) r = -r;
    if (r > maxr) maxr = r;
  }
  Rat M = maxr + 1;

  // Pick a subdivision point in (a, b) where p does not vanish.
  auto split_point = [&](const Rat& a, const Rat& b) {
    for (int j = 1; j <= d + 2; ++j) {
      Rat m = a + (b - a) * Rat(j) / Rat(d + 2);
      if (m > a && m < b && qpoly_eval(p, m) != 0) return m;
    }
    throw UnsupportedError("root isolation failed to find a split point");
  };

  // Endpoints are always non-roots of p.
  std::vector<std::pair<Rat, Rat>> stack{{-M, M}};
  if (qpoly_eval(p, -M) == 0 || qpoly_eval(p, M) == 0)
    stack[0] = {-M - 1, M + 1};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = st.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({a, b});
      continue;
    }
    Rat m = split_point(a, b);
    stack.push_back({a, m});
    stack.push_back({m, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long real_curve_chi(const Poly2& g, int s) {
  // Shape check: y-exponents contained in {0, d}.
  long long d = 0;
  bool shape_ok = true;
  for (const auto& [k, v] : g.c) {
    (void)v;
    if (k.second == 0) continue;
    if (d == 0) {
      d = k.second;
    } else if (k.second != d) {
      shape_ok = false;
      break;
    }
  }
  if (!shape_ok) {
    // The swapped curve is homeomorphic; try the two-x-exponent shape.
    Poly2 sw = g.swapped();
    long long dsw = 0;
    bool sw_ok = true;
    for (const auto& [k, v] : sw.c) {
      (void)v;
      if (k.second == 0) continue;
      if (dsw == 0) {
        dsw = k.second;
      } else if (k.second != dsw) {
        sw_ok = false;
        break;
      }
    }
    if (!sw_ok) throw UnsupportedError("real curve shape outside the two-exponent family");
    return real_curve_chi(sw, s);
  }

  // g = u(x) + v(x) y^d; the curve {g = s} projects to the x-line.
  QPoly u, v;
  for (const auto& [k, val] : g.c) {
    QPoly& dst = (k.second == 0) ? u : v;
    if (static_cast<size_t>(k.first) >= dst.size()) dst.resize(k.first + 1, Rat(0));
    dst[k.first] += Rat(val);
  }
  u = qpoly_trim(u);
  v = qpoly_trim(v);
  QPoly n;  // s - u
  n = u;
  for (auto& c : n) c = -c;
  if (n.empty()) n.resize(1, Rat(0));
  n[0] += s;
  n = qpoly_trim(n);

  if (qpoly_deg(v) < 0) {
    // No y at all: vertical lines over the roots of u = s.
    return -real_root_count(n);
  }

  QPoly sfn = qpoly_squarefree_part(n);
  QPoly sfv = qpoly_squarefree_part(v);
  QPoly gline = qpoly_gcd(sfn, sfv);
  long long lines = (qpoly_deg(gline) > 0) ? Sturm(gline).count_all() : 0;
  long long points = real_root_count(n) - lines;

  // Critical x-values: roots of n·v. Arcs live on the open intervals
  // in between; sample signs at non-root interval endpoints.
  QPoly prod;
  {
    QPoly a = sfn, b = sfv;
    prod.assign(std::max(0, qpoly_deg(a) + qpoly_deg(b)) + 1, Rat(0));
    for (int i = 0; i <= qpoly_deg(a); ++i)
      for (int j = 0; j <= qpoly_deg(b); ++j) prod[i + j] += a[i] * b[j];
  }
  auto iso = isolate_real_roots(prod);
  std::vector<Rat> samples;
  if (iso.empty()) {
    samples.push_back(0);
    if (qpoly_eval(prod, 0) == 0) samples[0] = 1;  // constant-free guard
  } else {
    samples.push_back(iso.front().first);
    for (const auto& [lo, hi] : iso) {
      (void)lo;
      samples.push_back(hi);
    }
  }

  long long arcs = 0;
  for (const Rat& x : samples) {
    Rat nx = qpoly_eval(n, x);
    Rat vx = qpoly_eval(v, x);
    if (vx == 0) throw UnsupportedError("sample point hit a pole");
    if (d % 2 == 1) {
      arcs += 1;  // odd power: one real branch whatever the sign
    } else {
      Rat w = nx / vx;
      if (w > 0) arcs += 2;
    }
  }
  return -arcs + points - lines;
}

}  // namespace mm
