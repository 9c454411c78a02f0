#include "mm/gamma.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mm/linalg.hpp"

namespace mm {

Rat LinForm::eval(const std::vector<Rat>& x) const {
  Rat r = c;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * x[i];
  return r;
}

namespace {

bool is_zero_form(const LinForm& f) {
  for (const auto& v : f.a)
    if (v != 0) return false;
  return true;
}

// Scale so the nonzero entries are coprime integers; positive scaling only,
// so inequality orientation is preserved.
LinForm normalize_form(LinForm f) {
  Int l = 1;
  for (const auto& v : f.a) l = ilcm(l, den(v));
  l = ilcm(l, den(f.c));
  Int g = 0;
  for (auto& v : f.a) {
    v *= l;
    g = igcd(g, num(v));
  }
  f.c *= l;
  g = igcd(g, num(f.c));
  if (g > 1)
    for (auto& v : f.a) v /= Rat(g);
  if (g > 1) f.c /= Rat(g);
  return f;
}

// Substitute equality constraints away, producing an inequality-only system
// on a subset of the original variables.
struct Reduced {
  int ambient = 0;
  std::vector<Constraint> ineqs;      // GT / GE only, over surviving variables
  bool inconsistent = false;
  int eq_rank = 0;
};

Reduced reduce_equalities(const GammaCell& cell) {
  Reduced r;
  r.ambient = cell.ambient;
  std::vector<Constraint> eqs, rest;
  for (const auto& c : cell.cons)
    (c.rel == Rel::EQ ? eqs : rest).push_back(c);

  // Gaussian elimination on the equality block, substituting into everything.
  std::vector<bool> used_var(cell.ambient, false);
  std::vector<std::pair<int, LinForm>> pivots;  // var index -> solved form
  for (size_t e = 0; e < eqs.size(); ++e) {
    LinForm f = eqs[e].form;
    for (const auto& [vi, sol] : pivots) {
      if (f.a[vi] != 0) {
        Rat k = f.a[vi];
        for (int j = 0; j < cell.ambient; ++j) f.a[j] += k * sol.a[j];
        f.c += k * sol.c;
        f.a[vi] = 0;
      }
    }
    int pv = -1;
    for (int j = 0; j < cell.ambient; ++j)
      if (f.a[j] != 0 && !used_var[j]) {
        pv = j;
        break;
      }
    if (pv < 0) {
      if (f.c != 0) {
        r.inconsistent = true;
        return r;
      }
      continue;
    }
    // Solve for x_pv: x_pv = -(rest)/a_pv, stored as a substitution form.
    LinForm sol;
    sol.a.assign(cell.ambient, Rat(0));
    Rat ap = f.a[pv];
    for (int j = 0; j < cell.ambient; ++j)
      if (j != pv) sol.a[j] = -f.a[j] / ap;
    sol.c = -f.c / ap;
    // Back-substitute into earlier pivots.
    for (auto& [vi, s] : pivots) {
      if (s.a[pv] != 0) {
        Rat k = s.a[pv];
        for (int j = 0; j < cell.ambient; ++j) s.a[j] += k * sol.a[j];
        s.c += k * sol.c;
        s.a[pv] = 0;
      }
    }
    used_var[pv] = true;
    pivots.emplace_back(pv, sol);
    ++r.eq_rank;
  }

  for (const auto& c : rest) {
    LinForm f = c.form;
    for (const auto& [vi, sol] : pivots)
      if (f.a[vi] != 0) {
        Rat k = f.a[vi];
        for (int j = 0; j < cell.ambient; ++j) f.a[j] += k * sol.a[j];
        f.c += k * sol.c;
        f.a[vi] = 0;
      }
    if (is_zero_form(f)) {
      bool ok = (c.rel == Rel::GT) ? (f.c > 0) : (f.c >= 0);
      if (!ok) {
        r.inconsistent = true;
        return r;
      }
      continue;
    }
    r.ineqs.push_back({f, c.rel});
  }
  return r;
}

// Fourier–Motzkin feasibility for a strict/weak inequality system.
bool fm_feasible(int ambient, std::vector<Constraint> sys) {
  for (int v = 0; v < ambient; ++v) {
    std::vector<Constraint> lower, upper, rest;
    for (auto& c : sys) {
      if (c.form.a[v] > 0)
        lower.push_back(c);
      else if (c.form.a[v] < 0)
        upper.push_back(c);
      else
        rest.push_back(c);
    }
    for (const auto& lo : lower)
      for (const auto& hi : upper) {
        // Combine a*x_v + ... > 0 (a > 0) with b*x_v + ... > 0 (b < 0).
        LinForm f;
        f.a.assign(ambient, Rat(0));
        Rat la = lo.form.a[v], ha = -hi.form.a[v];
        for (int j = 0; j < ambient; ++j)
          f.a[j] = lo.form.a[j] * ha + hi.form.a[j] * la;
        f.c = lo.form.c * ha + hi.form.c * la;
        f.a[v] = 0;
        Rel rel = (lo.rel == Rel::GT || hi.rel == Rel::GT) ? Rel::GT : Rel::GE;
        if (is_zero_form(f)) {
          bool ok = (rel == Rel::GT) ? (f.c > 0) : (f.c >= 0);
          if (!ok) return false;
        } else {
          rest.push_back({f, rel});
        }
      }
    sys = std::move(rest);
  }
  for (const auto& c : sys) {
    bool ok = (c.rel == Rel::GT) ? (c.form.c > 0) : (c.form.c >= 0);
    if (!ok) return false;
  }
  return true;
}

bool cell_feasible(const GammaCell& cell) {
  Reduced r = reduce_equalities(cell);
  if (r.inconsistent) return false;
  return fm_feasible(r.ambient, r.ineqs);
}

// Dimension of a feasible convex cell: ambient minus the rank of explicit
// plus forced equalities. A weak constraint is forced to equality exactly
// when making it strict empties the cell (convexity makes per-constraint
// tests sufficient).
int cell_dim(const GammaCell& cell) {
  if (!cell_feasible(cell)) return -1;
  std::vector<std::vector<Rat>> eq_rows;
  for (const auto& c : cell.cons)
    if (c.rel == Rel::EQ) eq_rows.push_back(c.form.a);
  for (size_t i = 0; i < cell.cons.size(); ++i) {
    if (cell.cons[i].rel != Rel::GE) continue;
    GammaCell t = cell;
    t.cons[i].rel = Rel::GT;
    if (!cell_feasible(t)) eq_rows.push_back(cell.cons[i].form.a);
  }
  if (eq_rows.empty()) return cell.ambient;
  return cell.ambient - static_cast<int>(rat_rank(eq_rows));
}

// Enumerate the weak-face split: each subset of GE constraints pinned to
// equality, the rest strict. The pieces are disjoint, relatively open and
// convex, and their union is the cell.
template <typename Fn>
void for_each_open_piece(const GammaCell& cell, Fn&& fn) {
  std::vector<size_t> weak;
  for (size_t i = 0; i < cell.cons.size(); ++i)
    if (cell.cons[i].rel == Rel::GE) weak.push_back(i);
  size_t n = weak.size();
  if (n > 24) throw UnsupportedError("too many weak constraints in gamma cell");
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    GammaCell piece = cell;
    for (size_t b = 0; b < n; ++b)
      piece.cons[weak[b]].rel = (mask >> b & 1) ? Rel::EQ : Rel::GT;
    int d = cell_dim(piece);
    if (d >= 0) fn(piece, d);
  }
}

// A rational that strictly dominates every coordinate of every vertex of the
// constraint-hyperplane arrangement (Cramer on all square subsystems).
Rat box_bound(const GammaCell& cell) {
  int n = cell.ambient;
  Rat best = 1;
  if (n == 0) return best;
  std::vector<LinForm> forms;
  for (const auto& c : cell.cons) forms.push_back(c.form);
  size_t f = forms.size();
  if (f < static_cast<size_t>(n)) return best;
  // Enumerate all n-subsets of the forms.
  std::vector<size_t> sel(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) sel[i] = i;
  while (true) {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = forms[sel[i]].a[j];
      b[i] = -forms[sel[i]].c;
    }
    if (auto x = rat_solve(a, b)) {
      for (const auto& v : *x) {
        Rat av = v < 0 ? -v : v;
        if (av >= best) best = av + 1;
      }
    }
    // Next combination.
    int i = n - 1;
    while (i >= 0 && sel[i] == f - static_cast<size_t>(n) + static_cast<size_t>(i)) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
  }
  return best;
}

GammaCell clip_to_box(const GammaCell& cell, const Rat& bound) {
  GammaCell out = cell;
  for (int i = 0; i < cell.ambient; ++i) {
    LinForm up;  // bound - x_i >= 0
    up.a.assign(cell.ambient, Rat(0));
    up.a[i] = -1;
    up.c = bound;
    out.cons.push_back({up, Rel::GE});
    LinForm lo;  // x_i + bound >= 0
    lo.a.assign(cell.ambient, Rat(0));
    lo.a[i] = 1;
    lo.c = bound;
    out.cons.push_back({lo, Rel::GE});
  }
  return out;
}

}  // namespace

bool GammaCell::feasible() const { return cell_feasible(*this); }
int GammaCell::dim() const { return cell_dim(*this); }

bool GammaCell::contains(const std::vector<Rat>& x) const {
  for (const auto& c : cons) {
    Rat v = c.form.eval(x);
    switch (c.rel) {
      case Rel::EQ:
        if (v != 0) return false;
        break;
      case Rel::GT:
        if (v <= 0) return false;
        break;
      case Rel::GE:
        if (v < 0) return false;
        break;
    }
  }
  return true;
}

std::string GammaCell::str() const {
  std::vector<std::string> parts;
  for (const auto& c : cons) {
    LinForm f = normalize_form(c.form);
    std::ostringstream os;
    for (int j = 0; j < ambient; ++j)
      if (f.a[j] != 0) os << (f.a[j] > 0 ? "+" : "") << rat_str(f.a[j]) << "g" << j;
    if (f.c != 0 || is_zero_form(f)) os << (f.c >= 0 ? "+" : "") << rat_str(f.c);
    os << (c.rel == Rel::EQ ? "=0" : c.rel == Rel::GT ? ">0" : ">=0");
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::ostringstream os;
  os << "{dim" << ambient << ":";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "}";
  return os.str();
}

bool GammaSet::empty() const {
  for (const auto& c : cells)
    if (c.feasible()) return false;
  return true;
}

std::string GammaSet::str() const {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(c.str());
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? " u " : "") << parts[i];
  return os.str();
}

GammaCell interval_cell(std::optional<Rat> lo, bool lo_strict, std::optional<Rat> hi,
                        bool hi_strict) {
  GammaCell c;
  c.ambient = 1;
  if (lo) {
    LinForm f;
    f.a = {Rat(1)};
    f.c = -*lo;
    c.cons.push_back({f, lo_strict ? Rel::GT : Rel::GE});
  }
  if (hi) {
    LinForm f;
    f.a = {Rat(-1)};
    f.c = *hi;
    c.cons.push_back({f, hi_strict ? Rel::GT : Rel::GE});
  }
  return c;
}

GammaCell point_cell(const std::vector<Rat>& x) {
  GammaCell c;
  c.ambient = static_cast<int>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    LinForm f;
    f.a.assign(x.size(), Rat(0));
    f.a[i] = 1;
    f.c = -x[i];
    c.cons.push_back({f, Rel::EQ});
  }
  return c;
}

GammaCell full_cell(int ambient) {
  GammaCell c;
  c.ambient = ambient;
  return c;
}

long long chi_g(const GammaCell& c) {
  long long chi = 0;
  for_each_open_piece(c, [&](const GammaCell&, int d) { chi += (d % 2 == 0) ? 1 : -1; });
  return chi;
}

long long chi_g(const GammaSet& s) {
  long long chi = 0;
  for (const auto& c : s.cells) chi += chi_g(c);
  return chi;
}

long long chi_b(const GammaCell& c) {
  if (!c.feasible()) return 0;
  return chi_g(clip_to_box(c, box_bound(c)));
}

long long chi_b(const GammaSet& s) {
  long long chi = 0;
  for (const auto& c : s.cells) chi += chi_b(c);
  return chi;
}

GammaCell product(const GammaCell& a, const GammaCell& b) {
  GammaCell c;
  c.ambient = a.ambient + b.ambient;
  for (const auto& con : a.cons) {
    LinForm f = con.form;
    f.a.resize(c.ambient, Rat(0));
    c.cons.push_back({f, con.rel});
  }
  for (const auto& con : b.cons) {
    LinForm f;
    f.a.assign(c.ambient, Rat(0));
    for (int j = 0; j < b.ambient; ++j) f.a[a.ambient + j] = con.form.a[j];
    f.c = con.form.c;
    c.cons.push_back({f, con.rel});
  }
  return c;
}

GammaSet product(const GammaSet& a, const GammaSet& b) {
  GammaSet out;
  for (const auto& x : a.cells)
    for (const auto& y : b.cells) out.cells.push_back(product(x, y));
  return out;
}

GammaSet refine(const GammaSet& s, const std::vector<LinForm>& forms) {
  GammaSet cur = s;
  for (const auto& f : forms) {
    GammaSet next;
    for (const auto& cell : cur.cells) {
      for (int side = 0; side < 3; ++side) {
        GammaCell piece = cell;
        LinForm g = f;
        g.a.resize(cell.ambient, Rat(0));
        if (side == 0) piece.cons.push_back({g, Rel::GT});
        if (side == 1) piece.cons.push_back({g, Rel::EQ});
        if (side == 2) {
          LinForm ng = g;
          for (auto& v : ng.a) v = -v;
          ng.c = -g.c;
          piece.cons.push_back({ng, Rel::GT});
        }
        if (piece.feasible()) next.cells.push_back(piece);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::pair<std::optional<Rat>, std::optional<Rat>> coordinate_range(const GammaCell& c, int i) {
  // Project the closure onto coordinate i by eliminating all others.
  Reduced r = reduce_equalities(c);
  if (r.inconsistent) return {Rat(0), Rat(-1)};  // empty: lo > hi sentinel

  std::vector<Constraint> sys = r.ineqs;
  // Re-add the equality content as two weak inequalities so the projection
  // sees the full closure. reduce_equalities already substituted equalities
  // into the inequalities, but coordinate i itself may be pinned: recover
  // bounds by also substituting into the coordinate form.
  GammaCell closure = c;
  for (auto& con : closure.cons)
    if (con.rel == Rel::GT) con.rel = Rel::GE;
  // Naive elimination over the closure system.
  std::vector<Constraint> work;
  for (const auto& con : closure.cons) {
    if (con.rel == Rel::EQ) {
      work.push_back({con.form, Rel::GE});
      LinForm neg = con.form;
      for (auto& v : neg.a) v = -v;
      neg.c = -con.form.c;
      work.push_back({neg, Rel::GE});
    } else {
      work.push_back(con);
    }
  }
  for (int v = 0; v < c.ambient; ++v) {
    if (v == i) continue;
    std::vector<Constraint> lower, upper, rest;
    for (auto& con : work) {
      if (con.form.a[v] > 0)
        lower.push_back(con);
      else if (con.form.a[v] < 0)
        upper.push_back(con);
      else
        rest.push_back(con);
    }
    for (const auto& lo : lower)
      for (const auto& hi : upper) {
        LinForm f;
        f.a.assign(c.ambient, Rat(0));
        Rat la = lo.form.a[v], ha = -hi.form.a[v];
        for (int j = 0; j < c.ambient; ++j) f.a[j] = lo.form.a[j] * ha + hi.form.a[j] * la;
        f.c = lo.form.c * ha + hi.form.c * la;
        f.a[v] = 0;
        if (!is_zero_form(f) || f.c < 0) rest.push_back({f, Rel::GE});
      }
    work = std::move(rest);
  }
  std::optional<Rat> lo, hi;
  for (const auto& con : work) {
    if (con.form.a[i] > 0) {
      Rat bound = -con.form.c / con.form.a[i];
      if (!lo || bound > *lo) lo = bound;
    } else if (con.form.a[i] < 0) {
      Rat bound = -con.form.c / con.form.a[i];
      if (!hi || bound < *hi) hi = bound;
    }
  }
  return {lo, hi};
}

std::vector<std::vector<Rat>> lattice_points(const GammaCell& c, long long m) {
  if (!c.feasible()) return {};
  std::vector<std::pair<Int, Int>> bounds;
  for (int i = 0; i < c.ambient; ++i) {
    auto [lo, hi] = coordinate_range(c, i);
    if (!lo || !hi)
      throw UnsupportedError("lattice enumeration on unbounded gamma cell");
    bounds.emplace_back(rceil(*lo * m), rfloor(*hi * m));
  }
  std::vector<std::vector<Rat>> out;
  std::vector<Rat> pt(c.ambient);
  std::vector<Int> j(c.ambient);
  // Nested box enumeration with exact membership filtering.
  size_t depth = 0;
  if (c.ambient == 0) {
    out.push_back({});
    return out;
  }
  j[0] = bounds[0].first;
  while (true) {
    if (j[depth] > bounds[depth].second) {
      if (depth == 0) break;
      --depth;
      ++j[depth];
      continue;
    }
    pt[depth] = Rat(j[depth], m);
    if (depth + 1 < static_cast<size_t>(c.ambient)) {
      ++depth;
      j[depth] = bounds[depth].first;
      continue;
    }
    if (c.contains(pt)) out.push_back(pt);
    ++j[depth];
  }
  return out;
}

std::vector<std::vector<Rat>> lattice_points(const GammaSet& s, long long m) {
  std::vector<std::vector<Rat>> out;
  for (const auto& c : s.cells) {
    auto pts = lattice_points(c, m);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

}  // namespace mm
