#include "mm/zeta.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mm/oracle.hpp"

namespace mm {

namespace {

// ---------------------------------------------------------------------------
// small helpers

long long to_ll_checked(const Rat& r, const char* what) {
  if (!is_integer(r)) throw UnsupportedError(std::string(what) + " is fractional");
  return to_ll(num(r));
}

// Strip one factor [A]-1 from every coefficient; residues of tail pieces
// always carry it, so failure here means a malformed summand.
GrothElem divide_gm(const GrothElem& e) {
  GrothElem out;
  APoly gm1 = APoly::gm();
  for (const auto& [mono, ap] : e.terms) {
    auto [k, rest] = ap.factor_gm();
    if (k < 1) throw std::runtime_error("internal: tail residue not divisible by [A]-1");
    APoly red = rest;
    for (int i = 1; i < k; ++i) red = red * gm1;
    out.terms[mono] = red;
  }
  return out;
}

// Signed index range of the finite geometric sum (1-x^Q)/(1-x):
// Q >= 0 gives +x^0..+x^(Q-1), Q < 0 gives -x^Q..-x^(-1).
std::vector<std::pair<long long, int>> finite_geom(long long q) {
  std::vector<std::pair<long long, int>> out;
  if (q >= 0)
    for (long long j = 0; j < q; ++j) out.push_back({j, +1});
  else
    for (long long j = q; j < 0; ++j) out.push_back({j, -1});
  return out;
}

// ---------------------------------------------------------------------------
// cell shape analysis

struct RayShape {
  std::vector<std::pair<int, Rat>> fixed;  // (coordinate, value)
  int vary = 0;
  Rat lo = 0;
  bool lo_strict = true;
};

// A 1-dimensional unbounded cell must be an upward coordinate ray with every
// other coordinate pinned; anything else is outside the calculus.
RayShape analyze_ray(const GammaCell& c) {
  RayShape r;
  int vary = -1;
  for (int i = 0; i < c.ambient; ++i) {
    auto [lo, hi] = coordinate_range(c, i);
    if (!lo.has_value())
      throw UnsupportedError("unbounded piece outside the upward ray family");
    if (!hi.has_value()) {
      if (vary >= 0) throw UnsupportedError("unbounded piece outside the upward ray family");
      vary = i;
      r.lo = *lo;
    } else if (*lo == *hi) {
      r.fixed.push_back({i, *lo});
    } else {
      throw UnsupportedError("unbounded piece outside the upward ray family");
    }
  }
  if (vary < 0) throw std::runtime_error("internal: bounded cell reached ray analysis");
  r.vary = vary;
  std::vector<Rat> probe(c.ambient, Rat(0));
  for (auto& [i, v] : r.fixed) probe[i] = v;
  probe[vary] = r.lo;
  r.lo_strict = !c.contains(probe);
  return r;
}

bool cell_is_bounded(const GammaCell& c) {
  for (int i = 0; i < c.ambient; ++i) {
    auto [lo, hi] = coordinate_range(c, i);
    if (!lo.has_value() || !hi.has_value()) return false;
  }
  return true;
}

std::vector<Rat> point_of_cell(const GammaCell& c) {
  std::vector<Rat> pt(c.ambient);
  for (int i = 0; i < c.ambient; ++i) {
    auto [lo, hi] = coordinate_range(c, i);
    if (!lo || !hi || *lo != *hi)
      throw std::runtime_error("internal: zero-dimensional cell without a point");
    pt[i] = *lo;
  }
  return pt;
}

// Endpoints of the closure of a bounded one-dimensional cell.
std::pair<std::vector<Rat>, std::vector<Rat>> segment_endpoints(const GammaCell& c) {
  if (c.ambient == 1) {
    auto [lo, hi] = coordinate_range(c, 0);
    return {{*lo}, {*hi}};
  }
  if (c.ambient != 2)
    throw UnsupportedError("one-dimensional piece in ambient dimension above two");
  auto [l0, h0] = coordinate_range(c, 0);
  auto [l1, h1] = coordinate_range(c, 1);
  if (*l0 != *h0) {
    // parametrized by the first coordinate; solve the cut equation for the
    // second
    for (const auto& con : c.cons) {
      if (con.rel != Rel::EQ) continue;
      if (con.form.a[1] == 0) continue;
      auto other = [&](const Rat& x0) {
        return (-con.form.c - con.form.a[0] * x0) / con.form.a[1];
      };
      return {{*l0, other(*l0)}, {*h0, other(*h0)}};
    }
    throw std::runtime_error("internal: segment without a usable cut equation");
  }
  return {{*l0, *l1}, {*l0, *h1}};
}

long long lcm_of_denominators(std::initializer_list<const std::vector<Rat>*> vecs) {
  Int m = 1;
  for (const auto* v : vecs)
    for (const auto& r : *v) m = ilcm(m, den(r));
  return to_ll(m);
}

// ---------------------------------------------------------------------------
// term assembly

ZetaTerm make_term(const GrothElem& coeff, long long a0, long long b0,
                   std::vector<std::pair<long long, long long>> poles) {
  std::sort(poles.begin(), poles.end());
  return ZetaTerm{coeff, a0, b0, std::move(poles)};
}

// Ray tail: along {x_vary > lo or >= lo}, each level m meeting the pinned
// congruences contributes residue/( [A]-1 ) * [A]^(-(m sigma0 + j0(m) - 1))
// where sigma0 omits the varying coordinate and j0 is the first admissible
// numerator. Per residue class the exponent is affine in the level.
void emit_ray(const Summand& s, const GammaCell& cell, ZetaFn& out) {
  RayShape r = analyze_ray(cell);
  if (s.sig_lin[r.vary] != 1)
    throw UnsupportedError("ray weight slope other than one");
  GrothElem rest = divide_gm(s.res);
  Rat sigma0 = s.sig_const;
  Int period = ilcm(Int(1), den(r.lo));
  for (auto& [i, v] : r.fixed) {
    sigma0 += s.sig_lin[i] * v;
    period = ilcm(period, den(v));
  }
  long long M = to_ll(period);
  for (long long cls = 1; cls <= M; ++cls) {
    bool ok = true;
    for (auto& [i, v] : r.fixed)
      if (!is_integer(cls * v)) ok = false;
    if (!ok) continue;
    Rat rlo = cls * r.lo;
    long long j0 = r.lo_strict ? to_ll(rfloor(rlo)) + 1 : to_ll(rceil(rlo));
    long long e0 = -to_ll_checked(cls * sigma0 + j0 - 1, "ray tail exponent");
    long long step = -to_ll_checked(M * (sigma0 + r.lo), "ray tail exponent step");
    out.terms.push_back(make_term(rest, e0, cls, {{step, M}}));
  }
}

// Isolated admissible point: a plain geometric series in its denominator.
void emit_point(const Summand& s, const GammaCell& cell, ZetaFn& out) {
  std::vector<Rat> pt = point_of_cell(cell);
  long long M = lcm_of_denominators({&pt});
  long long e = -to_ll_checked(M * s.sigma(pt), "point weight");
  out.terms.push_back(make_term(s.res, e, M, {{e, M}}));
}

struct SegSample {
  long long count = 0;
  long long anchor_exp = 0;  // exponent at the first point along the direction
};

// Bounded segment: per residue class the admissible points form an affine
// family; three consecutive samples pin the family and a fourth-point check
// certifies it. The class then sums to at most two pole factors.
void emit_segment(const Summand& s, const GammaCell& cell, ZetaFn& out) {
  auto [p0, p1] = segment_endpoints(cell);
  int n = cell.ambient;

  // primitive integer direction
  std::vector<Rat> v(n);
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    v[i] = p1[i] - p0[i];
    scale = ilcm(scale, den(v[i]));
  }
  std::vector<Int> u(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    u[i] = num(v[i] * scale);
    g = igcd(g, u[i]);
  }
  for (int i = 0; i < n; ++i) u[i] /= g;

  Rat step_rat = 0;
  for (int i = 0; i < n; ++i) step_rat += s.sig_lin[i] * Rat(u[i]);
  long long delta = -to_ll_checked(step_rat, "weight step along segment");

  long long M = lcm_of_denominators({&p0, &p1});

  auto sample = [&](long long m) {
    auto pts = lattice_points(cell, m);
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      Rat ka = 0, kb = 0;
      for (int i = 0; i < n; ++i) {
        ka += a[i] * Rat(u[i]);
        kb += b[i] * Rat(u[i]);
      }
      return ka < kb;
    });
    SegSample out2;
    out2.count = static_cast<long long>(pts.size());
    for (long long j = 0; j < out2.count; ++j) {
      long long e = -to_ll_checked(m * s.sigma(pts[j]), "lattice point weight");
      if (j == 0)
        out2.anchor_exp = e;
      else if (e != out2.anchor_exp + delta * j)
        throw std::runtime_error("internal: segment weights not affine along direction");
    }
    return out2;
  };

  for (long long cls = 1; cls <= M; ++cls) {
    SegSample sm[4];
    for (int i = 0; i < 4; ++i) sm[i] = sample(cls + M * i);
    int base = sm[0].count > 0 ? 0 : 1;
    if (sm[0].count == 0 && sm[1].count == 0) {
      if (sm[2].count != 0 || sm[3].count != 0)
        throw std::runtime_error("internal: segment counts not affine per class");
      continue;
    }
    long long na = sm[base].count;
    long long n1 = sm[base + 1].count - na;
    if (n1 < 0 || sm[base + 2].count != na + 2 * n1)
      throw std::runtime_error("internal: segment counts not affine per class");
    long long ea = sm[base].anchor_exp;
    long long e1 = sm[base + 1].anchor_exp - ea;
    if (sm[base + 2].count > 0 && sm[base + 2].anchor_exp != ea + 2 * e1)
      throw std::runtime_error("internal: segment anchors not affine per class");
    long long ma = cls + M * base;

    std::vector<std::pair<long long, long long>> poles = {{e1, M}, {e1 + delta * n1, M}};
    for (auto [j, sg] : finite_geom(na)) {
      GrothElem c = sg > 0 ? s.res : -s.res;
      out.terms.push_back(make_term(c, ea + delta * j, ma, poles));
    }
    for (auto [j, sg] : finite_geom(na - n1)) {
      GrothElem c = sg > 0 ? -s.res : s.res;
      out.terms.push_back(make_term(c, ea + delta * (n1 + j) + e1, ma + M, poles));
    }
  }
}

std::string term_key(const ZetaTerm& t) {
  std::ostringstream os;
  os << t.a0 << '|' << t.b0;
  for (auto& [a, b] : t.poles) os << '|' << a << ',' << b;
  return os.str();
}

// Single-pole terms as arithmetic-progression data: coefficient of T^m is
// c*[A]^(e0 + a*(m-m0)/p) for m = m0, m0+p, ... (p = 0 marks a lone monomial).
struct Prog {
  GrothElem c;
  long long m0 = 0, e0 = 0, p = 0, a = 0;
};

Prog as_progression(const ZetaTerm& t) {
  if (t.poles.size() > 1)
    throw UnsupportedError("coefficientwise product of a growing-count series");
  Prog pr;
  pr.c = t.coeff;
  pr.m0 = t.b0;
  pr.e0 = t.a0;
  if (t.poles.size() == 1) {
    pr.a = t.poles[0].first;
    pr.p = t.poles[0].second;
  }
  return pr;
}

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// ZetaFn

ZetaFn ZetaFn::operator+(const ZetaFn& o) const {
  ZetaFn out = *this;
  out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
  out.normalize();
  return out;
}

ZetaFn ZetaFn::operator-() const {
  ZetaFn out = *this;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

void ZetaFn::normalize() {
  std::map<std::string, ZetaTerm> merged;
  for (const auto& t : terms) {
    std::string k = term_key(t);
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(k, t);
    else
      it->second.coeff = it->second.coeff + t.coeff;
  }
  terms.clear();
  for (auto& [k, t] : merged)
    if (!t.coeff.is_zero()) terms.push_back(std::move(t));
}

std::string ZetaFn::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")";
    if (t.a0 != 0) os << "*[A]^" << t.a0;
    if (t.b0 != 0) {
      os << "*T";
      if (t.b0 != 1) os << "^" << t.b0;
    }
    if (!t.poles.empty()) {
      os << " / (";
      for (size_t i = 0; i < t.poles.size(); ++i) {
        auto [a, b] = t.poles[i];
        os << "(1 - ";
        if (a != 0) os << "[A]^" << a << "*";
        os << "T";
        if (b != 1) os << "^" << b;
        os << ")";
      }
      os << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// construction from the graded integral

ZetaFn zeta_from_tensor(const TensorElem& t) {
  ZetaFn out;
  for (const auto& s : t.parts) {
    if (s.at_infinity) continue;
    for (const auto& cell : s.cell.cells) {
      int d = cell.dim();
      if (d < 0) continue;
      if (d == 0)
        emit_point(s, cell, out);
      else if (d == 1) {
        if (cell_is_bounded(cell))
          emit_segment(s, cell, out);
        else
          emit_ray(s, cell, out);
      } else {
        throw UnsupportedError("full-dimensional piece in a deformation series");
      }
    }
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// coefficients, limit, products

GrothElem zeta_coefficient(const ZetaFn& z, long long m) {
  GrothElem out;
  for (const auto& t : z.terms) {
    if (t.poles.empty()) {
      if (t.b0 == m) out = out + t.coeff.shifted(t.a0);
    } else if (t.poles.size() == 1) {
      auto [a, b] = t.poles[0];
      long long r = m - t.b0;
      if (r >= 0 && r % b == 0) out = out + t.coeff.shifted(t.a0 + a * (r / b));
    } else if (t.poles.size() == 2) {
      auto [a1, b1] = t.poles[0];
      auto [a2, b2] = t.poles[1];
      for (long long k1 = 0; t.b0 + k1 * b1 <= m; ++k1) {
        long long r = m - t.b0 - k1 * b1;
        if (r % b2 == 0) out = out + t.coeff.shifted(t.a0 + a1 * k1 + a2 * (r / b2));
      }
    } else {
      throw std::runtime_error("internal: more than two pole factors");
    }
  }
  return out;
}

GrothElem zeta_coefficient_direct(const TensorElem& t, long long m) {
  GrothElem out;
  for (const auto& s : t.parts) {
    if (s.at_infinity) continue;
    for (const auto& cell : s.cell.cells) {
      int d = cell.dim();
      if (d < 0) continue;
      if (d <= 1 && cell_is_bounded(cell)) {
        for (const auto& pt : lattice_points(cell, m))
          out = out + s.res.shifted(-to_ll_checked(m * s.sigma(pt), "lattice point weight"));
        continue;
      }
      if (d != 1) throw UnsupportedError("full-dimensional piece in a deformation series");
      RayShape r = analyze_ray(cell);
      if (s.sig_lin[r.vary] != 1)
        throw UnsupportedError("ray weight slope other than one");
      bool ok = true;
      Rat sigma0 = s.sig_const;
      for (auto& [i, v] : r.fixed) {
        if (!is_integer(m * v)) ok = false;
        sigma0 += s.sig_lin[i] * v;
      }
      if (!ok) continue;
      Rat rlo = m * r.lo;
      long long j0 = r.lo_strict ? to_ll(rfloor(rlo)) + 1 : to_ll(rceil(rlo));
      long long e = -to_ll_checked(m * sigma0 + j0 - 1, "ray tail exponent");
      out = out + divide_gm(s.res).shifted(e);
    }
  }
  return out;
}

GrothElem minus_limit_at_infinity(const ZetaFn& z) {
  GrothElem lim;
  for (const auto& t : z.terms) {
    long long deg = t.b0;
    long long shift = t.a0;
    for (auto& [a, b] : t.poles) {
      deg -= b;
      shift -= a;
    }
    if (deg > 0) throw UnsupportedError("limit undefined: bare positive power of T");
    if (deg < 0) continue;
    GrothElem v = t.coeff.shifted(shift);
    if (t.poles.size() % 2 == 1) v = -v;
    lim = lim + v;
  }
  return -lim;
}

ZetaFn hadamard(const ZetaFn& x, const ZetaFn& y) {
  ZetaFn out;
  for (const auto& tx : x.terms) {
    Prog px = as_progression(tx);
    for (const auto& ty : y.terms) {
      Prog py = as_progression(ty);
      GrothElem c = px.c * py.c;
      if (px.p == 0 && py.p == 0) {
        if (px.m0 == py.m0)
          out.terms.push_back(make_term(c, px.e0 + py.e0, px.m0, {}));
      } else if (px.p == 0 || py.p == 0) {
        const Prog& lone = px.p == 0 ? px : py;
        const Prog& run = px.p == 0 ? py : px;
        long long r = lone.m0 - run.m0;
        if (r >= 0 && r % run.p == 0)
          out.terms.push_back(
              make_term(c, lone.e0 + run.e0 + run.a * (r / run.p), lone.m0, {}));
      } else {
        long long xx, yy;
        long long g = egcd(px.p, py.p, xx, yy);
        if ((py.m0 - px.m0) % g != 0) continue;
        long long L = px.p / g * py.p;
        // smallest common level of the two progressions
        long long k = ((py.m0 - px.m0) / g % (py.p / g) + py.p / g) % (py.p / g);
        k = static_cast<long long>(
            (static_cast<__int128>(k) * ((xx % (py.p / g) + py.p / g) % (py.p / g))) %
            (py.p / g));
        long long mstar = px.m0 + k * px.p;
        while (mstar < py.m0) mstar += L;
        long long e = px.e0 + px.a * ((mstar - px.m0) / px.p) + py.e0 +
                      py.a * ((mstar - py.m0) / py.p);
        long long s = px.a * (L / px.p) + py.a * (L / py.p);
        out.terms.push_back(make_term(c, e, mstar, {{s, L}}));
      }
    }
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Euler specialization

namespace {

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return qpoly_trim(out);
}

QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
  QPoly rem = a, q;
  int db = qpoly_deg(b);
  if (db < 0) throw std::runtime_error("internal: division by zero polynomial");
  int da = qpoly_deg(rem);
  if (da < db) {
    if (da < 0) return {};
    throw std::runtime_error("internal: inexact polynomial division");
  }
  q.assign(da - db + 1, Rat(0));
  while ((da = qpoly_deg(rem)) >= db) {
    Rat f = rem[da] / b[db];
    q[da - db] = f;
    for (int i = 0; i <= db; ++i) rem[da - db + i] -= f * b[i];
    rem = qpoly_trim(rem);
  }
  if (qpoly_deg(rem) >= 0) throw std::runtime_error("internal: inexact polynomial division");
  return qpoly_trim(q);
}

QPoly one_minus(int eps, long long b) {
  QPoly f(static_cast<size_t>(b) + 1, Rat(0));
  f[0] = 1;
  f[b] = -eps;
  return f;
}

int parity_sign(long long e) { return (e % 2 == 0) ? +1 : -1; }

std::string qpoly_T_str(const QPoly& p) {
  if (qpoly_deg(p) < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat ac = c < 0 ? -c : c;
    bool unit = (ac == 1) && i > 0;
    if (!unit) os << rat_str(ac);
    if (i > 0) {
      if (!unit) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string topological_zeta(const ZetaFn& z, const KnowledgeBase& kb) {
  // per-term rational data: scalar, T-power, pole factors (eps, b)
  struct TTerm {
    Rat c;
    long long b0;
    std::map<std::pair<int, long long>, int> fac;
  };
  std::vector<TTerm> tts;
  std::map<std::pair<int, long long>, int> all;
  for (const auto& t : z.terms) {
    Rat c = 0;
    for (const auto& [mono, ap] : t.coeff.terms) {
      Rat part = ap.eval(-1);
      for (const auto& atom : mono) part *= Rat(realize_complex(GrothElem::atom(atom), kb));
      c += part;
    }
    c *= parity_sign(t.a0);
    TTerm tt{c, t.b0, {}};
    for (auto& [a, b] : t.poles) tt.fac[{parity_sign(a), b}]++;
    for (auto& [f, k] : tt.fac) all[f] = std::max(all[f], k);
    tts.push_back(std::move(tt));
  }
  QPoly den = {Rat(1)};
  for (auto& [f, k] : all)
    for (int i = 0; i < k; ++i) den = qpoly_mul(den, one_minus(f.first, f.second));
  QPoly numsum = {};
  for (const auto& tt : tts) {
    QPoly part(static_cast<size_t>(tt.b0) + 1, Rat(0));
    part[tt.b0] = tt.c;
    for (auto& [f, k] : all) {
      int missing = k - (tt.fac.count(f) ? tt.fac.at(f) : 0);
      for (int i = 0; i < missing; ++i) part = qpoly_mul(part, one_minus(f.first, f.second));
    }
    if (numsum.size() < part.size()) numsum.resize(part.size(), Rat(0));
    for (size_t i = 0; i < part.size(); ++i) numsum[i] += part[i];
    numsum = qpoly_trim(numsum);
  }
  QPoly g = qpoly_gcd(numsum, den);
  if (qpoly_deg(g) > 0) {
    numsum = qpoly_div_exact(numsum, g);
    den = qpoly_div_exact(den, g);
  }
  if (den.empty() || den[0] == 0)
    throw std::runtime_error("internal: denominator lost its constant term");
  Rat s = Rat(1) / den[0];
  for (auto& c : numsum) c *= s;
  for (auto& c : den) c *= s;
  if (qpoly_deg(den) == 0) return qpoly_T_str(numsum);
  return qpoly_T_str(numsum) + " / (" + qpoly_T_str(den) + ")";
}

}  // namespace mm
