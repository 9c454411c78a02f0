#include "mm/groth.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "mm/linalg.hpp"

namespace mm {

// ---------------------------------------------------------------- APoly ----

APoly APoly::scalar(const Int& v) {
  APoly r;
  if (v != 0) r.c[0] = v;
  return r;
}

APoly APoly::apow(long long e, const Int& v) {
  APoly r;
  if (v != 0) r.c[e] = v;
  return r;
}

APoly APoly::gm() {
  APoly r;
  r.c[1] = 1;
  r.c[0] = -1;
  return r;
}

APoly APoly::operator+(const APoly& o) const {
  APoly r = *this;
  for (const auto& [e, v] : o.c) {
    auto it = r.c.find(e);
    if (it == r.c.end()) {
      r.c.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == 0) r.c.erase(it);
    }
  }
  return r;
}

APoly APoly::operator-(const APoly& o) const { return *this + (-o); }

APoly APoly::operator*(const APoly& o) const {
  APoly r;
  for (const auto& [e1, v1] : c)
    for (const auto& [e2, v2] : o.c) {
      auto it = r.c.find(e1 + e2);
      if (it == r.c.end()) {
        r.c.emplace(e1 + e2, v1 * v2);
      } else {
        it->second += v1 * v2;
      }
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = (it->second == 0) ? r.c.erase(it) : std::next(it);
  return r;
}

APoly APoly::operator-() const {
  APoly r = *this;
  for (auto& [e, v] : r.c) v = -v;
  return r;
}

APoly APoly::shifted(long long e) const {
  APoly r;
  for (const auto& [k, v] : c) r.c[k + e] = v;
  return r;
}

Rat APoly::eval(const Rat& a) const {
  Rat r = 0;
  for (const auto& [e, v] : c) {
    Rat p = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) p *= a;
    if (e < 0) {
      if (p == 0) throw UnsupportedError("pole in coefficient evaluation");
      p = Rat(1) / p;
    }
    r += Rat(v) * p;
  }
  return r;
}

std::pair<int, APoly> APoly::factor_gm() const {
  if (zero()) return {0, *this};
  APoly cur = *this;
  int k = 0;
  while (true) {
    Int at_one = 0;
    for (const auto& [e, v] : cur.c) at_one += v;
    if (at_one != 0) break;
    // Divide the Laurent polynomial by ([A] - 1): shift to ordinary
    // polynomial form, synthetic-divide, shift back.
    long long lo = cur.c.begin()->first;
    long long hi = cur.c.rbegin()->first;
    std::vector<Int> coeffs(static_cast<size_t>(hi - lo + 1), Int(0));
    for (const auto& [e, v] : cur.c) coeffs[static_cast<size_t>(e - lo)] = v;
    std::vector<Int> q(coeffs.size() > 1 ? coeffs.size() - 1 : 0, Int(0));
    Int carry = 0;
    for (size_t i = coeffs.size(); i-- > 1;) {
      carry += coeffs[i];
      q[i - 1] = carry;
    }
    APoly next;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) next.c[lo + static_cast<long long>(i)] = q[i];
    cur = next;
    ++k;
    if (cur.zero()) break;
  }
  return {k, cur};
}

std::string APoly::str(const std::string& sym) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    long long e = it->first;
    Int v = it->second;
    bool neg = v < 0;
    Int av = neg ? Int(-v) : v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? "-" : "+");
    first = false;
    if (e == 0) {
      os << av.str();
    } else {
      if (av != 1) os << av.str() << "*";
      os << sym;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ----------------------------------------------------------------- Atom ----

namespace {

auto atom_key(const Atom& a) {
  return std::make_tuple(static_cast<int>(a.kind), a.order, a.sign,
                         static_cast<int>(a.field), a.par1, a.par2, a.name, a.face.c);
}

}  // namespace

bool Atom::operator<(const Atom& o) const { return atom_key(*this) < atom_key(o); }
bool Atom::operator==(const Atom& o) const { return atom_key(*this) == atom_key(o); }

std::string Atom::str() const {
  std::ostringstream os;
  auto power = [&](long long m) {
    os << "x";
    if (m != 1) os << "^" << m;
  };
  switch (kind) {
    case Kind::KummerTorsor:
      os << "[{";
      power(order);
      os << (sign < 0 ? "=-rv(t)}]" : "=rv(t)}]");
      break;
    case Kind::KummerVariety:
      os << "[{";
      power(order);
      os << (sign < 0 ? "=-1}]" : "=1}]");
      break;
    case Kind::FaceTorsor:
      os << "[{" << poly_str(face) << (sign < 0 ? "=-rv(t)}]" : "=rv(t)}]");
      break;
    case Kind::CurveVariety:
      os << "[{" << poly_str(face) << (sign < 0 ? "=-1}]" : "=1}]");
      break;
    case Kind::Named:
      os << "[" << name << "]";
      break;
  }
  return os.str();
}

Atom kummer_torsor_atom(long long m, int sign, Field f) {
  Atom a;
  a.kind = Atom::Kind::KummerTorsor;
  a.order = m;
  // Over an algebraically closed residue field the unit target is absorbed
  // by an equivariant coordinate scaling, so only the order matters.
  a.sign = (f == Field::C) ? +1 : sign;
  a.field = f;
  return a;
}

Atom kummer_variety_atom(long long m, int sign, Field f) {
  Atom a = kummer_torsor_atom(m, sign, f);
  a.kind = Atom::Kind::KummerVariety;
  return a;
}

namespace {

// Canonical orientation: a face equation and its coordinate swap present the
// same class; prefer the x-dominant writing (largest x-exponent first, the
// way face equations are quoted), and carry the parity tags along.
void orient_face(Poly2& face, int& par1, int& par2) {
  Poly2 sw = face.swapped();
  int amax = 0, amax_sw = 0;
  for (const auto& [k, v] : face.c) amax = std::max(amax, k.first);
  for (const auto& [k, v] : sw.c) amax_sw = std::max(amax_sw, k.first);
  if (amax_sw > amax || (amax_sw == amax && sw < face)) {
    face = sw;
    std::swap(par1, par2);
  }
}

}  // namespace

Atom face_torsor_atom(const Poly2& face, int par1, int par2, Field f) {
  Atom a;
  a.kind = Atom::Kind::FaceTorsor;
  a.face = face;
  a.par1 = par1;
  a.par2 = par2;
  orient_face(a.face, a.par1, a.par2);
  a.field = f;
  a.order = 0;
  return a;
}

Atom curve_variety_atom(const Poly2& face, int par1, int par2, Field f) {
  Atom a = face_torsor_atom(face, par1, par2, f);
  a.kind = Atom::Kind::CurveVariety;
  return a;
}

Atom named_atom(const std::string& id) {
  Atom a;
  a.kind = Atom::Kind::Named;
  a.name = id;
  a.order = 0;
  return a;
}

// ------------------------------------------------------------ GrothElem ----

namespace {

bool is_kummer(const Atom& a) {
  return a.kind == Atom::Kind::KummerTorsor || a.kind == Atom::Kind::KummerVariety;
}

// Bring an atom product to normal form. Unit Kummer atoms are points and
// drop out; parallel Kummer factors over C merge into one atom of the joint
// orbit order, with the orbit count moving into the coefficient:
//   [{x^a=*}] * [{x^b=*}]  =  gcd(a,b) * [{x^lcm(a,b)=*}].
void canonicalize_monomial(Monomial& m, Int& mult) {
  Monomial out;
  // stage -> (order lcm, point count) for C-side Kummer factors
  Int kt_points = 1, kv_points = 1;
  long long kt_lcm = 1, kv_lcm = 1;
  bool kt_any = false, kv_any = false;
  for (const Atom& a : m) {
    if (is_kummer(a) && a.order == 1) continue;  // a single point
    if (is_kummer(a) && a.field == Field::C) {
      if (a.kind == Atom::Kind::KummerTorsor) {
        kt_any = true;
        kt_points *= a.order;
        kt_lcm = static_cast<long long>(ilcm(kt_lcm, a.order));
      } else {
        kv_any = true;
        kv_points *= a.order;
        kv_lcm = static_cast<long long>(ilcm(kv_lcm, a.order));
      }
      continue;
    }
    out.push_back(a);
  }
  if (kt_any && kt_lcm > 1) out.push_back(kummer_torsor_atom(kt_lcm, +1, Field::C));
  if (kv_any && kv_lcm > 1) out.push_back(kummer_variety_atom(kv_lcm, +1, Field::C));
  if (kt_any) mult *= kt_points / kt_lcm;
  if (kv_any) mult *= kv_points / kv_lcm;
  std::sort(out.begin(), out.end());
  m = std::move(out);
}

}  // namespace

GrothElem GrothElem::zero() { return GrothElem{}; }

GrothElem GrothElem::scalar(const Int& v) { return from_apoly(APoly::scalar(v)); }

GrothElem GrothElem::from_apoly(const APoly& a) {
  GrothElem r;
  if (!a.zero()) r.terms[{}] = a;
  return r;
}

GrothElem GrothElem::atom(const Atom& a) {
  Monomial m{a};
  Int mult = 1;
  canonicalize_monomial(m, mult);
  GrothElem r;
  r.terms[m] = APoly::scalar(mult);
  return r;
}

bool GrothElem::is_zero() const { return terms.empty(); }

GrothElem GrothElem::operator+(const GrothElem& o) const {
  GrothElem r = *this;
  for (const auto& [m, a] : o.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms.emplace(m, a);
    } else {
      it->second = it->second + a;
      if (it->second.zero()) r.terms.erase(it);
    }
  }
  return r;
}

GrothElem GrothElem::operator-(const GrothElem& o) const { return *this + (-o); }

GrothElem GrothElem::operator-() const {
  GrothElem r = *this;
  for (auto& [m, a] : r.terms) a = -a;
  return r;
}

GrothElem GrothElem::operator*(const GrothElem& o) const {
  GrothElem r;
  for (const auto& [m1, a1] : terms)
    for (const auto& [m2, a2] : o.terms) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      Int mult = 1;
      canonicalize_monomial(m, mult);
      APoly a = a1 * a2 * APoly::scalar(mult);
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(m, a);
      } else {
        it->second = it->second + a;
      }
    }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

bool GrothElem::operator==(const GrothElem& o) const { return terms == o.terms; }

GrothElem GrothElem::times(const APoly& a) const {
  GrothElem r;
  if (a.zero()) return r;
  for (const auto& [m, v] : terms) r.terms[m] = v * a;
  return r;
}

GrothElem GrothElem::shifted(long long apow) const {
  GrothElem r;
  for (const auto& [m, v] : terms) r.terms[m] = v.shifted(apow);
  return r;
}

std::string GrothElem::str() const {
  if (terms.empty()) return "0";
  // Display order: atom products first (in atom order), pure scalars last.
  std::vector<std::pair<Monomial, APoly>> items(terms.begin(), terms.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    if (l.first.empty() != r.first.empty()) return !l.first.empty();
    return l.first < r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coeff] : items) {
    auto [k, rest] = coeff.factor_gm();
    std::string body;
    bool neg = false;
    if (rest.c.size() == 1) {
      long long e = rest.c.begin()->first;
      Int v = rest.c.begin()->second;
      neg = v < 0;
      Int av = neg ? Int(-v) : v;
      std::vector<std::string> pieces;
      if (av != 1 || (e == 0 && k == 0 && m.empty())) pieces.push_back(av.str());
      if (e != 0) {
        std::ostringstream p;
        p << "[A]";
        if (e != 1) p << "^" << e;
        pieces.push_back(p.str());
      }
      for (int i = 0; i < k; ++i) pieces.push_back("[Gm]");
      for (const Atom& a : m) pieces.push_back(a.str());
      if (pieces.empty()) pieces.push_back("1");
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (i) body += "*";
        body += pieces[i];
      }
    } else {
      std::vector<std::string> pieces;
      pieces.push_back("(" + rest.str() + ")");
      for (int i = 0; i < k; ++i) pieces.push_back("[Gm]");
      for (const Atom& a : m) pieces.push_back(a.str());
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (i) body += "*";
        body += pieces[i];
      }
    }
    if (first) {
      os << (neg ? "-" : "") << body;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

GrothElem operator*(const Int& v, const GrothElem& e) {
  return e.times(APoly::scalar(v));
}

// ----------------------------------------------------------- stage maps ----

namespace {

// Axis restriction of a face equation: the single term with the given
// coordinate exponent zero, if any. Returns (exponent of the other
// coordinate, coefficient) or order 0 when the restriction vanishes.
std::pair<long long, Int> axis_term(const Poly2& face, bool x_axis) {
  long long deg = 0;
  Int coeff = 0;
  int count = 0;
  for (const auto& [k, v] : face.c) {
    int on_axis = x_axis ? k.second : k.first;
    if (on_axis == 0) {
      deg = x_axis ? k.first : k.second;
      coeff = v;
      ++count;
    }
  }
  if (count > 1) throw UnsupportedError("face equation with non-monomial axis restriction");
  if (count == 0) return {0, 0};
  return {deg, coeff};
}

GrothElem theta_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::KummerTorsor:
      return GrothElem::atom(kummer_variety_atom(a.order, a.sign, a.field));
    case Atom::Kind::FaceTorsor: {
      // Fiber at one of the face torsor: the affine curve {face = sign}
      // includes its axis points, which belong to neighbouring pieces, so
      // they are removed here as unit-root loci.
      GrothElem r = GrothElem::atom(curve_variety_atom(a.face, a.par1, a.par2, a.field));
      auto [dx, cx] = axis_term(a.face, true);
      if (dx > 0) {
        int s = a.sign * (cx < 0 ? -1 : 1);
        r = r - GrothElem::atom(kummer_variety_atom(dx, s, a.field));
      }
      auto [dy, cy] = axis_term(a.face, false);
      if (dy > 0) {
        int s = a.sign * (cy < 0 ? -1 : 1);
        r = r - GrothElem::atom(kummer_variety_atom(dy, s, a.field));
      }
      return r;
    }
    default:
      return GrothElem::atom(a);
  }
}

}  // namespace

GrothElem theta(const GrothElem& e) {
  GrothElem r;
  for (const auto& [m, coeff] : e.terms) {
    GrothElem term = GrothElem::from_apoly(coeff);
    for (const Atom& a : m) term = term * theta_atom(a);
    r = r + term;
  }
  return r;
}

GrothElem xi(const GrothElem& e) {
  GrothElem r;
  for (const auto& [m, coeff] : e.terms) {
    GrothElem term = GrothElem::from_apoly(coeff);
    for (Atom a : m) {
      a.field = Field::R;
      term = term * GrothElem::atom(a);
    }
    r = r + term;
  }
  return r;
}

// ------------------------------------------------------ torsor reduction ----

GrothElem monomial_torsor(const TorsorSpec& spec) {
  size_t rows = spec.rows.size();
  if (spec.positions.size() != rows || spec.signs.size() != rows)
    throw UnsupportedError("torsor spec shape mismatch");
  size_t n = rows == 0 ? 0 : spec.rows[0].size();
  for (const auto& r : spec.rows)
    if (r.size() != n) throw UnsupportedError("torsor spec shape mismatch");

  if (rows == 0) {
    GrothElem r = GrothElem::scalar(1);
    APoly gm_pow = APoly::scalar(1);
    for (size_t i = 0; i < n; ++i) gm_pow = gm_pow * APoly::gm();
    return r.times(gm_pow);
  }

  Smith s = smith_normal_form(spec.rows);
  // Transformed targets: position vector U*e, sign vector with entries
  // prod_j sign_j^(U_ij).
  std::vector<Rat> pos(rows, Rat(0));
  std::vector<int> sgn(rows, +1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < rows; ++j) {
      pos[i] += Rat(s.u[i][j]) * spec.positions[j];
      if (spec.signs[j] < 0 && s.u[i][j] % 2 != 0) sgn[i] = -sgn[i];
    }
  }

  // Rows beyond the rank impose pure consistency conditions on the target.
  for (size_t i = s.rank; i < rows; ++i)
    if (pos[i] != 0 || sgn[i] < 0) return GrothElem::zero();

  GrothElem result = GrothElem::scalar(1);
  if (spec.field == Field::C) {
    long long joint = 1;
    Int points = 1;
    for (size_t i = 0; i < static_cast<size_t>(s.rank); ++i) {
      Int d = s.d[i][i];
      Rat p = pos[i];
      if (d < 0) {
        d = -d;
        p = -p;
      }
      Rat rho = p / Rat(d);
      rho -= Rat(rfloor(rho));
      Int q = den(rho);
      if (d % q != 0) throw UnsupportedError("fractional torsor position");
      points *= d;
      joint = static_cast<long long>(ilcm(Int(joint), q));
    }
    Int mult = points / joint;
    result = mult * GrothElem::atom(kummer_torsor_atom(joint, +1, Field::C));
  } else {
    // Over the reals orbit arithmetic is not available; keep one Kummer
    // factor per diagonal row (branch counts only depend on order and sign).
    for (size_t i = 0; i < static_cast<size_t>(s.rank); ++i) {
      Int d = s.d[i][i];
      if (d < 0) d = -d;
      result = result * GrothElem::atom(kummer_torsor_atom(to_ll(d), sgn[i], Field::R));
    }
  }
  APoly gm_pow = APoly::scalar(1);
  for (size_t i = 0; i < n - static_cast<size_t>(s.rank); ++i) gm_pow = gm_pow * APoly::gm();
  return result.times(gm_pow);
}

}  // namespace mm
