#include "mm/convolve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mm/milnor.hpp"
#include "mm/newton.hpp"
#include "mm/tensor.hpp"

namespace mm {

namespace {

// True when structure row i is a bare fresh coordinate: a unit vector whose
// coordinate appears in no equation and in no other structure row.
bool is_fresh(const DiagClass& d, size_t i) {
  int coord = -1;
  for (int j = 0; j < d.dim; ++j) {
    const Int& v = d.chars[i][j];
    if (v == 0) continue;
    if (v != 1 || coord >= 0) return false;
    coord = j;
  }
  if (coord < 0) return false;
  for (const auto& row : d.eqs)
    if (row[coord] != 0) return false;
  for (size_t k = 0; k < d.chars.size(); ++k)
    if (k != i && d.chars[k][coord] != 0) return false;
  return true;
}

// Row with one column removed.
std::vector<Int> drop_col(const std::vector<Int>& row, int col) {
  std::vector<Int> out;
  out.reserve(row.size() - 1);
  for (size_t j = 0; j < row.size(); ++j)
    if (static_cast<int>(j) != col) out.push_back(row[j]);
  return out;
}

// Pure power a * e_coord; returns false otherwise.
bool pure_power(const std::vector<Int>& row, int& coord, long long& a) {
  coord = -1;
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    if (coord >= 0 || row[j] < 0) return false;
    coord = static_cast<int>(j);
    a = to_ll(row[j]);
  }
  return coord >= 0 && a >= 1;
}

// The two-map case: either a fresh coordinate cancels against the
// complement (leaving the antidiagonal with the surviving map), or both
// maps are powers of independent coordinates and the split is explicit.
GrothElem psi_base(const DiagClass& d) {
  for (size_t i = 0; i < 2; ++i) {
    if (!is_fresh(d, i)) continue;
    // [(G_m x D, (w, p))] maps to [(D, p)]: the complement of {w = -p} is
    // D x (torus minus the graph) and the graph section returns the class
    // being subtracted, so only the antidiagonal with its map survives.
    int coord = 0;
    long long one = 0;
    pure_power(d.chars[i], coord, one);
    TorsorSpec spec;
    for (size_t r = 0; r < d.eqs.size(); ++r) {
      spec.rows.push_back(drop_col(d.eqs[r], coord));
      spec.positions.push_back(Rat(0));
      spec.signs.push_back(d.eq_signs[r]);
    }
    spec.rows.push_back(drop_col(d.chars[1 - i], coord));
    spec.positions.push_back(Rat(1));
    spec.signs.push_back(+1);
    spec.field = Field::C;
    return monomial_torsor(spec).times(d.coeff);
  }

  int ci = 0, cj = 0;
  long long a = 0, b = 0;
  if (pure_power(d.chars[0], ci, a) && pure_power(d.chars[1], cj, b) &&
      ci != cj) {
    bool touched = false;
    for (const auto& row : d.eqs)
      if (row[ci] != 0 || row[cj] != 0) touched = true;
    if (!touched) {
      // Factor carried by the coordinates the equations do involve.
      TorsorSpec rest;
      for (size_t r = 0; r < d.eqs.size(); ++r) {
        std::vector<Int> row = drop_col(d.eqs[r], std::max(ci, cj));
        rest.rows.push_back(drop_col(row, std::min(ci, cj)));
        rest.positions.push_back(Rat(0));
        rest.signs.push_back(d.eq_signs[r]);
      }
      if (rest.rows.empty() && d.dim > 2) {
        rest.rows.push_back(std::vector<Int>(d.dim - 2, Int(0)));
        rest.positions.push_back(Rat(0));
        rest.signs.push_back(+1);
      }
      GrothElem factor = GrothElem::scalar(1);
      if (!rest.rows.empty()) factor = monomial_torsor(rest);

      // Complement piece: both powers tie against the moving value, the
      // same residue family as a staircase edge between (a,0) and (0,b).
      long long g = std::gcd(a, b);
      Poly2 face;
      face.c[{static_cast<int>(a), 0}] = 1;
      face.c[{0, static_cast<int>(b)}] = 1;
      Atom ft = face_torsor_atom(face, static_cast<int>((b / g) % 2),
                                 static_cast<int>((a / g) % 2), Field::C);
      GrothElem dot = GrothElem::atom(ft);

      // Antidiagonal piece: {u^a = -v^b} with a free tautological factor.
      TorsorSpec anti;
      std::vector<Int> row(2, Int(0));
      row[0] = a;
      row[1] = -Int(b);
      anti.rows.push_back(row);
      anti.positions.push_back(Rat(0));
      anti.signs.push_back(-1);
      anti.field = Field::C;
      GrothElem ddot = monomial_torsor(anti);

      return (factor * (ddot - dot)).times(d.coeff);
    }
  }
  throw UnsupportedError("unsupported convolution atom");
}

}  // namespace

GrothElem psi(const DiagClass& d) {
  size_t l = d.chars.size();
  if (l != d.theta.size() || l < 2)
    throw UnsupportedError("unsupported convolution atom");
  if (d.theta[0] != d.theta[1])
    throw UnsupportedError("unsupported convolution atom");
  for (size_t i = 1; i < l; ++i)
    if (d.theta[i] < d.theta[i - 1])
      throw UnsupportedError("unsupported convolution atom");
  if (d.eqs.size() != d.eq_signs.size())
    throw std::runtime_error("internal: diagonal class shape mismatch");
  for (const auto& row : d.eqs)
    if (row.size() != static_cast<size_t>(d.dim))
      throw std::runtime_error("internal: diagonal class shape mismatch");
  for (const auto& row : d.chars)
    if (row.size() != static_cast<size_t>(d.dim))
      throw std::runtime_error("internal: diagonal class shape mismatch");
  if (d.coeff.zero()) return GrothElem::zero();
  if (l == 2) return psi_base(d);

  // Cut out the antidiagonal of the first two maps (their values agree up
  // to sign, and neither vanishes on a torus), adjoin a fresh coordinate
  // carrying the next weight, and recurse.
  DiagClass next;
  next.dim = d.dim + 1;
  next.coeff = d.coeff;
  for (size_t r = 0; r < d.eqs.size(); ++r) {
    std::vector<Int> row = d.eqs[r];
    row.push_back(0);
    next.eqs.push_back(row);
    next.eq_signs.push_back(d.eq_signs[r]);
  }
  std::vector<Int> anti(d.dim + 1, Int(0));
  for (int j = 0; j < d.dim; ++j) anti[j] = d.chars[0][j] - d.chars[1][j];
  next.eqs.push_back(anti);
  next.eq_signs.push_back(-1);

  std::vector<Int> fresh(d.dim + 1, Int(0));
  fresh[d.dim] = 1;
  next.chars.push_back(fresh);
  next.theta.push_back(d.theta[2]);
  for (size_t i = 2; i < l; ++i) {
    std::vector<Int> row = d.chars[i];
    row.push_back(0);
    next.chars.push_back(row);
    next.theta.push_back(d.theta[i]);
  }
  return psi(next);
}

namespace {

// A monomial of a fiber class the convolution understands: a plain scalar
// (a multiple of the unit) or one complex Kummer torsor factor.
struct ConvAtom {
  bool unit = false;
  long long order = 1;
};

ConvAtom classify(const Monomial& m) {
  ConvAtom c;
  if (m.empty()) {
    c.unit = true;
    return c;
  }
  if (m.size() == 1 && m[0].kind == Atom::Kind::KummerTorsor &&
      m[0].field == Field::C && m[0].sign > 0) {
    c.order = m[0].order;
    return c;
  }
  throw UnsupportedError("unsupported convolution atom");
}

}  // namespace

GrothElem convolve(const GrothElem& a, const GrothElem& b) {
  GrothElem out = GrothElem::zero();
  for (const auto& [ma, ca] : a.terms) {
    ConvAtom xa = classify(ma);
    for (const auto& [mb, cb] : b.terms) {
      ConvAtom xb = classify(mb);
      GrothElem piece;
      if (xa.unit) {
        piece.terms[mb] = APoly::scalar(1);
      } else if (xb.unit) {
        piece.terms[ma] = APoly::scalar(1);
      } else {
        DiagClass d;
        d.dim = 2;
        d.chars = {{Int(xa.order), Int(0)}, {Int(0), Int(xb.order)}};
        d.theta = {Rat(1), Rat(1)};
        piece = psi(d);
      }
      out = out + piece.times(ca * cb);
    }
  }
  return out;
}

namespace {

// A nonzero one-variable monomial c*x^a or c*y^b; reports which variable.
void single_power(const Poly2& p, const std::string& label, bool& uses_x,
                  long long& expo) {
  if (p.c.empty())
    throw UnsupportedError("zero summand in separated-variable input: " +
                           label);
  if (p.c.size() != 1)
    throw UnsupportedError("unsupported convolution atom");
  auto [key, coeff] = *p.c.begin();
  auto [ax, ay] = key;
  if (coeff == 0 || (ax > 0 && ay > 0) || (ax == 0 && ay == 0))
    throw UnsupportedError("unsupported convolution atom");
  uses_x = ax > 0;
  expo = uses_x ? ax : ay;
}

GrothElem one_variable_fiber(long long expo) {
  if (expo == 1) return GrothElem::scalar(1);
  return GrothElem::atom(kummer_torsor_atom(expo, +1, Field::C));
}

}  // namespace

TwoVariableSplit ts_two(const std::string& f, const std::string& g) {
  Poly2 pf = poly_parse(f);
  Poly2 pg = poly_parse(g);
  bool fx = false, gx = false;
  long long a = 0, b = 0;
  single_power(pf, "f", fx, a);
  single_power(pg, "g", gx, b);
  if (fx == gx) throw UnsupportedError("summands share a variable");
  if (!fx) {
    std::swap(a, b);
  }

  TwoVariableSplit r;
  Poly2 h;
  h.c[{static_cast<int>(a), 0}] = 1;
  h.c[{0, static_cast<int>(b)}] = 1;
  r.direct = eb(milnor_integral(h, Field::C));
  r.left = one_variable_fiber(a);
  r.right = one_variable_fiber(b);
  r.cross = convolve(r.left, r.right);
  r.assembled = r.left + r.right - r.cross;
  return r;
}

AssembleResult ts_assemble(const std::string& f, const std::string& g,
                           long long N, const std::vector<long long>& m_list) {
  Poly2 pf = poly_parse(f);
  Poly2 pg = poly_parse(g);
  bool fx = false, gx = false;
  long long fe = 0, ge = 0;
  single_power(pf, "f", fx, fe);
  single_power(pg, "g", gx, ge);
  if (!fx || gx || fe != 1 || ge != 1)
    throw UnsupportedError("unsupported (f,g) pair");
  if (N < 2) throw UnsupportedError("degenerate exponent list");
  if (m_list.empty()) throw UnsupportedError("degenerate exponent list");
  for (size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 2 || (i > 0 && m_list[i] <= m_list[i - 1]))
      throw UnsupportedError("degenerate exponent list");
  }

  AssembleResult r;
  std::ostringstream diag;
  if (m_list[0] >= N)
    diag << "ordering: expected m_2 < N, got m_2=" << m_list[0]
         << ", N=" << N << "; proceeding. ";
  if (m_list.size() > 1 && m_list[1] <= N)
    diag << "ordering: expected N < m_3, got N=" << N
         << ", m_3=" << m_list[1] << "; proceeding. ";
  r.diagnostic = diag.str();

  long long m2 = m_list[0];
  Poly2 h;
  h.c[{0, static_cast<int>(N)}] = 1;
  for (long long m : m_list) h.c[{static_cast<int>(m), 0}] = 1;
  r.direct = eb(milnor_integral(h, Field::C));

  // Axis families; the branch locus of the pure-power sum meets the
  // vanishing neighbourhood only at the origin, so it contributes the
  // bare class.
  r.pieces.push_back(one_variable_fiber(N));
  r.pieces.push_back(one_variable_fiber(m2));

  // Branch-locus families: residues sit on {u^N = -v^{m_2}} (only the two
  // lowest-order terms of the partial sum tie at the relevant weights; the
  // rest are determined corrections), carrying the next power as the map.
  for (size_t i = 1; i < m_list.size(); ++i) {
    TorsorSpec spec;
    spec.rows.push_back({Int(N), -Int(m2)});
    spec.positions.push_back(Rat(0));
    spec.signs.push_back(-1);
    spec.rows.push_back({Int(0), Int(m_list[i])});
    spec.positions.push_back(Rat(1));
    spec.signs.push_back(+1);
    spec.field = Field::C;
    r.pieces.push_back(monomial_torsor(spec));
  }

  // Convolution corrections, one per stage.
  std::vector<GrothElem> psis;
  for (size_t i = 0; i < m_list.size(); ++i) {
    long long mi = m_list[i];
    DiagClass d;
    d.dim = 2;
    d.chars.push_back({Int(N), Int(0)});
    d.theta.push_back(Rat(m2) / mi);
    for (size_t k = 0; k <= i; ++k) {
      d.chars.push_back({Int(0), Int(m_list[k])});
      d.theta.push_back(Rat(m_list[k]) / mi);
    }
    psis.push_back(psi(d));
  }

  r.assembled = GrothElem::zero();
  for (const GrothElem& p : r.pieces) r.assembled = r.assembled + p;
  for (const GrothElem& p : psis) {
    r.assembled = r.assembled - p;
    r.pieces.push_back(p);
  }
  return r;
}

}  // namespace mm
