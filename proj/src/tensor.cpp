#include "mm/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace mm {

Rat Summand::sigma(const std::vector<Rat>& x) const {
  Rat r = sig_const;
  for (size_t i = 0; i < sig_lin.size() && i < x.size(); ++i) r += sig_lin[i] * x[i];
  return r;
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  TensorElem r = *this;
  r.parts.insert(r.parts.end(), o.parts.begin(), o.parts.end());
  r.normalize();
  return r;
}

TensorElem TensorElem::operator-() const {
  TensorElem r = *this;
  for (auto& s : r.parts) s.res = -s.res;
  return r;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
  TensorElem r;
  for (const auto& s1 : parts)
    for (const auto& s2 : o.parts) {
      Summand s;
      s.res = s1.res * s2.res;
      s.cell = product(s1.cell, s2.cell);
      s.sig_lin = s1.sig_lin;
      s.sig_lin.insert(s.sig_lin.end(), s2.sig_lin.begin(), s2.sig_lin.end());
      s.sig_const = s1.sig_const + s2.sig_const;
      s.k = s1.k + s2.k;
      s.l = s1.l + s2.l;
      s.at_infinity = s1.at_infinity || s2.at_infinity;
      r.parts.push_back(std::move(s));
    }
  r.normalize();
  return r;
}

TensorElem TensorElem::times(const GrothElem& g) const {
  TensorElem r = *this;
  for (auto& s : r.parts) s.res = s.res * g;
  r.normalize();
  return r;
}

void TensorElem::normalize() {
  std::map<std::string, size_t> seen;
  std::vector<Summand> out;
  for (const auto& s : parts) {
    if (s.res.is_zero()) continue;
    std::ostringstream key;
    key << s.cell.str() << "|";
    for (const auto& v : s.sig_lin) key << rat_str(v) << ",";
    key << "|" << rat_str(s.sig_const) << "|" << s.k << "|" << s.l << "|" << s.at_infinity;
    auto it = seen.find(key.str());
    if (it == seen.end()) {
      seen.emplace(key.str(), out.size());
      out.push_back(s);
    } else {
      out[it->second].res = out[it->second].res + s.res;
    }
  }
  std::erase_if(out, [](const Summand& s) { return s.res.is_zero(); });
  parts = std::move(out);
}

std::string TensorElem::str() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    const Summand& s = parts[i];
    if (i) os << " + ";
    os << "(" << s.res.str() << ") on " << s.cell.str() << " wt ";
    bool first = true;
    for (size_t j = 0; j < s.sig_lin.size(); ++j) {
      if (s.sig_lin[j] == 0) continue;
      if (!first) os << "+";
      if (s.sig_lin[j] != 1) os << rat_str(s.sig_lin[j]) << "*";
      os << "g" << j;
      first = false;
    }
    if (s.sig_const != 0 || first) {
      if (!first) os << "+";
      os << rat_str(s.sig_const);
    }
    os << " [k=" << s.k << ",l=" << s.l << (s.at_infinity ? ",inf" : "") << "]";
  }
  return os.str();
}

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [e, g] : b) {
    auto it = r.find(e);
    if (it == r.end()) {
      r.emplace(e, g);
    } else {
      it->second = it->second + g;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

std::string tpoly_str(const TPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")*T";
    if (it->first != 1) os << "^" << it->first;
  }
  return os.str();
}

GrothElem eb(const TensorElem& t) {
  GrothElem r;
  for (const auto& s : t.parts) r = r + Int(chi_b(s.cell)) * s.res;
  return r;
}

GrothElem eg(const TensorElem& t) {
  GrothElem r;
  for (const auto& s : t.parts)
    r = r + (Int(chi_g(s.cell)) * s.res).shifted(-(s.k + s.l));
  return r;
}

TPoly hm(const TensorElem& t, long long m) {
  TPoly r;
  for (const auto& s : t.parts) {
    if (s.at_infinity) continue;
    for (const auto& pt : lattice_points(s.cell, m)) {
      Rat e = Rat(m) * s.sigma(pt);
      if (!is_integer(e)) throw UnsupportedError("non-integral weight at lattice point");
      long long ee = to_ll(e);
      auto it = r.find(-ee);
      if (it == r.end()) {
        r.emplace(-ee, s.res);
      } else {
        it->second = it->second + s.res;
      }
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

GrothElem eta(const TPoly& p) {
  GrothElem r;
  for (const auto& [e, g] : p) r = r + g.shifted(e);
  return r;
}

TensorElem p_minus_one() {
  TensorElem t;
  {
    Summand s;
    s.res = GrothElem::scalar(1);
    s.cell.cells.push_back(point_cell({Rat(0)}));
    s.sig_lin = {Rat(1)};
    s.k = 1;
    t.parts.push_back(s);
  }
  {
    Summand s;
    s.res = -GrothElem::from_apoly(APoly::gm());
    s.cell.cells.push_back(interval_cell(Rat(0), true, std::nullopt, false));
    s.sig_lin = {Rat(1)};
    s.l = 1;
    t.parts.push_back(s);
  }
  {
    Summand s;
    s.res = GrothElem::scalar(-1);
    s.cell.cells.push_back(point_cell({Rat(0)}));
    s.sig_lin = {Rat(1)};
    t.parts.push_back(s);
  }
  return t;
}

TensorElem p_gamma(const Rat& gamma) {
  TensorElem t;
  {
    Summand s;
    s.res = GrothElem::from_apoly(APoly::gm());
    s.cell.cells.push_back(interval_cell(Rat(0), true, gamma, false));
    s.sig_lin = {Rat(1)};
    s.l = 1;
    t.parts.push_back(s);
  }
  {
    Summand s;
    s.res = GrothElem::scalar(1);
    s.cell.cells.push_back(point_cell({gamma}));
    s.sig_lin = {Rat(1)};
    s.k = 1;
    t.parts.push_back(s);
  }
  return t;
}

}  // namespace mm
