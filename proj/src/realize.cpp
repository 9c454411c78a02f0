#include "mm/realize.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mm/newton.hpp"
#include "mm/oracle.hpp"

namespace mm {

KnowledgeBase::KnowledgeBase() {
  // Frozen facts about the one curve family the realization layer cannot
  // derive from lattice data: the Poincare data of {x^6+x^2y^2=1} over R
  // (one noncompact branch pair) and its two-element symmetry refinement.
  add("[{x^6+x^2y^2=1}]@R#10", "beta", "u-1", "builtin", true);
  add("[{x^6+x^2y^2=1}]@R#10", "beta-mu2", "u", "builtin", true);
}

KnowledgeBase KnowledgeBase::with_env() {
  KnowledgeBase kb;
  if (const char* path = std::getenv("MM_KB_PATH")) kb.load_file(path);
  return kb;
}

void KnowledgeBase::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnsupportedError("cannot open knowledge base file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(pos));
        break;
      }
      cols.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (cols.size() < 3) throw ParseError("knowledge base line needs id, realization, value");
    add(cols[0], cols[1], cols[2], cols.size() > 3 ? cols[3] : "", false);
  }
}

void KnowledgeBase::add(const std::string& atom_id, const std::string& realization,
                        const std::string& value, const std::string& provenance,
                        bool overwrite) {
  auto key = std::make_pair(atom_id, realization);
  if (!overwrite && entries_.count(key)) return;  // built-ins win
  entries_[key] = {value, provenance};
}

const std::string& KnowledgeBase::lookup(const std::string& atom_id,
                                         const std::string& realization) const {
  auto it = entries_.find({atom_id, realization});
  if (it == entries_.end())
    throw UnsupportedError("no " + realization + " value known for " + atom_id);
  return it->second.first;
}

bool KnowledgeBase::has(const std::string& atom_id, const std::string& realization) const {
  return entries_.count({atom_id, realization}) > 0;
}

const std::string& KnowledgeBase::provenance(const std::string& atom_id,
                                             const std::string& realization) const {
  auto it = entries_.find({atom_id, realization});
  if (it == entries_.end())
    throw UnsupportedError("no " + realization + " value known for " + atom_id);
  return it->second.second;
}

std::string atom_kb_id(const Atom& a) {
  std::string id = a.str();
  id += (a.field == Field::R) ? "@R" : "@C";
  if (a.par1 || a.par2) {
    id += "#";
    id += std::to_string(a.par1);
    id += std::to_string(a.par2);
  }
  return id;
}

APoly upoly_parse(const std::string& s) {
  // Terms c, c*u^k, u^k joined by '+'/'-'.
  APoly r;
  size_t i = 0;
  bool first = true;
  auto skip = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  while (skip(), i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in value: " + s);
    }
    skip();
    Int coeff = 1;
    bool have_num = false;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coeff = Int(s.substr(start, i - start));
      have_num = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    long long e = 0;
    skip();
    if (i < s.size() && s[i] == 'u') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t es = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-'))
          ++i;
        e = std::stoll(s.substr(es, i - es));
      }
    } else if (!have_num) {
      throw ParseError("expected term in value: " + s);
    }
    r = r + APoly::apow(e, sign * coeff);
    first = false;
  }
  if (first) throw ParseError("empty value");
  return r;
}

namespace {

// Real point count of an order-m root set with the given target sign.
Int real_kummer_count(long long m, int sign) {
  if (m % 2 == 1) return 1;
  return sign > 0 ? 2 : 0;
}

Int atom_complex_value(const Atom& a, const KnowledgeBase& kb) {
  switch (a.kind) {
    case Atom::Kind::KummerTorsor:
    case Atom::Kind::KummerVariety:
      return a.order;
    case Atom::Kind::FaceTorsor:
      return khovanskii_torus_chi(a.face);
    case Atom::Kind::CurveVariety:
      return affine_curve_chi(a.face);
    case Atom::Kind::Named: {
      const std::string& v = kb.lookup(atom_kb_id(a), "chi");
      return Int(v);
    }
  }
  throw UnsupportedError("unreachable atom kind");
}

Int atom_real_value(const Atom& a, const KnowledgeBase& kb) {
  if (a.field != Field::R)
    throw UnsupportedError("real realization of a complex-field class");
  switch (a.kind) {
    case Atom::Kind::KummerTorsor:
    case Atom::Kind::KummerVariety:
      return real_kummer_count(a.order, a.sign);
    case Atom::Kind::CurveVariety: {
      std::string id = atom_kb_id(a);
      if (kb.has(id, "chi-real")) return Int(kb.lookup(id, "chi-real"));
      return real_curve_chi(a.face, a.sign);
    }
    case Atom::Kind::FaceTorsor:
      throw UnsupportedError("real realization of a torsor-stage face class");
    case Atom::Kind::Named:
      return Int(kb.lookup(atom_kb_id(a), "chi-real"));
  }
  throw UnsupportedError("unreachable atom kind");
}

APoly atom_beta_value(const Atom& a, const KnowledgeBase& kb) {
  if (a.field != Field::R)
    throw UnsupportedError("Poincare realization of a complex-field class");
  switch (a.kind) {
    case Atom::Kind::KummerTorsor:
    case Atom::Kind::KummerVariety:
      return APoly::scalar(real_kummer_count(a.order, a.sign));
    case Atom::Kind::CurveVariety:
    case Atom::Kind::Named:
      return upoly_parse(kb.lookup(atom_kb_id(a), "beta"));
    case Atom::Kind::FaceTorsor:
      throw UnsupportedError("Poincare realization of a torsor-stage face class");
  }
  throw UnsupportedError("unreachable atom kind");
}

}  // namespace

Int realize_complex(const GrothElem& e, const KnowledgeBase& kb) {
  Rat total = 0;
  for (const auto& [m, coeff] : e.terms) {
    Rat v = coeff.eval(1);
    for (const Atom& a : m) v *= Rat(atom_complex_value(a, kb));
    total += v;
  }
  if (!is_integer(total)) throw UnsupportedError("non-integral Euler value");
  return num(total);
}

Int realize_real(const GrothElem& e, const KnowledgeBase& kb) {
  Rat total = 0;
  for (const auto& [m, coeff] : e.terms) {
    Rat v = coeff.eval(-1);
    for (const Atom& a : m) v *= Rat(atom_real_value(a, kb));
    total += v;
  }
  if (!is_integer(total)) throw UnsupportedError("non-integral Euler value");
  return num(total);
}

APoly beta(const GrothElem& e, const KnowledgeBase& kb) {
  APoly total;
  for (const auto& [m, coeff] : e.terms) {
    APoly v = coeff;  // [A] -> u preserves the exponents
    for (const Atom& a : m) v = v * atom_beta_value(a, kb);
    total = total + v;
  }
  return total;
}

APoly beta_mu2(const GrothElem& e, const KnowledgeBase& kb) {
  APoly total;
  for (const auto& [m, coeff] : e.terms) {
    APoly v = coeff;
    for (const Atom& a : m) {
      bool kummer = a.kind == Atom::Kind::KummerTorsor || a.kind == Atom::Kind::KummerVariety;
      if (kummer && a.order % 2 == 0) {
        // Even-order root sets carry a free deck orbit: one generator each.
        continue;
      }
      if (a.kind == Atom::Kind::CurveVariety && (a.par1 % 2 || a.par2 % 2)) {
        v = v * upoly_parse(kb.lookup(atom_kb_id(a), "beta-mu2"));
        continue;
      }
      v = v * atom_beta_value(a, kb);
    }
    total = total + v;
  }
  return total;
}

GrothElem forgetful(const GrothElem& e) { return e; }

}  // namespace mm
