#include "mm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mm {

void Poly2::add(int a, int b, const Int& v) {
  auto key = std::make_pair(a, b);
  auto it = c.find(key);
  if (it == c.end()) {
    if (v != 0) c.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c.erase(it);
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, v] : o.c) r.add(k.first, k.second, v);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, v] : o.c) r.add(k.first, k.second, -v);
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [k1, v1] : c)
    for (const auto& [k2, v2] : o.c) r.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat r = 0;
  for (const auto& [k, v] : c) {
    Rat t = Rat(v);
    for (int i = 0; i < k.first; ++i) t *= x;
    for (int i = 0; i < k.second; ++i) t *= y;
    r += t;
  }
  return r;
}

Poly2 Poly2::swapped() const {
  Poly2 r;
  for (const auto& [k, v] : c) r.c[{k.second, k.first}] = v;
  return r;
}

Int Poly2::coeff(int a, int b) const {
  auto it = c.find({a, b});
  return it == c.end() ? Int(0) : it->second;
}

Poly2 poly_from_term(const Int& coeff, int a, int b) {
  Poly2 p;
  p.add(a, b, coeff);
  return p;
}

std::string poly_str(const Poly2& p) {
  if (p.c.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Int>> terms(p.c.begin(), p.c.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.first != r.first.first) return l.first.first > r.first.first;
    return l.first.second < r.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms) {
    Int av = v < 0 ? Int(-v) : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? "-" : "+");
    first = false;
    bool has_var = k.first > 0 || k.second > 0;
    if (av != 1 || !has_var) os << av.str();
    if (k.first > 0) {
      os << "x";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip();
    return s[i++];
  }
};

Int parse_int(Lexer& lx) {
  lx.skip();
  size_t start = lx.i;
  while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
  if (lx.i == start) throw ParseError("expected integer at position " + std::to_string(start));
  return Int(lx.s.substr(start, lx.i - start));
}

// factor := INT | ('x'|'y') ('^' INT)?
// term accumulates coefficient and exponents across '*' or juxtaposition.
void parse_term(Lexer& lx, Int& coeff, int& dx, int& dy) {
  bool any = false;
  while (true) {
    char ch = lx.peek();
    if (ch == 'x' || ch == 'y') {
      lx.take();
      int e = 1;
      if (lx.peek() == '^') {
        lx.take();
        Int ei = parse_int(lx);
        if (ei < 0 || ei > 1000) throw ParseError("exponent out of range");
        e = static_cast<int>(ei);
      }
      (ch == 'x' ? dx : dy) += e;
      any = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff *= parse_int(lx);
      any = true;
    } else if (ch == '*') {
      lx.take();
      continue;
    } else {
      break;
    }
  }
  if (!any) throw ParseError("expected term at position " + std::to_string(lx.i));
}

}  // namespace

Poly2 poly_parse(const std::string& s) {
  Lexer lx{s};
  Poly2 p;
  bool first = true;
  while (!lx.done()) {
    int sgn = 1;
    char ch = lx.peek();
    if (ch == '+' || ch == '-') {
      lx.take();
      sgn = (ch == '-') ? -1 : 1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(lx.i));
    }
    Int coeff = sgn;
    int dx = 0, dy = 0;
    parse_term(lx, coeff, dx, dy);
    p.add(dx, dy, coeff);
    first = false;
  }
  if (first) throw ParseError("empty polynomial");
  return p;
}

Poly1 poly1_trim(Poly1 p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly1_trim(r);
}

Poly1 poly1_derivative(const Poly1& p) {
  Poly1 r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(Int(i) * p[i]);
  return poly1_trim(r);
}

int poly1_deg(const Poly1& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

namespace {

// Primitive pseudo-remainder based gcd over Z (content-normalized).
Poly1 content_normalize(Poly1 p) {
  Int g = 0;
  for (const auto& v : p) g = igcd(g, v);
  if (g > 1)
    for (auto& v : p) v /= g;
  if (!p.empty() && p[poly1_deg(p)] < 0)
    for (auto& v : p) v = -v;
  return p;
}

Poly1 pseudo_rem(Poly1 a, const Poly1& b) {
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
}

Poly1 poly1_gcd(Poly1 a, Poly1 b) {
  a = content_normalize(poly1_trim(a));
  b = content_normalize(poly1_trim(b));
  while (!b.empty()) {
    Poly1 r = pseudo_rem(a, b);
    a = b;
    b = content_normalize(r);
  }
  return a;
}

}  // namespace

bool poly1_squarefree(const Poly1& p) {
  Poly1 t = poly1_trim(p);
  if (poly1_deg(t) <= 0) return true;
  Poly1 g = poly1_gcd(t, poly1_derivative(t));
  return poly1_deg(g) == 0;
}

Rat poly1_eval(const Poly1& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + Rat(p[i]);
  return r;
}

}  // namespace mm
