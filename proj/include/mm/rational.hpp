#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace mm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

// Largest integer n with n <= r.
inline Int rfloor(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

// Smallest integer n with n >= r.
inline Int rceil(const Rat& r) { return -rfloor(-r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Throws unless r is an integer that fits in long long.
inline long long to_ll(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("expected integer, got " + r.str());
  return static_cast<long long>(num(r));
}

inline long long to_ll(const Int& n) { return static_cast<long long>(n); }

// Canonical "p/q" (or "p" when q = 1) rendering used by every printer.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

// Errors the same way the CLI parser does: exact "p", "-p", "p/q" forms only.
inline std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (...) {
    return std::nullopt;
  }
}

// Error taxonomy shared across modules; carries the CLI exit code.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mm
