#pragma once

#include <map>
#include <string>
#include <vector>

#include "mm/poly.hpp"
#include "mm/rational.hpp"

namespace mm {

enum class Field { C, R };

// Laurent polynomial in the affine-line class with integer coefficients;
// this is the coefficient ring every motivic class lives over.
struct APoly {
  std::map<long long, Int> c;  // exponent -> coefficient

  static APoly scalar(const Int& v);
  static APoly apow(long long e, const Int& v = 1);  // v * [A]^e
  static APoly gm();                                 // [A] - 1

  bool zero() const { return c.empty(); }
  APoly operator+(const APoly& o) const;
  APoly operator-(const APoly& o) const;
  APoly operator*(const APoly& o) const;
  APoly operator-() const;
  bool operator==(const APoly& o) const { return c == o.c; }
  bool operator<(const APoly& o) const { return c < o.c; }

  APoly shifted(long long e) const;  // * [A]^e
  Rat eval(const Rat& a) const;      // substitute a rational value for [A]

  // c = (A-1)^k * rest with maximal k.
  std::pair<int, APoly> factor_gm() const;

  std::string str(const std::string& sym = "[A]") const;
};

// Irreducible display/bookkeeping unit of a motivic class. "Torsor" kinds
// live at the residue-with-position stage (right-hand side rv(t)); "Variety"
// kinds are their images under the fiber-at-one map (right-hand side 1).
struct Atom {
  enum class Kind { FaceTorsor, CurveVariety, KummerTorsor, KummerVariety, Named };

  Kind kind = Kind::KummerVariety;
  long long order = 1;   // Kummer order
  int sign = +1;         // sign of the right-hand side constant
  Field field = Field::C;
  Poly2 face;            // FaceTorsor / CurveVariety equation left-hand side
  int par1 = 0, par2 = 0;  // coordinate action parities (drive the real swap)
  std::string name;

  bool operator<(const Atom& o) const;
  bool operator==(const Atom& o) const;
  std::string str() const;
};

Atom kummer_torsor_atom(long long m, int sign, Field f);
Atom kummer_variety_atom(long long m, int sign, Field f);
Atom face_torsor_atom(const Poly2& face, int par1, int par2, Field f);
Atom curve_variety_atom(const Poly2& face, int par1, int par2, Field f);
Atom named_atom(const std::string& id);

using Monomial = std::vector<Atom>;  // kept sorted

// An element of the graded Grothendieck group: finite sum of atom products
// with Laurent coefficients in the affine-line class.
struct GrothElem {
  std::map<Monomial, APoly> terms;

  static GrothElem zero();
  static GrothElem scalar(const Int& v);
  static GrothElem from_apoly(const APoly& a);
  static GrothElem atom(const Atom& a);

  bool is_zero() const;
  GrothElem operator+(const GrothElem& o) const;
  GrothElem operator-(const GrothElem& o) const;
  GrothElem operator*(const GrothElem& o) const;
  GrothElem operator-() const;
  bool operator==(const GrothElem& o) const;

  GrothElem times(const APoly& a) const;
  GrothElem shifted(long long apow) const;  // * [A]^apow

  std::string str() const;
};

// Fiber-at-one map: torsor-stage atoms become varieties; face torsors expand
// into the affine curve minus its coordinate-axis root loci, which is what
// makes symmetric edge contributions merge into a single curve class.
GrothElem theta(const GrothElem& e);

// Field restriction C -> R on every atom (the pieces themselves are
// unchanged; realizations diverge afterwards).
GrothElem xi(const GrothElem& e);

// Scalar multiplication helpers.
GrothElem operator*(const Int& v, const GrothElem& e);

// Class of {x in torus^n : x^(row_i) = sign_i * t^(e_i)} reduced through
// Smith normal form: a single Kummer atom with multiplicity, times
// ([A]-1)^(free directions); 0 when the target system is inconsistent.
struct TorsorSpec {
  std::vector<std::vector<Int>> rows;
  std::vector<Rat> positions;   // t-exponent of each row's target
  std::vector<int> signs;       // right-hand side constant signs
  Field field = Field::C;
};
GrothElem monomial_torsor(const TorsorSpec& spec);

}  // namespace mm
