#pragma once

#include <map>

#include "mm/gamma.hpp"
#include "mm/groth.hpp"

namespace mm {

// One graded piece of a residue-times-value-group class: a residue class
// `res` spread over the value-group cell `cell`, with the valuation of the
// tracked function given by the affine weight sig_lin·x + sig_const on the
// cell. k counts pinned-angular-component coordinates, l counts free torus
// coordinates; both twists are already inside `res`, the grading only feeds
// the volume normalization of the geometric retraction.
//
// at_infinity marks pieces supported at the boundary point of a compactified
// ray: they carry full weight in both retractions but no finite lattice
// points, so the coefficient map skips them.
struct Summand {
  GrothElem res;
  GammaSet cell;
  std::vector<Rat> sig_lin;
  Rat sig_const = 0;
  int k = 0;
  int l = 0;
  bool at_infinity = false;

  Rat sigma(const std::vector<Rat>& x) const;
};

// Finite sum of summands; the public value-group-graded algebra element.
struct TensorElem {
  std::vector<Summand> parts;

  TensorElem operator+(const TensorElem& o) const;
  TensorElem operator-() const;
  TensorElem operator-(const TensorElem& o) const { return *this + (-o); }
  TensorElem operator*(const TensorElem& o) const;  // sigma adds, gradings add

  TensorElem times(const GrothElem& g) const;

  // Merge summands that agree on everything but res; drop zero residues.
  void normalize();

  std::string str() const;
};

// Laurent data in the deformation variable T with residue-class coefficients.
using TPoly = std::map<long long, GrothElem>;

TPoly tpoly_add(const TPoly& a, const TPoly& b);
std::string tpoly_str(const TPoly& p);

// Bounded retraction: counts each cell by its compactly-supported Euler
// characteristic; twists stay in place.
GrothElem eb(const TensorElem& t);

// Geometric retraction: open Euler characteristic and volume normalization
// [A]^-(k+l) per summand.
GrothElem eg(const TensorElem& t);

// Coefficient map at level m: lattice points at denominator m, each
// contributing its residue class at T^(-m·sigma). Throws UnsupportedError
// when a finite summand has an unbounded cell.
TPoly hm(const TensorElem& t, long long m);

// Evaluation T -> [A] of a coefficient polynomial.
GrothElem eta(const TPoly& p);

// The two relations that present the value-group side of the algebra.
TensorElem p_minus_one();
TensorElem p_gamma(const Rat& gamma);

}  // namespace mm
