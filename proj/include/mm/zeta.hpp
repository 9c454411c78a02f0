#pragma once

#include "mm/realize.hpp"
#include "mm/tensor.hpp"

namespace mm {

// One closed-form piece of the deformation series:
//   coeff * [A]^a0 * T^b0 / prod_i (1 - [A]^(poles[i].first) * T^(poles[i].second))
// with every pole T-exponent >= 1. Geometric pieces have one pole factor,
// growing-count pieces have two.
struct ZetaTerm {
  GrothElem coeff;
  long long a0 = 0;
  long long b0 = 0;
  std::vector<std::pair<long long, long long>> poles;  // kept sorted
};

struct ZetaFn {
  std::vector<ZetaTerm> terms;

  ZetaFn operator+(const ZetaFn& o) const;
  ZetaFn operator-() const;
  void normalize();  // merge identical shapes, drop zero coefficients
  std::string str() const;
};

// The deformation series of a graded integral: each finite summand
// contributes its lattice points at every level m with weight [A]^(-m sigma),
// boundary-at-infinity summands contribute nothing. Cells must be points,
// segments, or axis-parallel rays of weight slope one.
ZetaFn zeta_from_tensor(const TensorElem& t);

// Series coefficient of T^m by expanding the closed form.
GrothElem zeta_coefficient(const ZetaFn& z, long long m);

// The same coefficient straight from the integral: bounded cells by lattice
// enumeration, rays by the telescoped tail. Independent of the closed-form
// machinery; used to cross-check it.
GrothElem zeta_coefficient_direct(const TensorElem& t, long long m);

// Value of -lim_{T->inf}; throws UnsupportedError when a term has positive
// T-degree.
GrothElem minus_limit_at_infinity(const ZetaFn& z);

// Coefficientwise product of two deformation series, exact on single-pole
// shapes. Throws UnsupportedError on growing-count inputs.
ZetaFn hadamard(const ZetaFn& x, const ZetaFn& y);

// Euler-characteristic specialization: atoms realize to their complex count
// and [A] evaluates at -1. Returns the canonical "num / den" rendering in T.
std::string topological_zeta(const ZetaFn& z, const KnowledgeBase& kb);

}  // namespace mm
