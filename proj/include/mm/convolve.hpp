#pragma once

#include <string>
#include <vector>

#include "mm/groth.hpp"
#include "mm/poly.hpp"
#include "mm/rational.hpp"

namespace mm {

// A diagonal family: a monomial subvariety of a torus carrying a tuple of
// monomial structure maps whose values move in fixed proportions.  The
// weights list one entry per structure map, ascending, with the first two
// equal and the last normalized to 1.
struct DiagClass {
  int dim = 0;                          // ambient torus coordinates
  std::vector<std::vector<Int>> eqs;    // each row r: x^r = eq_sign (constant)
  std::vector<int> eq_signs;            // +1 or -1 per equation row
  std::vector<std::vector<Int>> chars;  // structure monomials, one row each
  std::vector<Rat> theta;               // weights, one per structure row
  APoly coeff = APoly::scalar(1);       // module coefficient
};

// The convolution operator on a diagonal family:
//   -( [complement of the antidiagonal, with the sum map]
//      - [antidiagonal] x (torus with its tautological map) ),
// iterated: with more than two structure maps, cut out the antidiagonal of
// the first two, adjoin a fresh free coordinate as the new first map, and
// recurse on the remaining weights.
GrothElem psi(const DiagClass& d);

// Binary convolution of one-variable monomial fiber classes.  Scalars act
// as multiples of the unit; a pair of complex Kummer torsor factors feeds
// the diagonal operator.  Anything else is rejected.
GrothElem convolve(const GrothElem& a, const GrothElem& b);

// Three-term decomposition of the fiber class of f(x) + g(y):
//   S_{f+g} = S_f + S_g - S_f * S_g.
struct TwoVariableSplit {
  GrothElem direct;     // fiber class from the joint staircase hull
  GrothElem left;       // fiber class of the first summand
  GrothElem right;      // fiber class of the second summand
  GrothElem cross;      // convolution of the two
  GrothElem assembled;  // left + right - cross
};
TwoVariableSplit ts_two(const std::string& f, const std::string& g);

// Iterated decomposition for h = g^N + f^{m_2} + ... + f^{m_l} with f, g
// coordinate functions in separate variables: one class per axis family,
// one per branch locus of a partial sum, minus one convolution correction
// per stage.  `pieces` lists the unsigned terms in formula order; the
// ordering hypothesis on N versus the exponent list is not decidable from
// the data, so violations only set `diagnostic`.
struct AssembleResult {
  GrothElem direct;
  GrothElem assembled;
  std::vector<GrothElem> pieces;
  std::string diagnostic;
};
AssembleResult ts_assemble(const std::string& f, const std::string& g,
                           long long N, const std::vector<long long>& m_list);

}  // namespace mm
