#pragma once

#include <vector>

#include "mm/rational.hpp"

namespace mm {

using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

IntMat identity_mat(size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
Int mat_det(IntMat a);  // exact, via fraction-free elimination

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// diag entries d_1 | d_2 | ... >= 0.
struct Smith {
  IntMat u, d, v;
  size_t rank = 0;
  std::vector<Int> divisors;  // nonzero diagonal entries, in order
};
Smith smith_normal_form(const IntMat& a);

// Random unimodular matrix built from shear/swap generators (for property tests).
IntMat random_unimodular(size_t n, unsigned seed);

// Rank over Q of a rational matrix.
size_t rat_rank(std::vector<std::vector<Rat>> m);

// Exact solve of a square rational system; nullopt when singular.
std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace mm
