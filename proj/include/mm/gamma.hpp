#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mm/rational.hpp"

namespace mm {

// Affine form a·x + c over the value group's rational hull.
struct LinForm {
  std::vector<Rat> a;
  Rat c = 0;

  Rat eval(const std::vector<Rat>& x) const;
};

// Constraint "form REL 0".
enum class Rel { EQ, GT, GE };

struct Constraint {
  LinForm form;
  Rel rel = Rel::GE;
};

// A convex cell in Q^n cut out by equalities and (possibly strict)
// inequalities. Cells are the atoms all piecewise Γ-data is built from.
struct GammaCell {
  int ambient = 0;
  std::vector<Constraint> cons;

  bool feasible() const;
  int dim() const;  // -1 when empty
  bool contains(const std::vector<Rat>& x) const;
  std::string str() const;  // canonical; equal sets of constraints agree
};

// Finite disjoint union of cells (disjointness is the caller's invariant).
struct GammaSet {
  std::vector<GammaCell> cells;

  int ambient() const { return cells.empty() ? 0 : cells[0].ambient; }
  bool empty() const;
  std::string str() const;
};

// Interval constructors in ambient dimension 1; nullopt bound = unbounded side.
GammaCell interval_cell(std::optional<Rat> lo, bool lo_strict, std::optional<Rat> hi,
                        bool hi_strict);
GammaCell point_cell(const std::vector<Rat>& x);
GammaCell full_cell(int ambient);

// O-minimal Euler characteristic: sum of (-1)^dim over relatively open pieces.
long long chi_g(const GammaCell& c);
long long chi_g(const GammaSet& s);

// Bounded variant: the Euler characteristic of the cell clipped by a box that
// provably contains every vertex of the constraint arrangement.
long long chi_b(const GammaCell& c);
long long chi_b(const GammaSet& s);

// Cartesian product (coordinates concatenated).
GammaCell product(const GammaCell& a, const GammaCell& b);
GammaSet product(const GammaSet& a, const GammaSet& b);

// Split every cell along every hyperplane {form = 0} into <, =, > parts.
// The result partitions the same set, so chi sums are unchanged.
GammaSet refine(const GammaSet& s, const std::vector<LinForm>& forms);

// Inclusive coordinate range of the closure; nullopt side = unbounded.
std::pair<std::optional<Rat>, std::optional<Rat>> coordinate_range(const GammaCell& c, int i);

// All points of the cell with coordinates in (1/m)Z. Throws UnsupportedError
// on unbounded cells.
std::vector<std::vector<Rat>> lattice_points(const GammaCell& c, long long m);
std::vector<std::vector<Rat>> lattice_points(const GammaSet& s, long long m);

}  // namespace mm
