#pragma once

#include <optional>
#include <vector>

#include "core.hpp"

namespace atomfiber {

// Column-style Hermite form: a * u = h with u unimodular. Pivot columns of h
// come first and form a lower-triangular block with positive pivots; entries
// left of a pivot in its row lie in [0, pivot); trailing columns are zero.
struct HnfResult {
  Mat h;
  Mat u;
  std::vector<std::size_t> pivot_rows;  // row of the pivot in column j, for j < rank
};

HnfResult hermite_normal_form(const Mat& a);

struct KernelLattice {
  std::vector<Vec> basis;  // n - rank(a) vectors spanning ker_Z(a)
};

KernelLattice kernel_lattice_basis(const Mat& a);

// One integral solution of a z = b, or nullopt when none exists.
std::optional<Vec> solve_integral(const Mat& a, const Vec& b);
std::optional<Vec> solve_integral(const HnfResult& hnf, const Mat& a, const Vec& b);

// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const Mat& a);

} // namespace atomfiber
