#pragma once

#include <vector>

#include "atomic.hpp"
#include "fiber.hpp"

namespace atomfiber {

Rat dot_cost(const std::vector<Rat>& cost, const Vec& z);

// Per-atom optima of min{cost . z : z in the atom's fully constrained fiber}.
// When some nonnegative kernel direction has negative cost every feasible
// program is unbounded; the table then carries no entries.
struct AtomicProgramTable {
  struct Entry {
    Vec rhs;
    Vec point;
    Rat value;
  };
  std::vector<Rat> cost;
  bool unbounded = false;
  std::vector<Entry> entries;  // graded-lex by rhs
};

AtomicProgramTable solve_atomic_programs(FiberOracle& oracle, const std::vector<Vec>& atoms,
                                         std::vector<Rat> cost);

struct SolveResult {
  bool unbounded = false;
  Rat value;  // meaningful only when !unbounded
  Vec point;  // optimal solution, length = matrix cols; zero-length when unbounded
  AtomDecomposition decomposition;
};

// min{cost . z : a z = rhs, z >= 0} assembled from the per-atom optima along
// the fiber's atomic decomposition. Throws ErrCode::infeasible when the fiber
// is empty and ErrCode::incomplete_atoms when the table's atoms cannot
// decompose it.
SolveResult solve_ip(FiberOracle& oracle, const AtomicProgramTable& table, const Vec& rhs);

} // namespace atomfiber
