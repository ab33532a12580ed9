#pragma once

#include <vector>

#include "graver.hpp"

namespace atomfiber {

// Lazy view of one fiber {z : a z = rhs, z_i >= 0 for i < mode}.
class FiberHandle {
public:
  FiberHandle(FiberOracle& oracle, Vec rhs, std::size_t mode)
      : oracle_(&oracle), rhs_(std::move(rhs)), mode_(mode) {}

  const Vec& rhs() const { return rhs_; }
  std::size_t mode() const { return mode_; }
  bool nonempty() const { return oracle_->fiber_nonempty(rhs_, mode_); }
  const MinimalElementSet& minimal() const { return *oracle_->minimal(rhs_, mode_); }

private:
  FiberOracle* oracle_;
  Vec rhs_;
  std::size_t mode_;
};

// True iff the mode-k fiber of b splits as the conformal Minkowski sum of the
// fibers of g and b-g: both summand fibers are nonempty and every minimal
// element of b's fiber has a minimal element of g's fiber conforming to it.
bool oplus_decomposes(FiberOracle& oracle, const Vec& b, const Vec& g, std::size_t k);

// Greedy reduction of s by the first (graded-lex) g in g_set whose fiber
// splits off, repeated to a fixpoint. Zero result means s is generated by
// g_set; a nonzero result is irreducible against it.
Vec normal_form(FiberOracle& oracle, Vec s, const std::vector<Vec>& g_set, std::size_t k);

struct AtomDecomposition {
  struct Term {
    Vec rhs;
    Int multiplicity;  // >= 1; zero-multiplicity atoms are not listed
  };
  Vec rhs;
  std::size_t mode = 0;
  std::vector<Term> terms;  // atoms in graded-lex order
};

// Peels atoms off b in graded-lex order while the split test holds. Throws
// ErrCode::infeasible when b's fiber is empty and ErrCode::incomplete_atoms
// when a nonzero residual survives every atom.
AtomDecomposition decompose_fiber(FiberOracle& oracle, const Vec& b, std::vector<Vec> atoms,
                                  std::size_t k);

} // namespace atomfiber
