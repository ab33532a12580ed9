#pragma once

#include <cstddef>
#include <vector>

#include "fiber.hpp"
#include "graver.hpp"

namespace atomfiber {

// Right-hand sides of the atomic fibers of one matrix at one mode. The mode
// counts leading coordinates constrained nonnegative: mode 0 covers the
// unconstrained fibers, mode cols() the fully nonnegative ones.
struct AtomSet {
  Mat matrix;
  std::size_t mode = 0;
  std::vector<Vec> rhs_list;  // graded-lex order
};

// Pairwise-sum completion over the seed right-hand sides: closes the seeds
// under s -> normal_form(s, current set) at the given mode. Every seed must
// have a nonempty mode-k fiber. Returns the unfiltered generating set,
// graded-lex sorted.
std::vector<Vec> completion_run(FiberOracle& oracle, std::vector<Vec> seeds, std::size_t k);

// Keeps b iff no other member of g_set splits b's fiber off.
std::vector<Vec> atomicity_filter(FiberOracle& oracle, const std::vector<Vec>& g_set,
                                  std::size_t k);

// Atomic fibers among all fibers with unconstrained sign (mode 0).
AtomSet extended_atomic_fibers(FiberOracle& oracle);

// Atomic fibers at the given mode, raising one constrained coordinate at a
// time from mode 0. Atoms that lose feasibility at the next mode drop out;
// columns whose coordinate is still unconstrained re-enter as generators.
AtomSet atomic_fibers_mode(FiberOracle& oracle, std::size_t mode);

// Fully sign-constrained atomic fibers (mode = cols()).
AtomSet atomic_fibers(FiberOracle& oracle);

// Mode-0 atomic fibers restricted to the group generated by the given
// right-hand sides (closed under negation). Every generator must be
// integrally attainable.
AtomSet sublattice_atomic_fibers(FiberOracle& oracle, std::vector<Vec> generators);

// One fiber's element listing. complete=true means `elements` is the whole
// fiber; otherwise the fiber is infinite and `elements` holds its conformally
// minimal points.
struct FiberElements {
  Vec rhs;
  std::size_t mode = 0;
  bool complete = false;
  std::vector<Vec> elements;  // graded-lex order
};

FiberElements fiber_elements(FiberOracle& oracle, const Vec& rhs, std::size_t mode);

} // namespace atomfiber
