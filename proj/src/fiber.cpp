#include "fiber.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "error.hpp"

namespace atomfiber {

namespace {

// Smallest l1 norm in a nonempty minimal set; elements are graded-lex sorted,
// so the front is it.
const Int& min_layer_norm(const MinimalElementSet& set) {
  return set.elements.front().l1_norm();
}

bool dominates_some(const MinimalElementSet& mg, const Vec& v) {
  for (const Vec& w : mg.elements) {
    if (w.l1_norm() > v.l1_norm()) break;  // sorted: nothing later can conform
    if (conforms(w, v)) return true;
  }
  return false;
}

} // namespace

bool oplus_decomposes(FiberOracle& oracle, const Vec& b, const Vec& g, std::size_t k) {
  if (b.dim() != g.dim())
    fail(ErrCode::dim, "right-hand sides have mismatched dimensions");
  // Cheapest rejections first: lattice membership of both summands is a
  // single substitution against the memoized triangular form.
  if (!oracle.solvable(g)) return false;
  if (!oracle.solvable(b - g)) return false;
  const auto mg = oracle.minimal(g, k);
  if (mg->empty()) return false;
  const auto mb = oracle.minimal(b, k);
  if (mb->empty()) return false;
  // Every minimal element of b's fiber must absorb a minimal element of g's.
  // That also certifies the (b-g)-fiber nonempty: v - w lies in it, since a
  // conforming w keeps v - w in the same orthant and sign pattern.
  for (const Vec& v : mb->elements)
    if (!dominates_some(*mg, v)) return false;
  return true;
}

Vec normal_form(FiberOracle& oracle, Vec s, const std::vector<Vec>& g_set, std::size_t k) {
  if (s.is_zero() || g_set.empty()) return s;

  std::vector<const Vec*> order;
  order.reserve(g_set.size());
  for (const Vec& g : g_set) order.push_back(&g);
  std::sort(order.begin(), order.end(),
            [](const Vec* x, const Vec* y) { return graded_lex_cmp(*x, *y) < 0; });

  for (;;) {
    if (s.is_zero()) return s;
    const Vec* hit = nullptr;
    for (const Vec* g : order) {
      if (g->is_zero()) continue;
      if (oplus_decomposes(oracle, s, *g, k)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) return s;
    const Int before = min_layer_norm(*oracle.minimal(s, k));
    s = s - *hit;
    if (!s.is_zero()) {
      // Splitting off a nonzero fiber strips a nonzero conforming part from
      // the shortest minimal element, so this norm must drop.
      const Int after = min_layer_norm(*oracle.minimal(s, k));
      if (after >= before)
        fail(ErrCode::internal, "conformal split did not shrink the fiber");
    }
  }
}

AtomDecomposition decompose_fiber(FiberOracle& oracle, const Vec& b, std::vector<Vec> atoms,
                                  std::size_t k) {
  if (b.dim() != oracle.matrix().rows())
    fail(ErrCode::dim, "right-hand side length does not match the matrix row count");
  for (const Vec& a : atoms) {
    if (a.dim() != b.dim())
      fail(ErrCode::dim, "atom length does not match the matrix row count");
    if (a.is_zero())
      fail(ErrCode::invalid, "atom list contains the zero vector");
  }
  std::sort(atoms.begin(), atoms.end(), GradedLexLess{});
  const auto dup = std::adjacent_find(atoms.begin(), atoms.end());
  if (dup != atoms.end())
    fail(ErrCode::invalid, "duplicate atom in list: " + dup->str());

  if (!oracle.fiber_nonempty(b, k))
    fail(ErrCode::infeasible, "fiber of " + b.str() + " is empty");

  std::map<Vec, Int, GradedLexLess> counts;
  Vec r = b;
  while (!r.is_zero()) {
    const Vec* hit = nullptr;
    for (const Vec& a : atoms) {
      if (oplus_decomposes(oracle, r, a, k)) {
        hit = &a;
        break;
      }
    }
    if (hit == nullptr)
      fail(ErrCode::incomplete_atoms,
           "no atom splits off the residual " + r.str() + "; the atom list is incomplete");
    const Int before = min_layer_norm(*oracle.minimal(r, k));
    r = r - *hit;
    counts[*hit] += 1;
    if (!r.is_zero()) {
      const Int after = min_layer_norm(*oracle.minimal(r, k));
      if (after >= before)
        fail(ErrCode::internal, "decomposition step did not shrink the fiber");
    }
  }

  AtomDecomposition out;
  out.rhs = b;
  out.mode = k;
  out.terms.reserve(counts.size());
  for (auto& [atom, mult] : counts) out.terms.push_back({atom, mult});
  return out;
}

} // namespace atomfiber
