#include "ipsolve.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "error.hpp"
#include "parallel.hpp"

namespace atomfiber {

Rat dot_cost(const std::vector<Rat>& cost, const Vec& z) {
  if (cost.size() != z.dim()) fail(ErrCode::dim, "cost length does not match the point length");
  Rat acc = 0;
  for (std::size_t i = 0; i < cost.size(); ++i) acc += cost[i] * Rat(z[i]);
  return acc;
}

AtomicProgramTable solve_atomic_programs(FiberOracle& oracle, const std::vector<Vec>& atoms,
                                         std::vector<Rat> cost) {
  const std::size_t n = oracle.dim();
  if (cost.size() != n) fail(ErrCode::dim, "cost length does not match the matrix column count");

  AtomicProgramTable table;
  table.cost = std::move(cost);

  for (const Vec& h : oracle.hilbert()) {
    if (dot_cost(table.cost, h) < 0) {
      table.unbounded = true;  // riding this direction lowers any feasible program forever
      return table;
    }
  }

  std::vector<Vec> sorted = atoms;
  std::sort(sorted.begin(), sorted.end(), GradedLexLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  table.entries.resize(sorted.size());
  parallel_for(sorted.size(), oracle.options().threads, [&](std::size_t i) {
    const auto m = oracle.minimal(sorted[i], n);
    if (m->empty())
      fail(ErrCode::invalid, "atom " + sorted[i].str() + " has an empty fiber");
    // No kernel direction pays below cost 0 here, so some minimal element
    // attains the fiber's optimum. Ties go to the lexicographically least.
    const Vec* best = nullptr;
    Rat best_value = 0;
    for (const Vec& z : m->elements) {
      const Rat v = dot_cost(table.cost, z);
      if (best == nullptr || v < best_value || (v == best_value && lex_cmp(z, *best) < 0)) {
        best = &z;
        best_value = v;
      }
    }
    table.entries[i] = AtomicProgramTable::Entry{sorted[i], *best, best_value};
  });
  return table;
}

SolveResult solve_ip(FiberOracle& oracle, const AtomicProgramTable& table, const Vec& rhs) {
  const std::size_t n = oracle.dim();
  if (!oracle.fiber_nonempty(rhs, n))
    fail(ErrCode::infeasible, "fiber of " + rhs.str() + " is empty");

  SolveResult out;
  if (table.unbounded) {
    out.unbounded = true;
    return out;
  }

  std::vector<Vec> atoms;
  atoms.reserve(table.entries.size());
  std::unordered_map<Vec, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    atoms.push_back(table.entries[i].rhs);
    index.emplace(table.entries[i].rhs, i);
  }

  out.decomposition = decompose_fiber(oracle, rhs, std::move(atoms), n);
  out.value = 0;
  out.point = Vec::zero(n);
  for (const auto& term : out.decomposition.terms) {
    const auto& entry = table.entries[index.at(term.rhs)];
    out.value += Rat(term.multiplicity) * entry.value;
    out.point = out.point + entry.point.scaled(term.multiplicity);
  }
  return out;
}

} // namespace atomfiber
