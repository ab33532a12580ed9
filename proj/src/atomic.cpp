#include "atomic.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "error.hpp"
#include "parallel.hpp"

namespace atomfiber {

namespace {

constexpr std::size_t kSeenCap = 1u << 20;  // dedupe memory guard

[[noreturn]] void limit_exceeded(long long limit) {
  fail(ErrCode::limit, "completion exceeded " + std::to_string(limit) +
                           " elements; raise the element limit to continue");
}

// Shared state of one completion. Candidates are reduced in parallel against
// the current set first; that pass only warms the oracle's caches and rules
// out sums that are already generated, so its schedule cannot change the
// outcome. Survivors are then re-reduced one by one in canonical order.
struct Completion {
  FiberOracle& oracle;
  std::size_t k;
  const Options& opt;

  std::vector<Vec> g;  // graded-lex
  std::unordered_set<Vec, VecHash> seen;
  long long produced = 0;

  bool in_g(const Vec& v) const {
    return std::binary_search(g.begin(), g.end(), v, GradedLexLess{});
  }

  // The seen set is only an effort saver; capping it keeps memory bounded at
  // the price of occasionally re-reducing a duplicate sum to zero.
  void note(const Vec& v) {
    if (seen.size() < kSeenCap) seen.insert(v);
  }
  bool known(const Vec& v) const { return seen.count(v) != 0; }

  void count_produced() {
    if (++produced > opt.limit) limit_exceeded(opt.limit);
  }

  // r is a nonzero normal form, hence not in g; keep the insert defensive.
  bool insert_sorted(const Vec& r) {
    const auto it = std::lower_bound(g.begin(), g.end(), r, GradedLexLess{});
    if (it != g.end() && *it == r) return false;
    g.insert(it, r);
    note(r);
    count_produced();
    return true;
  }

  // Reduces a batch of candidates. The parallel pass runs against the live
  // set, which no one mutates meanwhile; a candidate it sinks is generated by
  // what the set held then, so it stays generated and can be dropped. Under
  // deterministic ordering each survivor is re-walked canonically (cheap, the
  // pass left the caches warm); otherwise the precomputed form is taken as
  // is, which may admit an element a batch sibling could have reduced. The
  // atomicity filter removes such extras, so the filtered result is the same.
  template <typename Admit>
  void process_batch(const std::vector<Vec>& batch, const Admit& admit) {
    const bool parallel = opt.threads > 1 && batch.size() > 1;
    std::vector<Vec> red;
    if (parallel) {
      red.resize(batch.size());
      parallel_for(batch.size(), opt.threads,
                   [&](std::size_t i) { red[i] = normal_form(oracle, batch[i], g, k); });
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      Vec r;
      if (!parallel) {
        r = normal_form(oracle, batch[i], g, k);
      } else if (red[i].is_zero()) {
        continue;
      } else if (opt.deterministic) {
        r = normal_form(oracle, batch[i], g, k);
      } else {
        r = std::move(red[i]);
      }
      if (!r.is_zero()) admit(r);
    }
  }

  // Index-pair frontier: walks sums g[i]+g[j], i <= j, with j following the
  // set as it grows. Never materializes the outstanding sums, so memory stays
  // proportional to the result set; a completion that enqueued every pending
  // sum up front was measured several GB heavier on wide instances for the
  // same filtered output.
  void run() {
    std::vector<Vec> frontier = g;  // append order, stable indices
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      std::vector<Vec> batch;
      for (std::size_t i = 0; i <= j; ++i) {
        Vec s = frontier[i] + frontier[j];
        if (s.is_zero() || known(s) || in_g(s)) continue;
        note(s);
        count_produced();
        batch.push_back(std::move(s));
      }
      if (batch.empty()) continue;
      process_batch(batch, [&](const Vec& r) {
        if (insert_sorted(r)) frontier.push_back(r);
      });
    }
  }
};

std::vector<Vec> column_generators(const Mat& a, std::size_t from_col) {
  std::vector<Vec> out;
  for (std::size_t j = from_col; j < a.cols(); ++j) {
    Vec c = a.col(j);
    if (c.is_zero()) continue;
    out.push_back(c.negated());
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

std::vector<Vec> completion_run(FiberOracle& oracle, std::vector<Vec> seeds, std::size_t k) {
  for (const Vec& s : seeds)
    if (s.dim() != oracle.matrix().rows())
      fail(ErrCode::dim, "seed length does not match the matrix row count");
  std::sort(seeds.begin(), seeds.end(), GradedLexLess{});
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::erase_if(seeds, [](const Vec& v) { return v.is_zero(); });
  for (const Vec& s : seeds)
    if (!oracle.fiber_nonempty(s, k))
      fail(ErrCode::infeasible_seed, "seed " + s.str() + " has an empty fiber");
  if (seeds.empty()) return {};

  Completion c{oracle, k, oracle.options()};
  c.g = std::move(seeds);
  for (const Vec& v : c.g) c.note(v);
  c.produced = static_cast<long long>(c.g.size());
  c.run();
  return std::move(c.g);
}

std::vector<Vec> atomicity_filter(FiberOracle& oracle, const std::vector<Vec>& g_set,
                                  std::size_t k) {
  std::vector<Vec> items = g_set;
  std::sort(items.begin(), items.end(), GradedLexLess{});
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::erase_if(items, [](const Vec& v) { return v.is_zero(); });

  std::vector<char> keep(items.size(), 1);
  parallel_for(items.size(), oracle.options().threads, [&](std::size_t i) {
    for (const Vec& h : items) {
      if (h == items[i]) continue;
      if (oplus_decomposes(oracle, items[i], h, k)) {
        keep[i] = 0;
        return;
      }
    }
  });

  std::vector<Vec> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep[i]) out.push_back(items[i]);
  return out;
}

AtomSet extended_atomic_fibers(FiberOracle& oracle) {
  auto g = completion_run(oracle, column_generators(oracle.matrix(), 0), 0);
  return AtomSet{oracle.matrix(), 0, atomicity_filter(oracle, g, 0)};
}

AtomSet atomic_fibers_mode(FiberOracle& oracle, std::size_t mode) {
  if (mode > oracle.dim()) fail(ErrCode::invalid, "mode exceeds the number of matrix columns");
  AtomSet cur = extended_atomic_fibers(oracle);
  while (cur.mode < mode) {
    const std::size_t next = cur.mode + 1;
    // Atoms whose fiber empties out under the next sign constraint cannot
    // contribute and are dropped; the surviving ones, together with the
    // still-unconstrained columns, generate the next level.
    std::vector<Vec> seeds;
    for (const Vec& b : cur.rhs_list)
      if (oracle.fiber_nonempty(b, next)) seeds.push_back(b);
    for (Vec& v : column_generators(oracle.matrix(), next)) seeds.push_back(std::move(v));
    auto g = completion_run(oracle, std::move(seeds), next);
    cur = AtomSet{oracle.matrix(), next, atomicity_filter(oracle, g, next)};
  }
  return cur;
}

AtomSet atomic_fibers(FiberOracle& oracle) { return atomic_fibers_mode(oracle, oracle.dim()); }

AtomSet sublattice_atomic_fibers(FiberOracle& oracle, std::vector<Vec> generators) {
  std::vector<Vec> seeds;
  for (Vec& v : generators) {
    if (v.dim() != oracle.matrix().rows())
      fail(ErrCode::dim, "generator length does not match the matrix row count");
    if (v.is_zero()) continue;
    if (!oracle.solvable(v))
      fail(ErrCode::infeasible_seed,
           "generator " + v.str() + " is not integrally attainable by the matrix");
    seeds.push_back(v.negated());
    seeds.push_back(std::move(v));
  }
  auto g = completion_run(oracle, std::move(seeds), 0);
  return AtomSet{oracle.matrix(), 0, atomicity_filter(oracle, g, 0)};
}

FiberElements fiber_elements(FiberOracle& oracle, const Vec& rhs, std::size_t mode) {
  const auto m = oracle.minimal(rhs, mode);
  FiberElements out;
  out.rhs = rhs;
  out.mode = mode;
  out.elements = m->elements;
  if (out.elements.empty()) {
    out.complete = true;  // the listing covers the whole (empty) fiber
    return out;
  }
  // The fiber is infinite exactly when some kernel direction keeps the
  // constrained prefix nonnegative; such a direction shows up among the
  // conformally minimal kernel elements. A finite fiber is an antichain,
  // so its minimal elements are already all of it.
  bool infinite = false;
  for (const Vec& h : oracle.graver().elements) {
    bool prefix_ok = true;
    for (std::size_t i = 0; i < mode && prefix_ok; ++i) prefix_ok = h[i] >= 0;
    if (prefix_ok) {
      infinite = true;
      break;
    }
  }
  out.complete = !infinite;
  return out;
}

} // namespace atomfiber
