#include "graver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace atomfiber {

void ReducerSet::insert(Vec v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v, GradedLexLess{});
  items_.insert(it, std::move(v));
}

const Vec* ReducerSet::find_conforming(const Vec& r) const {
  const std::uint64_t pos = r.pos_mask(), neg = r.neg_mask();
  for (const Vec& g : items_) {
    if (g.l1_norm() > r.l1_norm()) break;
    if ((g.pos_mask() & ~pos) != 0 || (g.neg_mask() & ~neg) != 0) continue;
    if (conforms(g, r)) return &g;
  }
  return nullptr;
}

std::vector<Vec> interreduce(std::vector<Vec> items) {
  std::sort(items.begin(), items.end(), GradedLexLess{});
  ReducerSet kept;
  for (Vec& v : items) {
    if (!kept.contains_conforming(v)) kept.insert(std::move(v));
  }
  return kept.items();
}

namespace {

// Largest multiple of g that still conforms to r; g conforms to r and g != 0.
Int conforming_multiplicity(const Vec& g, const Vec& r) {
  Int t = 0;
  bool first = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g[i] == 0) continue;
    Int q = abs(r[i]) / abs(g[i]);
    if (first || q < t) t = std::move(q);
    first = false;
  }
  return t;
}

// Reduces r by conforming members of red until none conforms; returns the residue.
Vec conformal_residue(Vec r, const ReducerSet& red) {
  for (;;) {
    if (r.is_zero()) return r;
    const Vec* g = red.find_conforming(r);
    if (!g) return r;
    r = r - g->scaled(conforming_multiplicity(*g, r));
  }
}

} // namespace

GraverBasis graver_basis(const Mat& a, const Options& opt) {
  KernelLattice lat = kernel_lattice_basis(a);
  GraverBasis out{a, {}};
  if (lat.basis.empty()) return out;

  ReducerSet g;
  std::deque<Vec> fifo;
  std::unordered_set<Vec, VecHash> seen;
  long long generated = 0;

  auto add = [&](const Vec& v) {
    g.insert(v);
    if (++generated > opt.limit)
      fail(ErrCode::limit, "completion aborted: more than " + std::to_string(opt.limit) +
                               " generated elements (raise the element limit to continue)");
    // pair the new generator with everything present, itself included
    for (const Vec& h : g.items()) {
      Vec s = v + h;
      if (s.is_zero()) continue;
      if (seen.insert(s).second) fifo.push_back(std::move(s));
    }
  };

  for (const Vec& b : lat.basis) {
    add(b);
    add(b.negated());
  }
  while (!fifo.empty()) {
    Vec s = std::move(fifo.front());
    fifo.pop_front();
    Vec r = conformal_residue(std::move(s), g);
    if (!r.is_zero()) add(r);
  }
  out.elements = interreduce(g.items());
  return out;
}

std::vector<Vec> hilbert_basis_kernel(const Mat& a, const Options& opt) {
  GraverBasis g = graver_basis(a, opt);
  std::vector<Vec> out;
  for (const Vec& v : g.elements) {
    if (std::all_of(v.entries().begin(), v.entries().end(), [](const Int& x) { return x >= 0; }))
      out.push_back(v);
  }
  return out;
}

FiberOracle::FiberOracle(Mat a, Options opt)
    : a_(std::move(a)), opt_(opt), hnf_(hermite_normal_form(a_)) {}

const GraverBasis& FiberOracle::graver() {
  std::call_once(graver_once_, [&] {
    graver_ = std::make_unique<GraverBasis>(graver_basis(a_, opt_));
    for (const Vec& v : graver_->elements) graver_red_.insert(v);
  });
  return *graver_;
}

const ReducerSet& FiberOracle::graver_reducers() {
  graver();
  return graver_red_;
}

const std::vector<Vec>& FiberOracle::hilbert() {
  std::call_once(hilbert_once_, [&] {
    auto h = std::make_unique<std::vector<Vec>>();
    for (const Vec& v : graver().elements) {
      if (std::all_of(v.entries().begin(), v.entries().end(), [](const Int& x) { return x >= 0; }))
        h->push_back(v);
    }
    hilbert_ = std::move(h);
  });
  return *hilbert_;
}

std::shared_ptr<const Vec> FiberOracle::solution(const Vec& rhs) {
  if (rhs.dim() != a_.rows()) fail(ErrCode::dim, "rhs dimension mismatch");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = solutions_.find(rhs);
    if (it != solutions_.end()) return it->second;
  }
  std::optional<Vec> z = solve_integral(hnf_, a_, rhs);
  std::shared_ptr<const Vec> entry = z ? std::make_shared<const Vec>(std::move(*z)) : nullptr;
  std::lock_guard<std::mutex> lock(mu_);
  return solutions_.emplace(rhs, std::move(entry)).first->second;
}

bool FiberOracle::solvable(const Vec& rhs) { return solution(rhs) != nullptr; }

// Minimal elements of the extended fiber, computed as a completion over the
// u = 1 layer of ker_Z(A | -rhs): seed with one integral solution, walk by
// Graver moves of A, keep residues no known layer element conforms to.
// Reductions only shrink the layer coordinate-wise, so this explores exactly
// the |u| <= 1 slice of the classical construction on (A | -rhs); the unit
// tests cross-check it against that construction and brute force.
std::shared_ptr<const MinimalElementSet> FiberOracle::minimal_extended(const Vec& rhs) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = minimal0_.find(rhs);
    if (it != minimal0_.end()) return it->second;
  }

  auto result = std::make_shared<MinimalElementSet>();
  result->rhs = rhs;
  result->mode = 0;
  std::shared_ptr<const Vec> z0 = solution(rhs);
  if (z0 != nullptr) {
    const ReducerSet& moves = graver_reducers();
    ReducerSet layer;
    std::set<Vec, GradedLexLess> pending;
    std::unordered_set<Vec, VecHash> seen;
    long long generated = 0;

    auto add = [&](Vec v) {
      if (++generated > opt_.limit)
        fail(ErrCode::limit, "fiber completion aborted: more than " + std::to_string(opt_.limit) +
                                 " generated elements (raise the element limit to continue)");
      for (const Vec& g : moves.items()) {
        Vec s = v + g;
        if (seen.insert(s).second) pending.insert(std::move(s));
      }
      layer.insert(std::move(v));
    };

    add(*z0);
    while (!pending.empty()) {
      Vec r = std::move(pending.extract(pending.begin()).value());
      bool sank = false;
      for (;;) {
        if (layer.contains_conforming(r)) {
          sank = true;  // dominates a known fiber point
          break;
        }
        const Vec* g = moves.find_conforming(r);
        if (!g) break;
        r = r - g->scaled(conforming_multiplicity(*g, r));
      }
      if (!sank) add(std::move(r));
    }
    result->elements = interreduce(layer.items());
  }

  std::shared_ptr<const MinimalElementSet> entry = std::move(result);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = minimal0_.find(rhs);
  if (it != minimal0_.end()) return it->second;
  if (opt_.cache_cap <= 0 || (long long)minimal0_.size() < opt_.cache_cap) minimal0_.emplace(rhs, entry);
  return entry;
}

std::shared_ptr<const MinimalElementSet> FiberOracle::minimal(const Vec& rhs, std::size_t mode) {
  if (mode > dim()) fail(ErrCode::invalid, "mode out of range");
  if (mode == 0) return minimal_extended(rhs);
  auto key = std::make_pair(rhs, mode);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = minimal_k_.find(key);
    if (it != minimal_k_.end()) return it->second;
  }
  std::shared_ptr<const MinimalElementSet> full = minimal_extended(rhs);
  auto result = std::make_shared<MinimalElementSet>();
  result->rhs = rhs;
  result->mode = mode;
  for (const Vec& v : full->elements) {
    bool ok = true;
    for (std::size_t i = 0; i < mode && ok; ++i) ok = v[i] >= 0;
    if (ok) result->elements.push_back(v);
  }
  std::shared_ptr<const MinimalElementSet> entry = std::move(result);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = minimal_k_.find(key);
  if (it != minimal_k_.end()) return it->second;
  if (opt_.cache_cap <= 0 || (long long)minimal_k_.size() < opt_.cache_cap) minimal_k_.emplace(key, entry);
  return entry;
}

bool FiberOracle::fiber_nonempty(const Vec& rhs, std::size_t mode) {
  if (mode == 0) return solvable(rhs);
  if (!solvable(rhs)) return false;
  return !minimal(rhs, mode)->empty();
}

} // namespace atomfiber
