#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "intlin.hpp"
#include "options.hpp"

namespace atomfiber {

// All conformally minimal nonzero elements of ker_Z(matrix); closed under
// negation, no element conforms to another.
struct GraverBasis {
  Mat matrix;
  std::vector<Vec> elements;  // graded-lex order
};

GraverBasis graver_basis(const Mat& a, const Options& opt = {});

// Nonnegative Graver elements = minimal generators of {z : a z = 0, z >= 0}.
std::vector<Vec> hilbert_basis_kernel(const Mat& a, const Options& opt = {});

// Conformally minimal elements of one fiber {z : a z = rhs, z_i >= 0 for i < mode}.
struct MinimalElementSet {
  Vec rhs;
  std::size_t mode = 0;
  std::vector<Vec> elements;  // graded-lex order; empty iff the fiber is empty
  bool empty() const { return elements.empty(); }
};

// Keeps vectors in graded-lex order and answers "first element conforming to r".
// Shared by the completion procedures; not synchronized.
class ReducerSet {
public:
  void insert(Vec v);
  bool contains_conforming(const Vec& r) const { return find_conforming(r) != nullptr; }
  const Vec* find_conforming(const Vec& r) const;
  const std::vector<Vec>& items() const { return items_; }  // graded-lex
  std::size_t size() const { return items_.size(); }

private:
  std::vector<Vec> items_;
};

// Drops every vector that another one conforms to; input order irrelevant,
// output graded-lex sorted and duplicate-free.
std::vector<Vec> interreduce(std::vector<Vec> items);

// Per-matrix query context. Memoizes the Graver basis, integral solvability,
// and minimal element sets keyed by (rhs, mode). Safe for concurrent queries.
class FiberOracle {
public:
  explicit FiberOracle(Mat a, Options opt = {});

  const Mat& matrix() const { return a_; }
  const Options& options() const { return opt_; }
  std::size_t dim() const { return a_.cols(); }

  const GraverBasis& graver();
  const std::vector<Vec>& hilbert();
  // graver() elements arranged for conformal reduction queries.
  const ReducerSet& graver_reducers();

  // Extended-fiber membership certificate: some z with a z = rhs.
  std::shared_ptr<const Vec> solution(const Vec& rhs);
  bool solvable(const Vec& rhs);

  std::shared_ptr<const MinimalElementSet> minimal(const Vec& rhs, std::size_t mode);
  bool fiber_nonempty(const Vec& rhs, std::size_t mode);

private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Vec, std::size_t>& k) const {
      std::size_t h = VecHash{}(k.first);
      boost::hash_combine(h, k.second);
      return h;
    }
  };

  std::shared_ptr<const MinimalElementSet> minimal_extended(const Vec& rhs);

  Mat a_;
  Options opt_;
  HnfResult hnf_;

  std::once_flag graver_once_;
  std::unique_ptr<GraverBasis> graver_;
  ReducerSet graver_red_;
  std::once_flag hilbert_once_;
  std::unique_ptr<std::vector<Vec>> hilbert_;

  std::mutex mu_;
  std::unordered_map<Vec, std::shared_ptr<const Vec>, VecHash> solutions_;  // null = infeasible
  std::unordered_map<Vec, std::shared_ptr<const MinimalElementSet>, VecHash> minimal0_;
  std::unordered_map<std::pair<Vec, std::size_t>, std::shared_ptr<const MinimalElementSet>, KeyHash>
      minimal_k_;
};

} // namespace atomfiber
