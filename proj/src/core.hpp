#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace atomfiber {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Immutable integer vector. Caches its l1 norm and sign-support bitmasks
// (the masks cover the first 64 coordinates and only serve as a reject
// filter; conformity is always confirmed componentwise).
class Vec {
public:
  Vec() = default;
  explicit Vec(std::vector<Int> entries);
  Vec(std::initializer_list<int> entries);

  static Vec zero(std::size_t n);
  static Vec unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return e_.size(); }
  const Int& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }
  const Int& l1_norm() const { return l1_; }
  bool is_zero() const { return l1_ == 0; }
  std::uint64_t pos_mask() const { return pos_; }
  std::uint64_t neg_mask() const { return neg_; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec negated() const;
  Vec scaled(const Int& t) const;

  bool operator==(const Vec& o) const { return e_ == o.e_; }
  bool operator!=(const Vec& o) const { return e_ != o.e_; }

  std::string str() const;  // "a b c"

private:
  std::vector<Int> e_;
  Int l1_ = 0;
  std::uint64_t pos_ = 0;
  std::uint64_t neg_ = 0;

  void seal();
};

// u conforms to v: componentwise same closed orthant and no larger magnitude.
bool conforms(const Vec& u, const Vec& v);

// Hook for a prefix-restricted variant of the order; the default reading
// applies the full componentwise test regardless of k.
bool conforms_prefix(const Vec& u, const Vec& v, std::size_t k);

const Int& l1_norm(const Vec& v);

// Strict total order: ascending l1 norm, ties by entry-wise comparison.
int graded_lex_cmp(const Vec& u, const Vec& v);
int lex_cmp(const Vec& u, const Vec& v);

struct GradedLexLess {
  bool operator()(const Vec& u, const Vec& v) const { return graded_lex_cmp(u, v) < 0; }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Int& x : v.entries()) boost::hash_combine(h, x);
    return h;
  }
};

// Dense row-major integer matrix, d rows, n columns, d,n >= 1.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  static Mat from_rows(const std::vector<std::vector<int>>& rows);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  Vec mul(const Vec& z) const;  // A z, z of length cols()

  // (A | -b) with b of length rows(); used by tests to cross-check the
  // fiber machinery against the plain kernel route.
  Mat augment_neg(const Vec& b) const;

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

} // namespace atomfiber
