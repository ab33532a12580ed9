#include "core.hpp"

#include <sstream>

namespace atomfiber {

Vec::Vec(std::vector<Int> entries) : e_(std::move(entries)) { seal(); }

Vec::Vec(std::initializer_list<int> entries) {
  e_.reserve(entries.size());
  for (int x : entries) e_.emplace_back(x);
  seal();
}

void Vec::seal() {
  l1_ = 0;
  pos_ = neg_ = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const Int& x = e_[i];
    if (x > 0) {
      l1_ += x;
      if (i < 64) pos_ |= std::uint64_t(1) << i;
    } else if (x < 0) {
      l1_ -= x;
      if (i < 64) neg_ |= std::uint64_t(1) << i;
    }
  }
}

Vec Vec::zero(std::size_t n) { return Vec(std::vector<Int>(n)); }

Vec Vec::unit(std::size_t n, std::size_t i) {
  std::vector<Int> e(n);
  e.at(i) = 1;
  return Vec(std::move(e));
}

Vec Vec::operator+(const Vec& o) const {
  if (dim() != o.dim()) fail(ErrCode::dim, "vector dimension mismatch in +");
  std::vector<Int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Vec(std::move(e));
}

Vec Vec::operator-(const Vec& o) const {
  if (dim() != o.dim()) fail(ErrCode::dim, "vector dimension mismatch in -");
  std::vector<Int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e_[i];
  return Vec(std::move(e));
}

Vec Vec::negated() const {
  std::vector<Int> e(e_);
  for (Int& x : e) x = -x;
  return Vec(std::move(e));
}

Vec Vec::scaled(const Int& t) const {
  std::vector<Int> e(e_);
  for (Int& x : e) x *= t;
  return Vec(std::move(e));
}

std::string Vec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ' ';
    os << e_[i];
  }
  return os.str();
}

bool conforms(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) fail(ErrCode::dim, "vector dimension mismatch in conforms");
  if ((u.pos_mask() & ~v.pos_mask()) != 0) return false;
  if ((u.neg_mask() & ~v.neg_mask()) != 0) return false;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Int& a = u[i];
    if (a == 0) continue;
    const Int& b = v[i];
    if (a > 0) {
      if (a > b) return false;  // covers b <= 0 as well
    } else {
      if (a < b) return false;
    }
  }
  return true;
}

bool conforms_prefix(const Vec& u, const Vec& v, std::size_t k) {
  if (k > u.dim()) fail(ErrCode::invalid, "conforms_prefix: k out of range");
  return conforms(u, v);
}

const Int& l1_norm(const Vec& v) { return v.l1_norm(); }

int graded_lex_cmp(const Vec& u, const Vec& v) {
  if (u.l1_norm() != v.l1_norm()) return u.l1_norm() < v.l1_norm() ? -1 : 1;
  return lex_cmp(u, v);
}

int lex_cmp(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) fail(ErrCode::dim, "vector dimension mismatch in compare");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrCode::invalid, "matrix must have at least one row and column");
  if (a_.size() != rows_ * cols_) fail(ErrCode::dim, "matrix entry count mismatch");
}

Mat Mat::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrCode::invalid, "empty matrix");
  std::vector<Int> a;
  a.reserve(rows.size() * rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) fail(ErrCode::dim, "ragged matrix rows");
    for (int x : r) a.emplace_back(x);
  }
  return Mat(rows.size(), rows.front().size(), std::move(a));
}

Mat Mat::identity(std::size_t n) {
  std::vector<Int> a(n * n);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1;
  return Mat(n, n, std::move(a));
}

Vec Mat::col(std::size_t c) const {
  std::vector<Int> e(rows_);
  for (std::size_t r = 0; r < rows_; ++r) e[r] = at(r, c);
  return Vec(std::move(e));
}

Vec Mat::row(std::size_t r) const {
  std::vector<Int> e(cols_);
  for (std::size_t c = 0; c < cols_; ++c) e[c] = at(r, c);
  return Vec(std::move(e));
}

Vec Mat::mul(const Vec& z) const {
  if (z.dim() != cols_) fail(ErrCode::dim, "matrix-vector dimension mismatch");
  std::vector<Int> e(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * z[c];
    e[r] = std::move(acc);
  }
  return Vec(std::move(e));
}

Mat Mat::augment_neg(const Vec& b) const {
  if (b.dim() != rows_) fail(ErrCode::dim, "augment: rhs dimension mismatch");
  std::vector<Int> a;
  a.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) a.push_back(at(r, c));
    a.push_back(-b[r]);
  }
  return Mat(rows_, cols_ + 1, std::move(a));
}

} // namespace atomfiber
