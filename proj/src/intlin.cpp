#include "intlin.hpp"

namespace atomfiber {

namespace {

// floor division; keeps reduced entries in [0, pivot)
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Cols {
  // column-major working copies of h (d x n) and u (n x n)
  std::size_t d, n;
  std::vector<std::vector<Int>> h;
  std::vector<std::vector<Int>> u;

  explicit Cols(const Mat& a) : d(a.rows()), n(a.cols()), h(n), u(n) {
    for (std::size_t j = 0; j < n; ++j) {
      h[j].resize(d);
      for (std::size_t i = 0; i < d; ++i) h[j][i] = a.at(i, j);
      u[j].assign(n, 0);
      u[j][j] = 1;
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(h[a], h[b]);
    std::swap(u[a], u[b]);
  }

  void negate_col(std::size_t j) {
    for (Int& x : h[j]) x = -x;
    for (Int& x : u[j]) x = -x;
  }

  // col_j -= q * col_p
  void axpy(std::size_t j, const Int& q, std::size_t p) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d; ++i) h[j][i] -= q * h[p][i];
    for (std::size_t i = 0; i < n; ++i) u[j][i] -= q * u[p][i];
  }
};

} // namespace

HnfResult hermite_normal_form(const Mat& a) {
  Cols w(a);
  const std::size_t d = w.d, n = w.n;
  std::vector<std::size_t> pivot_rows;
  std::size_t c = 0;  // next pivot column slot
  for (std::size_t r = 0; r < d && c < n; ++r) {
    // Euclidean elimination across columns [c, n) in row r; repeatedly reduce
    // by the entry of smallest nonzero magnitude (ties: lowest index) until
    // one nonzero remains.
    for (;;) {
      std::size_t p = n;
      for (std::size_t j = c; j < n; ++j) {
        if (w.h[j][r] == 0) continue;
        if (p == n || abs(w.h[j][r]) < abs(w.h[p][r])) p = j;
      }
      if (p == n) break;  // row r has no pivot among remaining columns
      bool lone = true;
      for (std::size_t j = c; j < n; ++j) {
        if (j == p || w.h[j][r] == 0) continue;
        w.axpy(j, w.h[j][r] / w.h[p][r], p);  // truncated quotient shrinks |entry|
        if (w.h[j][r] != 0) lone = false;
      }
      if (lone) {
        w.swap_cols(c, p);
        break;
      }
    }
    if (w.h[c][r] == 0) continue;  // dependent row, pivot slot unchanged
    if (w.h[c][r] < 0) w.negate_col(c);
    // normalize entries left of the pivot into [0, pivot)
    for (std::size_t j = 0; j < c; ++j) w.axpy(j, floor_div(w.h[j][r], w.h[c][r]), c);
    pivot_rows.push_back(r);
    ++c;
  }
  std::vector<Int> hm, um;
  hm.reserve(d * n);
  um.reserve(n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) hm.push_back(w.h[j][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) um.push_back(w.u[j][i]);
  return HnfResult{Mat(d, n, std::move(hm)), Mat(n, n, std::move(um)), std::move(pivot_rows)};
}

KernelLattice kernel_lattice_basis(const Mat& a) {
  HnfResult hnf = hermite_normal_form(a);
  const std::size_t rank = hnf.pivot_rows.size();
  KernelLattice k;
  for (std::size_t j = rank; j < a.cols(); ++j) k.basis.push_back(hnf.u.col(j));
  return k;
}

std::optional<Vec> solve_integral(const HnfResult& hnf, const Mat& a, const Vec& b) {
  if (b.dim() != a.rows()) fail(ErrCode::dim, "solve_integral: rhs dimension mismatch");
  const std::size_t rank = hnf.pivot_rows.size();
  // forward substitution on the pivot block of h: h y = b, y zero on kernel columns
  std::vector<Int> y(a.cols());
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Int acc = b[r];
    for (std::size_t j = 0; j < next_pivot; ++j) acc -= hnf.h.at(r, j) * y[j];
    if (next_pivot < rank && hnf.pivot_rows[next_pivot] == r) {
      const Int& p = hnf.h.at(r, next_pivot);
      if (acc % p != 0) return std::nullopt;
      y[next_pivot] = acc / p;
      ++next_pivot;
    } else if (acc != 0) {
      return std::nullopt;  // dependent row with inconsistent rhs
    }
  }
  return hnf.u.mul(Vec(std::move(y)));
}

std::optional<Vec> solve_integral(const Mat& a, const Vec& b) {
  return solve_integral(hermite_normal_form(a), a, b);
}

Int determinant(const Mat& a) {
  if (a.rows() != a.cols()) fail(ErrCode::dim, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace atomfiber
