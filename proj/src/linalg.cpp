// SPDX-License-Identifier: Apache-2.0
#include "pickcf/linalg.hpp"

#include <cassert>
#include <utility>

#include "pickcf/errors.hpp"

namespace pickcf {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.cols() == b.rows());
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void swap_symmetric(RatMatrix& a, int i, int j) {
  if (i == j) return;
  const int n = a.rows();
  for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
  for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
}

}  // namespace

Inertia symmetric_inertia(const RatMatrix& input) {
  assert(input.is_symmetric());
  RatMatrix a = input;
  const int n = a.rows();
  Inertia in;
  int k = 0;
  while (k < n) {
    // 1x1 pivot from the remaining diagonal when possible.
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (sgn(a.at(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      swap_symmetric(a, k, piv);
      const Rat p = a.at(k, k);
      (sgn(p) > 0 ? in.n_pos : in.n_neg)++;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(a.at(i, k)) == 0) continue;
        const Rat t = a.at(i, k) / p;
        for (int j = k + 1; j < n; ++j) a.at(i, j) -= t * a.at(k, j);
      }
      // Trailing block is the Schur complement; by Haynsworth its inertia
      // adds to the pivot's.
      ++k;
      continue;
    }
    // Whole remaining diagonal is zero: pivot an off-diagonal 2x2 block
    // [[0,c],[c,0]], eigenvalues +-c.
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sgn(a.at(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {  // remaining block vanishes entirely
      in.n_zero += n - k;
      break;
    }
    swap_symmetric(a, k, pi);  // pj > pi >= k, so pj is untouched by this swap
    swap_symmetric(a, k + 1, pj);
    const Rat c = a.at(k, k + 1);
    in.n_pos++;
    in.n_neg++;
    // Schur complement against B = [[0,c],[c,0]], B^{-1} = [[0,1/c],[1/c,0]].
    std::vector<Rat> u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    for (int i = k + 2; i < n; ++i) {
      u[size_t(i)] = a.at(i, k);
      v[size_t(i)] = a.at(i, k + 1);
    }
    for (int i = k + 2; i < n; ++i)
      for (int j = k + 2; j < n; ++j)
        a.at(i, j) -= (u[size_t(i)] * v[size_t(j)] + v[size_t(i)] * u[size_t(j)]) / c;
    k += 2;
  }
  assert(in.dim() == n);
  return in;
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
  const int n = a.rows(), m = a.cols();
  assert(int(b.size()) == n);
  RatMatrix w(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, m) = b[size_t(i)];
  }
  std::vector<int> pivot_col(size_t(n), -1);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (sgn(w.at(i, col)) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j <= m; ++j) std::swap(w.at(row, j), w.at(pr, j));
    const Rat p = w.at(row, col);
    for (int i = 0; i < n; ++i) {
      if (i == row || sgn(w.at(i, col)) == 0) continue;
      const Rat t = w.at(i, col) / p;
      for (int j = col; j <= m; ++j) w.at(i, j) -= t * w.at(row, j);
    }
    pivot_col[size_t(row)] = col;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (sgn(w.at(i, m)) != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> x(static_cast<size_t>(m));
  for (int i = 0; i < row; ++i) {
    const int c = pivot_col[size_t(i)];
    x[size_t(c)] = w.at(i, m) / w.at(i, c);
  }
  return x;
}

}  // namespace pickcf
