// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_LINALG_HPP
#define PICKCF_LINALG_HPP

#include <optional>
#include <vector>

#include "pickcf/rational.hpp"

namespace pickcf {

/// Signature of a real symmetric matrix: counts of positive, negative and
/// zero eigenvalues. A congruence invariant, so it can be computed by exact
/// elimination instead of an eigensolver.
struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  int rank() const noexcept { return n_pos + n_neg; }
  int dim() const noexcept { return n_pos + n_neg + n_zero; }
  bool is_psd() const noexcept { return n_neg == 0; }
  bool is_pd() const noexcept { return n_neg == 0 && n_zero == 0; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Dense matrix of exact rationals. Small sizes only; no ambitions beyond
/// what the Hankel and Bezoutian computations need.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rat& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool is_symmetric() const;
  RatMatrix transposed() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact inertia of a symmetric matrix by congruence elimination.
/// Diagonal pivots where available; when the whole remaining diagonal is
/// zero, an off-diagonal 2x2 block [[0,a],[a,0]] is pivoted, contributing
/// (+1,-1) to the signature. No floating point anywhere.
Inertia symmetric_inertia(const RatMatrix& a);

/// Any exact solution of A x = b, or nullopt when the system is
/// inconsistent. Free variables are fixed to zero.
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace pickcf

#endif
