// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_HANKEL_HPP
#define PICKCF_HANKEL_HPP

#include <vector>

#include "pickcf/linalg.hpp"
#include "pickcf/rational.hpp"

namespace pickcf {

/// m x m Hankel matrix [a^{i+j-1}] built from a coefficient sequence
/// a^0..a^n. Only the 2m-1 anti-diagonal values a^1..a^{2m-1} are stored;
/// a^0 never enters the matrix. m = 0 (empty matrix) is allowed and counts
/// as positive definite.
class HankelMatrix {
 public:
  HankelMatrix() = default;
  /// anti_diagonals holds a^1..a^{2m-1} (size 2m-1, empty for m = 0).
  HankelMatrix(int m, std::vector<Rat> anti_diagonals);

  int dim() const noexcept { return m_; }
  /// entry(i,j) = a^{i+j+1} for 0-based indices.
  const Rat& entry(int i, int j) const { return diag_[size_t(i) + j]; }
  const std::vector<Rat>& anti_diagonals() const noexcept { return diag_; }

  RatMatrix to_matrix() const;
  /// Leading k x k principal submatrix (shares the anti-diagonal prefix).
  HankelMatrix leading(int k) const;

  friend bool operator==(const HankelMatrix&, const HankelMatrix&) = default;

 private:
  int m_ = 0;
  std::vector<Rat> diag_;
};

/// H_m(a) from a = a^0..a^n. Requires 2m-1 <= n (DataTooShort otherwise).
HankelMatrix build_hankel(const std::vector<Rat>& a, int m);

Inertia inertia(const HankelMatrix& h);

/// Schur complement of the (1,1) entry; PivotZero when a^1 = 0.
/// The result is symmetric but in general no longer Hankel.
RatMatrix schur_complement_11(const HankelMatrix& h);

/// Smallest value the (m,m) corner entry can take while the matrix stays
/// PSD: w^T K^+ w for the leading principal block K and off-corner column w.
/// NotAttainable when w is outside the range of K (then H was not PSD).
/// Returns 0 for m <= 1.
Rat minimal_corner_value(const HankelMatrix& h);

/// PSD and the corner cannot be decreased at all: rank H equals the rank of
/// the leading (m-1) principal block. Cross-checked internally against the
/// corner-value characterization. Mutually exclusive with positive
/// definiteness; false for m = 0.
bool is_se_minimally_positive(const HankelMatrix& h);

struct CornerIdentity {
  bool holds = false;
  Rat rhs;
};

/// For a = a^0..a^{2m} with H_m(a) PSD of rank r: evaluates
/// [a^m..a^{m+r-1}] H_r(a)^{-1} [a^{m+1}..a^{m+r}]^T and compares with
/// a^{2m}. rhs = 0 when r = 0. RankStructureBroken if H_r(a) is singular
/// with r >= 1 (impossible for PSD Hankel input).
CornerIdentity even_corner_identity(const std::vector<Rat>& a);

}  // namespace pickcf

#endif
