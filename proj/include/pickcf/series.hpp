// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_SERIES_HPP
#define PICKCF_SERIES_HPP

#include <vector>

#include "pickcf/hankel.hpp"
#include "pickcf/rational.hpp"

namespace pickcf {

/// Truncated formal power series c^0 + c^1 t + ... + c^N t^N in t = z - x
/// with exact rational coefficients. The truncation order is part of the
/// value: no operation ever claims coefficients beyond it, and reading past
/// the order is an error rather than a silent zero.
class PowerSeries {
 public:
  PowerSeries(Rat center, std::vector<Rat> coeffs);

  const Rat& center() const noexcept { return center_; }
  int order() const noexcept { return int(coeffs_.size()) - 1; }
  const Rat& coeff(int k) const;  // OrderTooLow past the truncation order
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

  /// Truncation to a lower order (OrderTooLow if k > order).
  PowerSeries truncated(int k) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  Rat center_;
  std::vector<Rat> coeffs_;
};

// Ring operations; binary ones require matching centers (CenterMismatch)
// and truncate to the smaller input order.
PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
/// Reciprocal at the input's order; NotInvertible when c^0 = 0.
PowerSeries series_invert(const PowerSeries& s);
PowerSeries series_scale(const Rat& c, const PowerSeries& s);
/// Multiplication by t (exact reindexing; order rises by one).
PowerSeries series_shift_up(const PowerSeries& s);

/// g = -1/(f - c^0) + 1/(c^1 t): the order drops by exactly 2. The pole
/// parts cancel symbolically (t is factored out of f - c^0 before
/// inversion), so no spurious 1/t term can survive rounding -- there is no
/// rounding. Requires order >= 2 (OrderTooLow) and c^1 != 0 (NotReducible).
PowerSeries reduce_series(const PowerSeries& f);

/// Inverse transform: 1/(f - a0) = 1/(a1 t) - g, order rises by exactly 2,
/// f has c^0 = a0, c^1 = a1. Requires a1 > 0 (InvalidDerivative).
PowerSeries augment_series(const PowerSeries& g, const Rat& a0, const Rat& a1);

/// H_m over the coefficient list; requires order >= 2m-1.
HankelMatrix hankel_of_series(const PowerSeries& s, int m);

}  // namespace pickcf

#endif
