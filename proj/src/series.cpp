// SPDX-License-Identifier: Apache-2.0
#include "pickcf/series.hpp"

#include <algorithm>
#include <string>

#include "pickcf/errors.hpp"

namespace pickcf {

PowerSeries::PowerSeries(Rat center, std::vector<Rat> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(Errc::BadInput, "a series carries at least its constant term");
}

const Rat& PowerSeries::coeff(int k) const {
  if (k < 0 || k > order())
    fail(Errc::OrderTooLow, "coefficient " + std::to_string(k) + " beyond truncation order " +
                                std::to_string(order()));
  return coeffs_[size_t(k)];
}

PowerSeries PowerSeries::truncated(int k) const {
  if (k < 0 || k > order()) fail(Errc::OrderTooLow, "cannot truncate to order " + std::to_string(k));
  return PowerSeries(center_, std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + k + 1));
}

namespace {

void require_same_center(const PowerSeries& a, const PowerSeries& b) {
  if (a.center() != b.center()) fail(Errc::CenterMismatch, "series have different centers");
}

}  // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) c[size_t(k)] = a.coeff(k) + b.coeff(k);
  return PowerSeries(a.center(), std::move(c));
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) c[size_t(k)] = a.coeff(k) - b.coeff(k);
  return PowerSeries(a.center(), std::move(c));
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(size_t(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[size_t(i + j)] += a.coeff(i) * b.coeff(j);
  return PowerSeries(a.center(), std::move(c));
}

PowerSeries series_invert(const PowerSeries& s) {
  if (sgn(s.coeff(0)) == 0) fail(Errc::NotInvertible, "zero constant term");
  const int n = s.order();
  std::vector<Rat> b(size_t(n) + 1);
  b[0] = 1 / Rat(s.coeff(0));
  for (int k = 1; k <= n; ++k) {
    Rat acc = 0;
    for (int j = 1; j <= k; ++j) acc += s.coeff(j) * b[size_t(k - j)];
    b[size_t(k)] = -acc / s.coeff(0);
  }
  return PowerSeries(s.center(), std::move(b));
}

PowerSeries series_scale(const Rat& c, const PowerSeries& s) {
  std::vector<Rat> out(s.coeffs());
  for (auto& v : out) v *= c;
  return PowerSeries(s.center(), std::move(out));
}

PowerSeries series_shift_up(const PowerSeries& s) {
  std::vector<Rat> out(size_t(s.order()) + 2);
  for (int k = 0; k <= s.order(); ++k) out[size_t(k) + 1] = s.coeff(k);
  return PowerSeries(s.center(), std::move(out));
}

PowerSeries reduce_series(const PowerSeries& f) {
  if (f.order() < 2) fail(Errc::OrderTooLow, "reduction drops the order by 2; need order >= 2");
  const Rat& c1 = f.coeff(1);
  if (sgn(c1) == 0) fail(Errc::NotReducible, "vanishing first coefficient");
  const int n = f.order();
  // f - c^0 = t (c^1 + c^2 t + ...) = t h.  The two pole terms combine to
  //   g = (h - c^1) / (c^1 t h) = (c^2 + c^3 t + ...) / (c^1 h),
  // so the 1/t part is gone before any inversion happens.
  std::vector<Rat> head(size_t(n) - 1);  // u = c^2..c^n, order n-2
  for (int k = 2; k <= n; ++k) head[size_t(k) - 2] = f.coeff(k);
  PowerSeries u(f.center(), std::move(head));
  std::vector<Rat> hc(size_t(n) - 1);  // h truncated to order n-2
  for (int k = 1; k <= n - 1; ++k) hc[size_t(k) - 1] = f.coeff(k);
  PowerSeries h(f.center(), std::move(hc));
  return series_mul(u, series_invert(series_scale(c1, h)));
}

PowerSeries augment_series(const PowerSeries& g, const Rat& a0, const Rat& a1) {
  if (sgn(a1) <= 0) fail(Errc::InvalidDerivative, "augmentation requires a1 > 0");
  // 1/(f - a0) = (1 - a1 t g) / (a1 t), hence f = a0 + a1 t / (1 - a1 t g).
  PowerSeries tg = series_shift_up(series_scale(a1, g));  // order N+1
  std::vector<Rat> one(size_t(tg.order()) + 1);
  one[0] = 1;
  PowerSeries denom = series_sub(PowerSeries(g.center(), std::move(one)), tg);
  PowerSeries f = series_shift_up(series_scale(a1, series_invert(denom)));  // order N+2
  std::vector<Rat> out(f.coeffs());
  out[0] = a0;
  return PowerSeries(g.center(), std::move(out));
}

HankelMatrix hankel_of_series(const PowerSeries& s, int m) {
  if (m >= 1 && s.order() < 2 * m - 1)
    fail(Errc::DataTooShort, "order " + std::to_string(s.order()) + " series cannot fill H_" +
                                 std::to_string(m));
  return build_hankel(s.coeffs(), m);
}

}  // namespace pickcf
