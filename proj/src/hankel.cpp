// SPDX-License-Identifier: Apache-2.0
#include "pickcf/hankel.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "pickcf/errors.hpp"

namespace pickcf {

HankelMatrix::HankelMatrix(int m, std::vector<Rat> anti_diagonals)
    : m_(m), diag_(std::move(anti_diagonals)) {
  if (m_ < 0 || int(diag_.size()) != (m_ == 0 ? 0 : 2 * m_ - 1))
    fail(Errc::BadInput, "Hankel storage must hold 2m-1 anti-diagonal values");
}

RatMatrix HankelMatrix::to_matrix() const {
  RatMatrix a(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) a.at(i, j) = entry(i, j);
  return a;
}

HankelMatrix HankelMatrix::leading(int k) const {
  assert(0 <= k && k <= m_);
  if (k == 0) return HankelMatrix(0, {});
  return HankelMatrix(k, std::vector<Rat>(diag_.begin(), diag_.begin() + (2 * k - 1)));
}

HankelMatrix build_hankel(const std::vector<Rat>& a, int m) {
  if (m < 0) fail(Errc::BadInput, "negative Hankel dimension");
  if (m == 0) return HankelMatrix(0, {});
  const int n = int(a.size()) - 1;
  if (2 * m - 1 > n)
    fail(Errc::DataTooShort, "H_" + std::to_string(m) + " needs coefficients up to a^" +
                                 std::to_string(2 * m - 1) + ", have n = " + std::to_string(n));
  // entries are a^1..a^{2m-1}; a^0 is never read.
  return HankelMatrix(m, std::vector<Rat>(a.begin() + 1, a.begin() + 2 * m));
}

Inertia inertia(const HankelMatrix& h) { return symmetric_inertia(h.to_matrix()); }

RatMatrix schur_complement_11(const HankelMatrix& h) {
  const int m = h.dim();
  if (m < 1) fail(Errc::BadInput, "Schur complement of an empty matrix");
  const Rat& p = h.entry(0, 0);
  if (sgn(p) == 0) fail(Errc::PivotZero, "(1,1) entry is zero");
  RatMatrix s(m - 1, m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j)
      s.at(i, j) = h.entry(i + 1, j + 1) - h.entry(i + 1, 0) * h.entry(0, j + 1) / p;
  return s;
}

Rat minimal_corner_value(const HankelMatrix& h) {
  const int m = h.dim();
  if (m <= 1) return 0;  // empty quadratic form
  RatMatrix k(m - 1, m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) k.at(i, j) = h.entry(i, j);
  std::vector<Rat> w(static_cast<size_t>(m - 1));
  for (int i = 0; i < m - 1; ++i) w[size_t(i)] = h.entry(i, m - 1);
  auto u = solve_linear(k, w);
  if (!u) fail(Errc::NotAttainable, "off-corner column outside the range of the leading block");
  // For any solution u of K u = w with w in range(K), w^T u = w^T K^+ w.
  Rat value = 0;
  for (int i = 0; i < m - 1; ++i) value += w[size_t(i)] * (*u)[size_t(i)];
  return value;
}

bool is_se_minimally_positive(const HankelMatrix& h) {
  const int m = h.dim();
  if (m == 0) return false;  // empty matrix counts as positive definite
  const Inertia full = inertia(h);
  if (!full.is_psd()) return false;
  const Inertia lead = inertia(h.leading(m - 1));
  const bool by_rank = full.rank() == lead.rank();
  // Redundant corner-value route; both are exact, so they must agree.
  const bool by_corner = h.entry(m - 1, m - 1) == minimal_corner_value(h);
  if (by_rank != by_corner)
    throw std::logic_error("SE-minimality characterizations disagree");
  return by_rank;
}

CornerIdentity even_corner_identity(const std::vector<Rat>& a) {
  if (a.empty() || a.size() % 2 == 0)
    fail(Errc::BadInput, "even-corner identity needs a^0..a^{2m}");
  const int m = (int(a.size()) - 1) / 2;
  const Rat& top = a.back();  // a^{2m}
  CornerIdentity out;
  if (m == 0) {
    out.rhs = 0;
    out.holds = sgn(top) == 0;
    return out;
  }
  const HankelMatrix hm = build_hankel(a, m);
  const int r = inertia(hm).rank();
  if (r == 0) {
    out.rhs = 0;  // empty product; the constant solution forces a^{2m} = 0
    out.holds = sgn(top) == 0;
    return out;
  }
  const HankelMatrix hr = hm.leading(r);
  if (inertia(hr).rank() != r)
    fail(Errc::RankStructureBroken, "leading r x r Hankel block is singular");
  std::vector<Rat> rhs_col(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) rhs_col[size_t(i)] = a[size_t(m + 1 + i)];  // a^{m+1}..a^{m+r}
  auto y = solve_linear(hr.to_matrix(), rhs_col);
  if (!y) fail(Errc::RankStructureBroken, "H_r solve failed despite full rank");
  Rat rhs = 0;
  for (int i = 0; i < r; ++i) rhs += a[size_t(m + i)] * (*y)[size_t(i)];  // a^m..a^{m+r-1}
  out.rhs = rhs;
  out.holds = top == rhs;
  return out;
}

}  // namespace pickcf
