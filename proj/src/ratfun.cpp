// SPDX-License-Identifier: Apache-2.0
#include "pickcf/ratfun.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "pickcf/errors.hpp"
#include "pickcf/parallel.hpp"

namespace pickcf {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_root(const Rat& x) { return Polynomial({-x, Rat(1)}); }

Rat Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[size_t(k)];
}

const Rat& Polynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[size_t(k)];
  return acc;
}

std::complex<double> Polynomial::eval(const std::complex<double>& z) const {
  std::complex<double> acc{0.0, 0.0};
  for (int k = degree(); k >= 0; --k) acc = acc * z + to_double(coeffs_[size_t(k)]);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<Rat> d(static_cast<size_t>(degree()));
  for (int k = 1; k <= degree(); ++k) d[size_t(k) - 1] = Rat(k) * coeffs_[size_t(k)];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rat& x) const {
  // Successive synthetic divisions by (z - x); the remainders are the
  // Taylor coefficients of p about x.
  const int d = degree();
  if (d < 0) return Polynomial();
  std::vector<Rat> work = coeffs_;
  std::vector<Rat> out(size_t(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const int dd = d - k;
    for (int i = dd - 1; i >= 0; --i) work[size_t(i)] += x * work[size_t(i) + 1];
    // work[0] is p(x); work[1..dd] is the quotient by (z - x).
    out[size_t(k)] = work[0];
    work.erase(work.begin());
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> c = coeffs_;
  const Rat lead = c.back();
  for (auto& v : c) v /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(size_t(std::max(a.degree(), b.degree()) + 1));
  for (int k = 0; k < int(c.size()); ++k) c[size_t(k)] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(size_t(std::max(a.degree(), b.degree()) + 1));
  for (int k = 0; k < int(c.size()); ++k) c[size_t(k)] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rat> c(size_t(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i) {
    if (sgn(a.coeffs_[size_t(i)]) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      c[size_t(i + j)] += a.coeffs_[size_t(i)] * b.coeffs_[size_t(j)];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
  std::vector<Rat> c = p.coeffs();
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rat> quo(size_t(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[size_t(k)]) == 0) continue;
    const Rat q = rem[size_t(k)] / b.coeffs_[size_t(db)];
    quo[size_t(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[size_t(k - db + j)] -= q * b.coeffs_[size_t(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  // Euclid over Q; renormalizing each remainder keeps coefficients small.
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction() : num_(), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::BadInput, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const Rat lead = den_.leading();
  den_ = den_.monic();
  std::vector<Rat> nc = num_.coeffs();
  for (auto& v : nc) v /= lead;
  num_ = Polynomial(std::move(nc));
}

RationalFunction RationalFunction::constant(const Rat& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::complex<double> eval(const RationalFunction& f, const std::complex<double>& z) {
  const std::complex<double> dv = f.den().eval(z);
  // Backward-error style guard: once |den(z)| is negligible against the
  // term-magnitude bound, the quotient carries no information.
  double bound = 0.0;
  const double az = std::abs(z);
  double p = 1.0;
  for (int k = 0; k <= f.den().degree(); ++k) {
    bound += std::abs(to_double(f.den().coeff(k))) * p;
    p *= az;
  }
  if (std::abs(dv) <= 1e-12 * bound)
    fail(Errc::NearPole, "denominator vanishes to working precision");
  return f.num().eval(z) / dv;
}

PowerSeries taylor_at(const RationalFunction& f, const Rat& x, int order) {
  if (order < 0) fail(Errc::BadInput, "negative expansion order");
  if (sgn(f.den().eval(x)) == 0) fail(Errc::PoleAtCenter, "denominator vanishes at the center");
  const Polynomial ns = f.num().shifted(x);
  const Polynomial ds = f.den().shifted(x);
  auto pad = [order, &x](const Polynomial& p) {
    std::vector<Rat> c(size_t(order) + 1);
    for (int k = 0; k <= order; ++k) c[size_t(k)] = p.coeff(k);
    return PowerSeries(x, std::move(c));
  };
  return series_mul(pad(ns), series_invert(pad(ds)));
}

LaurentExpansion laurent_at(const RationalFunction& f, const Rat& x, int order) {
  if (sgn(f.den().eval(x)) != 0) return {Rat(0), taylor_at(f, x, order)};
  const Polynomial lin = Polynomial::linear_root(x);
  auto [den1, rem] = Polynomial::divmod(f.den(), lin);
  assert(rem.is_zero());
  if (sgn(den1.eval(x)) == 0) fail(Errc::HigherOrderPole, "pole of order >= 2 at the center");
  // f = h / (z - x) with h = num/den1 analytic at x.
  const PowerSeries h = taylor_at(RationalFunction(f.num(), den1), x, order + 1);
  std::vector<Rat> tail(size_t(order) + 1);
  for (int k = 0; k <= order; ++k) tail[size_t(k)] = h.coeff(k + 1);
  return {h.coeff(0), PowerSeries(x, std::move(tail))};
}

int degree(const RationalFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

RatMatrix bezoutian(const RationalFunction& f) {
  const Polynomial& p = f.num();
  const Polynomial& q = f.den();
  const int d = std::max(p.degree(), q.degree());
  if (d <= 0) return RatMatrix(0, 0);
  // C(z,w) = p(z)q(w) - p(w)q(z) = sum_a c_a(w) z^a vanishes on z = w;
  // synthetic division by (z - w) gives B row by row:
  //   t_{d-1} = c_d,   t_{k-1} = c_k + w t_k.
  auto cw = [&](int a) {  // coefficient of z^a, a polynomial in w
    std::vector<Rat> c(size_t(d) + 1);
    for (int b = 0; b <= d; ++b) c[size_t(b)] = p.coeff(a) * q.coeff(b) - p.coeff(b) * q.coeff(a);
    return c;
  };
  RatMatrix bez(d, d);
  std::vector<Rat> t = cw(d);  // degree < d in w
  for (int k = d - 1; k >= 0; --k) {
    for (int j = 0; j < d; ++j) bez.at(k, j) = t[size_t(j)];
    if (k > 0) {
      std::vector<Rat> next = cw(k);
      for (int j = 0; j < d; ++j) next[size_t(j) + 1] += t[size_t(j)];
      t = std::move(next);
    }
  }
  assert(bez.is_symmetric());
  return bez;
}

// ------------------------------------------------------------ Pick falsifier

namespace {

struct MeshPoint {
  std::complex<double> z;
  double im_f;  // +inf where evaluation failed
};

struct MeshWindow {
  double lr_min, lr_max;        // log10 radius range
  double theta_min, theta_max;  // subinterval of (0, pi)
};

double im_at(const RationalFunction& f, const std::complex<double>& z) {
  try {
    const auto v = eval(f, z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      return std::numeric_limits<double>::infinity();
    return v.imag();
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

std::optional<std::complex<double>> sweep(const RationalFunction& f, const FalsifierConfig& cfg,
                                          const MeshWindow& win, std::complex<double>* best_z,
                                          double* best_im) {
  const int n_r = cfg.n_r, n_theta = cfg.n_theta;
  const std::int64_t total = std::int64_t(n_r) * n_theta;
  auto pts = par::map_index<MeshPoint>(
      total,
      [&](std::int64_t idx) {
        const int ir = int(idx / n_theta);
        const int it = int(idx % n_theta);
        const double lr = win.lr_min + (win.lr_max - win.lr_min) * ir / double(n_r - 1);
        const double theta =
            win.theta_min + (win.theta_max - win.theta_min) * (it + 1) / double(n_theta + 1);
        const double r = std::pow(10.0, lr);
        const std::complex<double> z{cfg.center + r * std::cos(theta), r * std::sin(theta)};
        return MeshPoint{z, im_at(f, z)};
      },
      cfg.parallel);
  // Deterministic reduction in grid order.
  for (const auto& p : pts) {
    if (p.im_f < *best_im) {
      *best_im = p.im_f;
      *best_z = p.z;
    }
  }
  if (*best_im < 0.0) return *best_z;
  return std::nullopt;
}

std::optional<std::complex<double>> falsify(const RationalFunction& f, const FalsifierConfig& cfg) {
  double best_im = std::numeric_limits<double>::infinity();
  std::complex<double> best_z{cfg.center, 1.0};
  const MeshWindow base{std::log10(cfg.r_min), std::log10(cfg.r_max), 0.0, M_PI};
  if (auto w = sweep(f, cfg, base, &best_z, &best_im)) return w;
  // Zoom toward the running minimum, shrinking both the log-radius and the
  // angle window each level.
  double lr_width = 4 * (base.lr_max - base.lr_min) / cfg.n_r;
  double th_width = 4 * M_PI / cfg.n_theta;
  for (int level = 0; level < cfg.refine_levels; ++level) {
    const auto rel = best_z - std::complex<double>(cfg.center, 0.0);
    const double lr = std::log10(std::abs(rel));
    const double th = std::arg(rel);
    const MeshWindow win{lr - lr_width, lr + lr_width,
                         std::max(0.0, th - th_width), std::min(M_PI, th + th_width)};
    if (auto w = sweep(f, cfg, win, &best_z, &best_im)) return w;
    lr_width *= 8.0 / cfg.n_r;
    th_width *= 8.0 / cfg.n_theta;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::complex<double>> find_nonpick_witness(const RationalFunction& f,
                                                         const FalsifierConfig& cfg) {
  return falsify(f, cfg);
}

std::optional<std::complex<double>> find_nonpick_witness_serial(const RationalFunction& f,
                                                                FalsifierConfig cfg) {
  cfg.parallel = false;
  return falsify(f, cfg);
}

PickCertificate is_pick(const RationalFunction& f, const FalsifierConfig& cfg) {
  PickCertificate cert;
  const int d = degree(f);
  if (d == 0) {  // real constants have Im f = 0 everywhere
    cert.pick = true;
    return cert;
  }
  const RatMatrix bez = bezoutian(f);
  cert.bezoutian_inertia = symmetric_inertia(bez);
  const bool degree_ok = f.num().degree() <= f.den().degree() + 1;
  cert.pick = degree_ok && cert.bezoutian_inertia.is_psd();
  if (!cert.pick) cert.witness = find_nonpick_witness(f, cfg);
  return cert;
}

}  // namespace pickcf
