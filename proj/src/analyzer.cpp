// SPDX-License-Identifier: Apache-2.0
#include "pickcf/analyzer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <memory>

#include "pickcf/errors.hpp"
#include "pickcf/parallel.hpp"

namespace pickcf {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finite(const Cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

Cplx pow_int(Cplx z, int e) {
  Cplx acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

double pow_int(double x, int e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= x;
    x *= x;
    e >>= 1;
  }
  return acc;
}

// Terms needed so that sum_{k>K} k^{-nu} / (Im z)^{j+1} < tol, from the
// integral comparison sum_{k>K} k^{-nu} <= K^{1-nu}/(nu-1).
std::int64_t kmax_power_tail(int nu, int deriv_order, double im_z, double tol,
                             std::int64_t cap) {
  const double need =
      std::pow((nu - 1) * tol * std::pow(im_z, deriv_order + 1), -1.0 / (nu - 1));
  if (!std::isfinite(need)) return cap;
  const std::int64_t k = std::int64_t(need) + 2;
  return std::clamp<std::int64_t>(k, 64, cap);
}

}  // namespace

// ----------------------------------------------------------------- handles

FunctionHandle make_handle(std::string label, std::function<Cplx(Cplx)> evaluator,
                           const AnalyzerConfig& cfg) {
  FunctionHandle h;
  h.label = std::move(label);
  h.evaluator = evaluator;
  const int nodes = cfg.cauchy_nodes;
  h.derivative = [evaluator, nodes](Cplx z, int k) -> Cplx {
    if (k == 0) return evaluator(z);
    // Cauchy formula on the circle of radius Im(z)/2 about z; the trapezoid
    // rule on a circle converges geometrically for analytic integrands.
    const double rho = 0.5 * z.imag();
    Cplx acc{0.0, 0.0};
    for (int j = 0; j < nodes; ++j) {
      const double th = 2.0 * kPi * j / nodes;
      const Cplx w = std::polar(rho, th);
      acc += evaluator(z + w) * std::polar(1.0, -k * th);
    }
    return acc / (double(nodes) * std::pow(rho, k));
  };
  return h;
}

FunctionHandle make_rational_handle(const RationalFunction& f) {
  // f^{(k)} = N_k / den^{k+1} with N_{k+1} = N_k' den - (k+1) N_k den'.
  constexpr int kMaxOrder = 16;
  auto numerators = std::make_shared<std::vector<Polynomial>>();
  numerators->push_back(f.num());
  const Polynomial den = f.den();
  const Polynomial dden = den.derivative();
  for (int k = 0; k < kMaxOrder; ++k) {
    const Polynomial& nk = numerators->back();
    numerators->push_back(nk.derivative() * den - Rat(k + 1) * (nk * dden));
  }
  FunctionHandle h;
  h.label = "rational";
  h.evaluator = [f](Cplx z) { return eval(f, z); };
  h.derivative = [numerators, den](Cplx z, int k) -> Cplx {
    if (k > kMaxOrder) fail(Errc::InvalidParameter, "derivative order beyond handle limit");
    const Cplx dz = den.eval(z);
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return (*numerators)[size_t(k)].eval(z) / (pow_int(dz, k + 1) * kfact);
  };
  return h;
}

FunctionHandle example_bank(const std::string& id, int nu, const AnalyzerConfig& cfg) {
  const double tol = cfg.tail_tol;
  const std::int64_t cap = cfg.kmax_cap;
  const bool parallel = cfg.parallel;
  if (id == "ex_2_1") {
    return make_handle("ex_2_1", [](Cplx z) { return z / (1.0 - z * std::log(z)); }, cfg);
  }
  if (id == "ex_2_2") {
    if (nu < 4) fail(Errc::InvalidParameter, "ex_2_2 requires nu >= 4");
    FunctionHandle h;
    h.label = "ex_2_2(nu=" + std::to_string(nu) + ")";
    // f^{(j)}(z)/j! = (-1)^{j+1} sum_k 1/(k^nu (z + 1/k)^{j+1})
    auto sum_at = [nu, tol, cap, parallel](Cplx z, int j) -> Cplx {
      if (z.imag() <= 0.0) fail(Errc::EvaluationFailed, "point not in the upper half-plane");
      const std::int64_t kmax = kmax_power_tail(nu, j, z.imag(), tol, cap);
      const Cplx s = par::sum_terms(
          kmax,
          [nu, j, z](std::int64_t i) {
            const double k = double(i + 1);
            const Cplx base = z + 1.0 / k;
            return 1.0 / (pow_int(k, nu) * pow_int(base, j + 1));
          },
          parallel);
      if (!finite(s)) fail(Errc::EvaluationFailed, "series evaluation overflowed");
      return ((j % 2 == 0) ? -1.0 : 1.0) * s;
    };
    h.evaluator = [sum_at](Cplx z) { return sum_at(z, 0); };
    h.derivative = [sum_at](Cplx z, int j) { return sum_at(z, j); };
    return h;
  }
  if (id == "ex_2_3") {
    FunctionHandle h;
    h.label = "ex_2_3";
    // f^{(j)}(z)/j! = -(1/e) (-1)^j sum_k 1/(k! (z + 1/k)^{j+1})
    auto sum_at = [tol](Cplx z, int j) -> Cplx {
      if (z.imag() <= 0.0) fail(Errc::EvaluationFailed, "point not in the upper half-plane");
      const double y = z.imag();
      // factorial tail: remainder modulus <= 2 / ((K+1)! y^{j+1})
      const double yp = pow_int(y, j + 1);
      int kmax = 1;
      double next_fact = 2.0;  // (kmax + 1)!
      while (kmax < 200 && 2.0 / (next_fact * yp) >= tol) {
        ++kmax;
        next_fact *= kmax + 1;
      }
      Cplx acc{0.0, 0.0};
      double factorial = 1.0;
      for (int k = 1; k <= kmax; ++k) {
        factorial *= k;
        acc += 1.0 / (factorial * pow_int(z + 1.0 / k, j + 1));
      }
      const double sign = (j % 2 == 0) ? -1.0 : 1.0;
      return sign * std::exp(-1.0) * acc;
    };
    h.evaluator = [sum_at](Cplx z) { return sum_at(z, 0); };
    h.derivative = [sum_at](Cplx z, int j) { return sum_at(z, j); };
    return h;
  }
  fail(Errc::InvalidParameter, "unknown example id '" + id + "'");
}

mpz_class an_coefficient(int n) {
  if (n < 0) fail(Errc::InvalidParameter, "negative index");
  std::vector<mpz_class> a(size_t(n) + 1);
  a[0] = 1;
  for (int m = 0; m < n; ++m) {
    mpz_class next = 2 * a[size_t(m)];
    for (int r = 1; r <= m; ++r) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                   static_cast<unsigned long>(r));
      next += binom * a[size_t(m - r)];
    }
    a[size_t(m) + 1] = next;
  }
  return a[size_t(n)];
}

// ------------------------------------------------------------- estimation

namespace {

struct RayEstimate {
  std::vector<Cplx> samples;  // f^{(k)}(z_j)/k! along the ray
  Cplx value{0.0, 0.0};
  bool converged = false;
  int levels = 0;
};

// Walks the geometric grid z_j = x + (y0 2^-j) e^{i theta} until the twice-
// Richardson-extrapolated sequence settles. Evaluation failures past the
// first level end the grid instead of aborting the estimate.
RayEstimate estimate_along_ray(const FunctionHandle& h, double x, double theta, int k,
                               const AnalyzerConfig& cfg) {
  RayEstimate out;
  const Cplx dir = std::polar(1.0, theta);
  std::vector<Cplx> s, r1, r2;
  for (int j = 0; j <= cfg.grid_depth; ++j) {
    const double r = cfg.y0 * std::pow(2.0, -j);
    Cplx v;
    try {
      v = h.derivative(Cplx(x, 0.0) + r * dir, k);
    } catch (const Error& e) {
      if (e.code() == Errc::EvaluationFailed && j > 0) break;
      throw;
    }
    if (!finite(v)) {
      if (j == 0) fail(Errc::EvaluationFailed, "handle evaluation not finite");
      break;
    }
    s.push_back(v);
    if (s.size() >= 2) r1.push_back(2.0 * s[s.size() - 1] - s[s.size() - 2]);
    if (r1.size() >= 2) r2.push_back((4.0 * r1[r1.size() - 1] - r1[r1.size() - 2]) / 3.0);
    if (r2.size() >= 3) {
      const size_t m = r2.size();
      const double scale = std::max(1.0, std::abs(r2[m - 1]));
      if (std::abs(r2[m - 1] - r2[m - 2]) < cfg.conv_tol * scale &&
          std::abs(r2[m - 2] - r2[m - 3]) < cfg.conv_tol * scale) {
        out.converged = true;
        break;
      }
    }
  }
  out.samples = std::move(s);
  out.levels = int(out.samples.size());
  if (!r2.empty())
    out.value = r2.back();
  else if (!out.samples.empty())
    out.value = out.samples.back();
  return out;
}

double growth_slope(const std::vector<double>& y, const std::vector<Cplx>& v) {
  // Least-squares slope of |v| against log(1/y).
  const size_t n = std::min(y.size(), v.size());
  if (n < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double xi = std::log(1.0 / y[i]);
    const double yi = std::abs(v[i]);
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  const double det = n * sxx - sx * sx;
  return det == 0.0 ? 0.0 : (n * sxy - sx * sy) / det;
}

std::vector<double> grid_levels(const AnalyzerConfig& cfg, int count) {
  std::vector<double> y(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) y[size_t(j)] = cfg.y0 * std::pow(2.0, -j);
  return y;
}

}  // namespace

ExpansionEstimate radial_coefficients(const FunctionHandle& h, double x, int order,
                                      const AnalyzerConfig& cfg) {
  ExpansionEstimate est;
  est.coefficients.resize(size_t(order) + 1);
  est.samples.resize(size_t(order) + 1);
  int max_levels = 0;
  for (int k = 0; k <= order; ++k) {
    RayEstimate ray = estimate_along_ray(h, x, kPi / 2.0, k, cfg);
    auto& c = est.coefficients[size_t(k)];
    c.raw = ray.value;
    c.value = ray.value.real();
    c.converged = ray.converged;
    c.levels_used = ray.levels;
    c.growth_exponent = growth_slope(grid_levels(cfg, ray.levels), ray.samples);
    est.samples[size_t(k)] = std::move(ray.samples);
    max_levels = std::max(max_levels, c.levels_used);
  }
  est.grid_y = grid_levels(cfg, max_levels);
  return est;
}

ExpansionEstimate nontangential_coefficients(const FunctionHandle& h, double x, int order,
                                             double aperture, const AnalyzerConfig& cfg) {
  if (aperture < 1.0) fail(Errc::InvalidParameter, "aperture K must be >= 1");
  // Rays with |cot theta| <= sqrt(K^2 - 1) stay inside the Stolz region S_K.
  const double s = std::sqrt(aperture * aperture - 1.0);
  const double cots[5] = {-s, -s / 2.0, 0.0, s / 2.0, s};
  ExpansionEstimate est;
  est.coefficients.resize(size_t(order) + 1);
  est.samples.resize(size_t(order) + 1);
  int max_levels = 0;
  for (int k = 0; k <= order; ++k) {
    Cplx mean{0.0, 0.0};
    bool all_converged = true;
    double spread = 0.0;
    std::vector<Cplx> values;
    RayEstimate central;
    for (double cot : cots) {
      const double theta = std::atan2(1.0, cot);  // in (0, pi)
      RayEstimate ray = estimate_along_ray(h, x, theta, k, cfg);
      all_converged = all_converged && ray.converged;
      values.push_back(ray.value);
      if (cot == 0.0) central = std::move(ray);
    }
    for (const auto& v : values) mean += v;
    mean /= double(values.size());
    for (const auto& v : values) spread = std::max(spread, std::abs(v - mean));
    auto& c = est.coefficients[size_t(k)];
    c.raw = mean;
    c.value = mean.real();
    c.converged =
        all_converged && spread <= 10.0 * cfg.conv_tol * std::max(1.0, std::abs(mean));
    c.levels_used = central.levels;
    c.growth_exponent = growth_slope(grid_levels(cfg, central.levels), central.samples);
    est.samples[size_t(k)] = std::move(central.samples);
    max_levels = std::max(max_levels, c.levels_used);
  }
  est.grid_y = grid_levels(cfg, max_levels);
  return est;
}

DivergenceReport detect_divergence(const FunctionHandle& h, double x, int k,
                                   const AnalyzerConfig& cfg) {
  DivergenceReport rep;
  // Half-decade steps from y = 1e-2 down to 1e-6.
  for (int i = 0; i <= 8; ++i) rep.grid_y.push_back(std::pow(10.0, -2.0 - 0.5 * i));
  for (double y : rep.grid_y) {
    const Cplx v = h.derivative(Cplx(x, y), k);
    if (!finite(v)) fail(Errc::EvaluationFailed, "handle evaluation not finite");
    rep.samples.push_back(v);
  }
  rep.first_magnitude = std::abs(rep.samples.front());
  rep.last_magnitude = std::abs(rep.samples.back());
  rep.monotone = true;
  for (size_t i = 1; i < rep.samples.size(); ++i)
    if (std::abs(rep.samples[i]) < 0.95 * std::abs(rep.samples[i - 1])) rep.monotone = false;
  const double tiny = 1e-300;
  const double ratio = rep.last_magnitude / std::max(rep.first_magnitude, tiny);
  const size_t m = rep.samples.size();
  const double settled_change = std::abs(rep.samples[m - 1] - rep.samples[m - 2]) /
                                std::max(std::abs(rep.samples[m - 1]), tiny);
  const bool settled = settled_change < 10.0 * cfg.conv_tol;
  rep.verdict = (ratio >= 2.0 && rep.monotone && !settled) ? LimitBehavior::Divergent
                                                           : LimitBehavior::Convergent;
  // Log-growth model fit for the report.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    const double xi = std::log(1.0 / rep.grid_y[i]);
    const double yi = std::abs(rep.samples[i]);
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  const double det = double(m) * sxx - sx * sx;
  rep.growth_slope = det == 0.0 ? 0.0 : (double(m) * sxy - sx * sy) / det;
  rep.growth_intercept = (sy - rep.growth_slope * sx) / double(m);
  return rep;
}

}  // namespace pickcf
