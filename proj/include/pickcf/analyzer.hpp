// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_ANALYZER_HPP
#define PICKCF_ANALYZER_HPP

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "pickcf/ratfun.hpp"

namespace pickcf {

using Cplx = std::complex<double>;

/// Evaluation handle for a function analytic on the upper half-plane.
/// derivative(z, k) returns f^{(k)}(z)/k!. Handles built by the bank carry
/// termwise closed-form derivatives; make_handle falls back to Cauchy-
/// integral differentiation on the circle of radius Im(z)/2 about z.
struct FunctionHandle {
  std::string label;
  std::function<Cplx(Cplx)> evaluator;
  std::function<Cplx(Cplx, int)> derivative;
};

struct AnalyzerConfig {
  double y0 = 0.1;               // first radial grid level; y_j = y0 * 2^-j
  int grid_depth = 20;           // j = 0..grid_depth
  double conv_tol = 1e-6;        // relative settling tolerance, last three levels
  double tail_tol = 1e-12;       // truncation bound for bank series evaluation
  double divergence_tail_tol = 1e-8;  // looser bound on the divergence path
  std::int64_t kmax_cap = 200'000'000;  // series terms per evaluation, hard cap
  int cauchy_nodes = 64;         // trapezoid nodes for fallback differentiation
  bool parallel = true;
};

struct CoefficientEstimate {
  double value = 0.0;            // real part of the extrapolated limit
  bool converged = false;
  double growth_exponent = 0.0;  // fitted slope of |estimate| against log(1/y)
  Cplx raw;                      // last extrapolated complex value
  int levels_used = 0;
};

struct ExpansionEstimate {
  std::vector<CoefficientEstimate> coefficients;  // index k = 0..order
  // grid metadata + raw samples (y, f^{(k)}(x+iy)/k!) for reports and CSV
  std::vector<double> grid_y;
  std::vector<std::vector<Cplx>> samples;  // samples[k][j] at grid_y[j]
};

/// Radial limits lim_{y->0+} f^{(k)}(x+iy)/k! for k <= order, estimated on
/// the geometric grid with two levels of Richardson extrapolation. Grid
/// levels are evaluated lazily until every coefficient settles (or the grid
/// or the term cap is exhausted). EvaluationFailed on overflow or pole.
ExpansionEstimate radial_coefficients(const FunctionHandle& h, double x, int order,
                                      const AnalyzerConfig& cfg = {});

/// Same estimates along the nontangential rays x + r e^{i theta} with
/// |cot theta| <= sqrt(K^2-1) (five rays through the aperture-K Stolz
/// region, aggregated by cross-ray agreement). Requires K >= 1.
ExpansionEstimate nontangential_coefficients(const FunctionHandle& h, double x, int order,
                                             double aperture, const AnalyzerConfig& cfg = {});

enum class LimitBehavior { Convergent, Divergent };

struct DivergenceReport {
  LimitBehavior verdict = LimitBehavior::Convergent;
  double growth_slope = 0.0;      // A in |f^{(k)}/k!| ~ A log(1/y) + B
  double growth_intercept = 0.0;
  double first_magnitude = 0.0;   // at y = 1e-2
  double last_magnitude = 0.0;    // at y = 1e-6
  bool monotone = false;
  std::vector<double> grid_y;
  std::vector<Cplx> samples;
};

/// Grows-without-settling test for f^{(k)}(x+iy)/k! over y in [1e-6, 1e-2]:
/// Divergent when the magnitude increases monotonically by a factor >= 2
/// across the grid and the sequence has not settled.
DivergenceReport detect_divergence(const FunctionHandle& h, double x, int k,
                                   const AnalyzerConfig& cfg = {});

/// Handles for the example bank:
///   ex_2_1            z / (1 - z log z), principal branch
///   ex_2_2 (nu >= 4)  -sum_k 1/(k^nu z + k^{nu-1}), InvalidParameter below 4
///   ex_2_3            -(1/e) sum_k 1/(k! (z + 1/k))
/// Bank series are summed to an adaptive k_max with the truncation bound
/// below cfg.tail_tol at each evaluation point.
FunctionHandle example_bank(const std::string& id, int nu = 0, const AnalyzerConfig& cfg = {});

/// Handle over a rational function (exact closed-form derivatives via
/// repeated differentiation of num/den).
FunctionHandle make_rational_handle(const RationalFunction& f);

/// Handle over a plain evaluator; derivatives fall back to Cauchy-integral
/// differentiation.
FunctionHandle make_handle(std::string label, std::function<Cplx(Cplx)> evaluator,
                           const AnalyzerConfig& cfg = {});

/// A_0 = 1, A_{n+1} = 2 A_n + sum_{r=1}^n C(n,r) A_{n-r}; the signed
/// sequence (-1)^{n+1} A_n gives the expansion coefficients of ex_2_3.
mpz_class an_coefficient(int n);

}  // namespace pickcf

#endif
