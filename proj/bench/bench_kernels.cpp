// SPDX-License-Identifier: Apache-2.0
//
// Compares the OpenMP grid kernels against their serial references:
//   - chunked series summation (ex_2_2 evaluation)
//   - falsifier mesh sweep
// Both pairs produce bit-identical results by construction; this target
// reports wall-clock speedup.

#include <chrono>
#include <complex>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pickcf/analyzer.hpp"
#include "pickcf/parallel.hpp"
#include "pickcf/ratfun.hpp"

using namespace pickcf;

namespace {

double seconds(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_series_sum() {
  const Cplx z{0.0, 1e-5};
  for (int nu : {5, 6}) {
    for (int j : {0, 3}) {
      auto term = [nu, j, z](std::int64_t i) {
        const double k = double(i + 1);
        Cplx p{1.0, 0.0};
        for (int e = 0; e < j + 1; ++e) p *= z + 1.0 / k;
        double kp = 1.0;
        for (int e = 0; e < nu; ++e) kp *= k;
        return 1.0 / (kp * p);
      };
      const std::int64_t n = 20'000'000;
      Cplx serial_v, parallel_v;
      const double ts = seconds([&] { serial_v = par::sum_terms_serial(n, term); });
      const double tp = seconds([&] { parallel_v = par::sum_terms(n, term); });
      const bool identical =
          serial_v.real() == parallel_v.real() && serial_v.imag() == parallel_v.imag();
      std::printf("series nu=%d j=%d n=%lld  serial %.3fs  parallel %.3fs  x%.2f  %s\n", nu, j,
                  (long long)n, ts, tp, ts / tp, identical ? "bit-identical" : "MISMATCH");
    }
  }
}

void bench_falsifier() {
  // a Pick function: no witness exists, so the sweep visits the whole mesh
  // plus every refinement level
  const RationalFunction f(Polynomial(rats_from_strings({"-1", "3", "1"})),
                           Polynomial(rats_from_strings({"3", "1"})));
  FalsifierConfig cfg;
  cfg.n_r = 256;
  cfg.n_theta = 256;
  std::optional<std::complex<double>> a, b;
  const double ts = seconds([&] { b = find_nonpick_witness_serial(f, cfg); });
  const double tp = seconds([&] { a = find_nonpick_witness(f, cfg); });
  const bool identical = a.has_value() == b.has_value() &&
                         (!a || (a->real() == b->real() && a->imag() == b->imag()));
  std::printf("falsifier 256x256 mesh     serial %.3fs  parallel %.3fs  x%.2f  %s\n", ts, tp,
              ts / tp, identical ? "bit-identical" : "MISMATCH");
}

void bench_radial() {
  AnalyzerConfig serial_cfg, parallel_cfg;
  serial_cfg.parallel = false;
  serial_cfg.grid_depth = parallel_cfg.grid_depth = 14;
  double ts = 0, tp = 0;
  ExpansionEstimate es, ep;
  ts = seconds([&] { es = radial_coefficients(example_bank("ex_2_2", 6, serial_cfg), 0.0, 2,
                                              serial_cfg); });
  tp = seconds([&] { ep = radial_coefficients(example_bank("ex_2_2", 6, parallel_cfg), 0.0, 2,
                                              parallel_cfg); });
  bool identical = true;
  for (size_t k = 0; k < es.coefficients.size(); ++k)
    identical = identical && es.coefficients[k].value == ep.coefficients[k].value;
  std::printf("radial ex_2_2 nu=6 N=2     serial %.3fs  parallel %.3fs  x%.2f  %s\n", ts, tp,
              ts / tp, identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; comparing identical serial paths\n");
#endif
  bench_series_sum();
  bench_falsifier();
  bench_radial();
  return 0;
}
