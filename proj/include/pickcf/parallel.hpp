// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_PARALLEL_HPP
#define PICKCF_PARALLEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace pickcf::par {

// Fixed chunk size so the summation tree is independent of the thread
// count: each chunk is summed serially in index order, chunk results are
// folded serially in chunk order. Parallel and serial runs are bit-identical.
inline constexpr std::int64_t kChunk = 4096;

template <class TermFn>
std::complex<double> sum_terms(std::int64_t n, TermFn&& term, bool parallel = true) {
  if (n <= 0) return {0.0, 0.0};
  const std::int64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::complex<double>> partial(static_cast<size_t>(chunks));
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = lo + kChunk < n ? lo + kChunk : n;
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t i = lo; i < hi; ++i) s += term(i);
    partial[size_t(c)] = s;
  }
  std::complex<double> total{0.0, 0.0};
  for (const auto& s : partial) total += s;
  return total;
}

/// Serial reference with the same chunked association (bit-identical to the
/// parallel kernel by construction; kept for testing and benchmarks).
template <class TermFn>
std::complex<double> sum_terms_serial(std::int64_t n, TermFn&& term) {
  return sum_terms(n, std::forward<TermFn>(term), /*parallel=*/false);
}

/// Evaluates fn(i) into a dense result vector; consumers reduce the vector
/// in index order, so any later fold is deterministic.
template <class T, class Fn>
std::vector<T> map_index(std::int64_t n, Fn&& fn, bool parallel = true) {
  std::vector<T> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) out[size_t(i)] = fn(i);
  return out;
}

}  // namespace pickcf::par

#endif
