// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_RATIONAL_HPP
#define PICKCF_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace pickcf {

/// Exact rational scalar. All solver-side arithmetic stays in this type;
/// doubles appear only at the analyzer/falsifier boundary.
using Rat = mpq_class;

/// Parses "p/q" or "p" (base 10). Throws Error(BadInput) on malformed input
/// or zero denominator. The result is canonical (q > 0, gcd(p,q) = 1).
Rat rat_from_string(const std::string& s);

/// Canonical decimal form; "/1" is omitted for integers.
std::string rat_to_string(const Rat& r);

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::complex<double> to_complex(const Rat& r) { return {r.get_d(), 0.0}; }

std::vector<Rat> rats_from_strings(const std::vector<std::string>& ss);
std::vector<std::string> rats_to_strings(const std::vector<Rat>& rs);

}  // namespace pickcf

#endif
