// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_JSON_IO_HPP
#define PICKCF_JSON_IO_HPP

#include <json.hpp>

#include "pickcf/analyzer.hpp"
#include "pickcf/hankel.hpp"
#include "pickcf/ratfun.hpp"
#include "pickcf/series.hpp"
#include "pickcf/solver.hpp"

namespace pickcf {

// Insertion-ordered JSON keeps CLI output byte-stable across runs.
using Json = nlohmann::ordered_json;

// Exact scalars travel as canonical "p/q" strings ("/1" omitted); floats
// appear only in analyzer reports.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
Json hankel_to_json(const HankelMatrix& h);
/// Accepts an array of arrays; validates squareness and Hankel symmetry.
HankelMatrix hankel_from_json(const Json& j);

Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

Json function_to_json(const RationalFunction& f);
RationalFunction function_from_json(const Json& j);

Json problem_to_json(const ProblemData& p);
ProblemData problem_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json pick_certificate_to_json(const PickCertificate& c);
Json verification_to_json(const VerificationReport& r, const ProblemData& p);

Json expansion_to_json(const ExpansionEstimate& e);
Json divergence_to_json(const DivergenceReport& d);

}  // namespace pickcf

#endif
