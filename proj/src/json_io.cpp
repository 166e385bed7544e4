// SPDX-License-Identifier: Apache-2.0
#include "pickcf/json_io.hpp"

#include "pickcf/errors.hpp"

namespace pickcf {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) fail(Errc::BadInput, "rational scalars must be \"p/q\" strings");
  return rat_from_string(j.get<std::string>());
}

namespace {

std::vector<Rat> rat_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(Errc::BadInput, std::string(what) + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat_to_json(r));
  return a;
}

}  // namespace

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json hankel_to_json(const HankelMatrix& h) { return matrix_to_json(h.to_matrix()); }

HankelMatrix hankel_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::BadInput, "matrix must be an array of arrays");
  const int m = int(j.size());
  if (m == 0) return HankelMatrix(0, {});
  std::vector<Rat> diag(size_t(2 * m - 1));
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : j) rows.push_back(rat_vector_from_json(r, "matrix row"));
  for (const auto& r : rows)
    if (int(r.size()) != m) fail(Errc::BadInput, "matrix must be square");
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      diag[size_t(i + k)] = rows[size_t(i)][size_t(k)];
      if (rows[size_t(i)][size_t(k)] != rows[size_t(k)][size_t(i)] ||
          (i + 1 < m && k > 0 && rows[size_t(i)][size_t(k)] != rows[size_t(i) + 1][size_t(k) - 1]))
        fail(Errc::BadInput, "matrix entries violate Hankel symmetry");
    }
  return HankelMatrix(m, std::move(diag));
}

Json series_to_json(const PowerSeries& s) {
  Json j;
  j["center"] = rat_to_json(s.center());
  j["order"] = s.order();
  j["coeffs"] = rat_vector_to_json(s.coeffs());
  return j;
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("coeffs"))
    fail(Errc::BadInput, "series needs center and coeffs");
  PowerSeries s(rat_from_json(j.at("center")), rat_vector_from_json(j.at("coeffs"), "coeffs"));
  if (j.contains("order") && j.at("order").get<int>() != s.order())
    fail(Errc::BadInput, "declared order disagrees with coefficient count");
  return s;
}

Json function_to_json(const RationalFunction& f) {
  Json j;
  j["num"] = rat_vector_to_json(f.num().coeffs());
  j["den"] = rat_vector_to_json(f.den().coeffs());
  return j;
}

RationalFunction function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(Errc::BadInput, "function needs num and den arrays");
  return RationalFunction(Polynomial(rat_vector_from_json(j.at("num"), "num")),
                          Polynomial(rat_vector_from_json(j.at("den"), "den")));
}

Json problem_to_json(const ProblemData& p) {
  Json j;
  j["x"] = rat_to_json(p.x);
  j["a"] = rat_vector_to_json(p.a);
  if (p.a_minus1) j["a_minus1"] = rat_to_json(*p.a_minus1);
  if (p.relaxed) j["relaxed"] = true;
  return j;
}

ProblemData problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("a"))
    fail(Errc::BadInput, "problem needs x and a");
  ProblemData p;
  p.x = rat_from_json(j.at("x"));
  p.a = rat_vector_from_json(j.at("a"), "a");
  if (p.a.empty()) fail(Errc::BadInput, "coefficient list a must be nonempty");
  if (j.contains("a_minus1")) p.a_minus1 = rat_from_json(j.at("a_minus1"));
  if (j.contains("relaxed")) {
    if (!j.at("relaxed").is_boolean()) fail(Errc::BadInput, "relaxed must be a boolean");
    p.relaxed = j.at("relaxed").get<bool>();
  }
  return p;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["m"] = v.m;
  j["inertia"] = Json::array({v.hankel_inertia.n_pos, v.hankel_inertia.n_neg,
                              v.hankel_inertia.n_zero});
  j["rank"] = v.rank;
  j["se_minimal"] = v.se_minimal;
  j["positive_definite"] = v.positive_definite;
  if (v.corner) {
    j["corner_identity"] = Json{{"holds", v.corner->holds}, {"rhs", rat_to_json(v.corner->rhs)}};
  }
  if (v.expected_degree) j["expected_degree"] = *v.expected_degree;
  if (v.laurent_rejected) j["laurent_rejected"] = true;
  return j;
}

Json pick_certificate_to_json(const PickCertificate& c) {
  Json j;
  j["pick"] = c.pick;
  j["bezoutian_inertia"] = Json::array(
      {c.bezoutian_inertia.n_pos, c.bezoutian_inertia.n_neg, c.bezoutian_inertia.n_zero});
  if (c.witness)
    j["witness"] = Json::array({c.witness->real(), c.witness->imag()});
  else
    j["witness"] = nullptr;
  return j;
}

Json verification_to_json(const VerificationReport& r, const ProblemData& p) {
  Json j;
  j["pass"] = r.pass;
  Json rows = Json::array();
  for (size_t k = 0; k < r.achieved.size(); ++k) {
    rows.push_back(Json{{"k", k},
                        {"target", rat_to_json(p.a[k])},
                        {"achieved", rat_to_json(r.achieved[k])}});
  }
  j["coefficients"] = std::move(rows);
  if (r.first_mismatch)
    j["first_mismatch"] = *r.first_mismatch;
  else
    j["first_mismatch"] = nullptr;
  return j;
}

Json expansion_to_json(const ExpansionEstimate& e) {
  Json j;
  Json coeffs = Json::array();
  for (size_t k = 0; k < e.coefficients.size(); ++k) {
    const auto& c = e.coefficients[k];
    coeffs.push_back(Json{{"k", k},
                          {"estimate", c.value},
                          {"converged", c.converged},
                          {"growth_exponent", c.growth_exponent},
                          {"levels_used", c.levels_used}});
  }
  j["coefficients"] = std::move(coeffs);
  j["grid"] = Json{{"levels", e.grid_y.size()},
                   {"y_first", e.grid_y.empty() ? 0.0 : e.grid_y.front()},
                   {"y_last", e.grid_y.empty() ? 0.0 : e.grid_y.back()}};
  return j;
}

Json divergence_to_json(const DivergenceReport& d) {
  Json j;
  j["verdict"] = d.verdict == LimitBehavior::Divergent ? "Divergent" : "Convergent";
  j["growth_slope"] = d.growth_slope;
  j["growth_intercept"] = d.growth_intercept;
  j["first_magnitude"] = d.first_magnitude;
  j["last_magnitude"] = d.last_magnitude;
  j["monotone"] = d.monotone;
  return j;
}

}  // namespace pickcf
