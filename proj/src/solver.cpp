// SPDX-License-Identifier: Apache-2.0
#include "pickcf/solver.hpp"

#include <cassert>

#include "pickcf/errors.hpp"
#include "pickcf/julia.hpp"
#include "pickcf/series.hpp"

namespace pickcf {

const char* status_name(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::NoSolution: return "NoSolution";
    case SolveStatus::UniqueSolvable: return "UniqueSolvable";
    case SolveStatus::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

namespace {

Verdict base_certificate(const ProblemData& p) {
  Verdict v;
  v.m = (p.n() + 1) / 2;  // ceil(n/2); governs both parities
  const HankelMatrix h = build_hankel(p.a, v.m);
  v.hankel_inertia = inertia(h);
  v.rank = v.hankel_inertia.rank();
  v.positive_definite = v.hankel_inertia.is_pd();  // vacuously true for m = 0
  v.se_minimal = is_se_minimally_positive(h);
  return v;
}

}  // namespace

Verdict solve_relaxed(const ProblemData& p) {
  const int n = p.n();
  if (n % 2 == 0) fail(Errc::WrongParity, "relaxed problem is stated for odd n");
  Verdict v = base_certificate(p);
  if (!v.hankel_inertia.is_psd()) {
    v.status = SolveStatus::NoSolution;
  } else if (v.positive_definite) {
    v.status = SolveStatus::Indeterminate;
  } else {
    v.status = SolveStatus::UniqueSolvable;  // positive and singular
    v.expected_degree = v.rank;
  }
  return v;
}

Verdict solve_cf(const ProblemData& p) {
  const int n = p.n();
  Verdict v = base_certificate(p);
  if (n % 2 == 1) {
    if (v.positive_definite) {
      v.status = SolveStatus::Indeterminate;
    } else if (v.se_minimal) {
      v.status = SolveStatus::UniqueSolvable;
      v.expected_degree = v.rank;
    } else {
      v.status = SolveStatus::NoSolution;
    }
    return v;
  }
  // Even n = 2m (n = 0 falls out as the empty positive definite matrix).
  if (v.positive_definite) {
    v.status = SolveStatus::Indeterminate;
    return v;
  }
  if (v.se_minimal) {
    v.corner = even_corner_identity(p.a);
    if (v.corner->holds) {
      v.status = SolveStatus::UniqueSolvable;
      v.expected_degree = v.rank;
      return v;
    }
  }
  v.status = SolveStatus::NoSolution;
  return v;
}

namespace {

RationalFunction construct_strict(const Rat& x, const std::vector<Rat>& a) {
  ProblemData sub{x, a, std::nullopt, false};
  const Verdict v = solve_cf(sub);
  if (!v.solvable()) fail(Errc::Unsolvable, "no solution exists for the given data");
  const int n = int(a.size()) - 1;
  if (n == 0) return RationalFunction::constant(a[0]);
  if (sgn(a[1]) == 0) {
    // Solvability with a^1 = 0 forces every higher target to vanish, and the
    // constant is the unique solution.
    return RationalFunction::constant(a[0]);
  }
  if (n == 1)
    return RationalFunction(Polynomial({a[0] - a[1] * x, a[1]}), Polynomial::constant(1));
  const PowerSeries reduced = reduce_series(PowerSeries(x, a));
  const RationalFunction g = construct_strict(x, reduced.coeffs());
  return augment_rational(g, x, a[0], a[1]);
}

}  // namespace

RationalFunction construct_solution(const ProblemData& p) {
  if (!p.relaxed) return construct_strict(p.x, p.a);
  const Verdict v = solve_relaxed(p);  // WrongParity for even n
  if (!v.solvable()) fail(Errc::Unsolvable, "relaxed problem has no solution");
  // Tightening the top coefficient to the smallest PSD-compatible value
  // turns the data SE-minimal; the strict recursion then applies and the
  // result satisfies f_n <= a^n.
  std::vector<Rat> tightened = p.a;
  tightened.back() = minimal_corner_value(build_hankel(p.a, v.m));
  return construct_strict(p.x, tightened);
}

std::pair<Verdict, std::optional<RationalFunction>> solve_laurent(const ProblemData& p) {
  if (!p.a_minus1) fail(Errc::BadInput, "Laurent problem needs a^{-1}");
  if (p.n() < 1 || sgn(p.a[1]) <= 0)
    fail(Errc::InvalidDerivative, "Laurent-extended problem requires a^1 > 0");
  ProblemData base = p;
  base.a_minus1.reset();
  if (sgn(*p.a_minus1) > 0) {
    Verdict v = base_certificate(base);
    v.status = SolveStatus::NoSolution;
    v.laurent_rejected = true;
    return {v, std::nullopt};
  }
  Verdict v = p.relaxed ? solve_relaxed(base) : solve_cf(base);
  if (!v.solvable()) return {v, std::nullopt};
  const RationalFunction big_f = construct_solution(base);
  const RationalFunction pole(Polynomial::constant(*p.a_minus1),
                              Polynomial::linear_root(p.x));
  return {v, big_f + pole};
}

VerificationReport verify_solution(const RationalFunction& f, const ProblemData& p) {
  const int n = p.n();
  VerificationReport rep;
  if (p.a_minus1 && sgn(*p.a_minus1) != 0) {
    const LaurentExpansion le = laurent_at(f, p.x, n);
    rep.achieved_a_minus1 = le.a_minus1;
    rep.achieved = le.tail.coeffs();
    if (le.a_minus1 != *p.a_minus1) {
      rep.pass = false;
      rep.first_mismatch = -1;
      return rep;
    }
  } else {
    if (sgn(f.den().eval(p.x)) == 0) fail(Errc::PoleAtNode, "candidate has a pole at the node");
    rep.achieved = taylor_at(f, p.x, n).coeffs();
  }
  rep.pass = true;
  for (int k = 0; k <= n; ++k) {
    const bool ok = (p.relaxed && k == n) ? rep.achieved[size_t(k)] <= p.a[size_t(k)]
                                          : rep.achieved[size_t(k)] == p.a[size_t(k)];
    if (!ok) {
      rep.pass = false;
      rep.first_mismatch = k;
      break;
    }
  }
  return rep;
}

}  // namespace pickcf
