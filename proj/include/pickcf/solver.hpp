// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_SOLVER_HPP
#define PICKCF_SOLVER_HPP

#include <optional>
#include <vector>

#include "pickcf/hankel.hpp"
#include "pickcf/ratfun.hpp"
#include "pickcf/rational.hpp"

namespace pickcf {

/// Boundary interpolation data: node x and target coefficients a^0..a^n,
/// optionally extended by the (-1)th Laurent coefficient, optionally with
/// the top condition relaxed to an inequality f_n <= a^n.
struct ProblemData {
  Rat x;
  std::vector<Rat> a;                // a^0..a^n, n = a.size()-1 >= 0
  std::optional<Rat> a_minus1;       // prescribed residue at x
  bool relaxed = false;

  int n() const noexcept { return int(a.size()) - 1; }
};

enum class SolveStatus { NoSolution, UniqueSolvable, Indeterminate };

const char* status_name(SolveStatus s) noexcept;

/// Solvability verdict with its positivity certificate. m = ceil(n/2) is
/// the dimension of the governing Hankel matrix H_m(a).
struct Verdict {
  SolveStatus status = SolveStatus::NoSolution;
  int m = 0;
  Inertia hankel_inertia;
  int rank = 0;
  bool se_minimal = false;
  bool positive_definite = false;
  std::optional<CornerIdentity> corner;      // even n only
  std::optional<int> expected_degree;        // rank H_m(a) when unique
  bool laurent_rejected = false;             // a^{-1} > 0 ruled the problem out

  bool solvable() const noexcept { return status != SolveStatus::NoSolution; }
};

/// Relaxed problem, stated for odd n = 2m-1 (WrongParity otherwise):
/// solvable iff H_m(a) is PSD, uniquely iff PSD and singular.
Verdict solve_relaxed(const ProblemData& p);

/// Strict problem, any n >= 0. Odd n = 2m-1: indeterminate iff H_m(a) is
/// positive definite, uniquely solvable iff SE-minimally positive, no
/// solution otherwise. Even n = 2m: the same with the corner identity on
/// a^{2m} required in the SE-minimal case. n = 0 is indeterminate.
Verdict solve_cf(const ProblemData& p);

/// Explicit rational solution by recursive reduction of the data to order
/// n-2 and augmentation of the sub-solution, bottoming out at a constant or
/// affine function. Unsolvable when the verdict is NoSolution. For relaxed
/// problems the top coefficient is first tightened to the minimal value the
/// PSD cone admits.
RationalFunction construct_solution(const ProblemData& p);

/// Laurent-extended problem: requires a^1 > 0 (InvalidDerivative). Not
/// solvable when a^{-1} > 0; otherwise the base verdict applies and the
/// solution is the base solution plus a^{-1}/(z - x).
std::pair<Verdict, std::optional<RationalFunction>> solve_laurent(const ProblemData& p);

struct VerificationReport {
  bool pass = false;
  std::optional<int> first_mismatch;   // coefficient index of the first failure;
                                       // -1 marks the Laurent coefficient slot
  std::vector<Rat> achieved;           // Taylor coefficients of the candidate
  std::optional<Rat> achieved_a_minus1;  // residue at x, Laurent problems only
};

/// Exact check of a candidate against the data: equality for k < n and
/// (relaxed ? f_n <= a^n : f_n = a^n) at the top. When the problem carries a
/// nonzero a^{-1} the candidate is expanded by laurent_at and the residue is
/// checked too; otherwise a pole at x is an error (PoleAtNode).
VerificationReport verify_solution(const RationalFunction& f, const ProblemData& p);

}  // namespace pickcf

#endif
