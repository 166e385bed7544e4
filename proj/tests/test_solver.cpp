// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pickcf/errors.hpp"
#include "pickcf/julia.hpp"
#include "pickcf/solver.hpp"
#include "test_support.hpp"

using namespace pickcf;

namespace {

ProblemData pd(const std::vector<std::string>& a, const std::string& x = "0") {
  return ProblemData{rat_from_string(x), rv(a), std::nullopt, false};
}

RationalFunction rf(const std::vector<std::string>& num, const std::vector<std::string>& den) {
  return RationalFunction(Polynomial(rv(num)), Polynomial(rv(den)));
}

}  // namespace

TEST_CASE("solve_relaxed on odd data") {
  CHECK(solve_relaxed(pd({"0", "1", "2", "3"})).status == SolveStatus::NoSolution);
  CHECK(solve_relaxed(pd({"0", "1", "2", "4"})).status == SolveStatus::UniqueSolvable);
  CHECK(solve_relaxed(pd({"0", "1", "0", "1"})).status == SolveStatus::Indeterminate);
  CHECK_THROWS_WITH_AS(solve_relaxed(pd({"0", "1", "2"})), doctest::Contains("WrongParity"),
                       Error);
}

TEST_CASE("solve_cf fixtures") {
  const auto u = solve_cf(pd({"0", "1", "2", "4"}));
  CHECK(u.status == SolveStatus::UniqueSolvable);
  CHECK(u.expected_degree == 1);
  CHECK(u.se_minimal);

  CHECK(solve_cf(pd({"0", "1", "2", "3"})).status == SolveStatus::NoSolution);
  CHECK(solve_cf(pd({"0", "1", "0", "1"})).status == SolveStatus::Indeterminate);

  const auto even_good = solve_cf(pd({"0", "1", "2", "4", "8"}));
  CHECK(even_good.status == SolveStatus::UniqueSolvable);
  REQUIRE(even_good.corner.has_value());
  CHECK(even_good.corner->holds);
  CHECK(even_good.corner->rhs == Rat(8));

  const auto even_bad = solve_cf(pd({"0", "1", "2", "4", "7"}));
  CHECK(even_bad.status == SolveStatus::NoSolution);
  REQUIRE(even_bad.corner.has_value());
  CHECK_FALSE(even_bad.corner->holds);

  CHECK(solve_cf(pd({"0", "1", "0", "1", "0"})).status == SolveStatus::Indeterminate);
  CHECK(solve_cf(pd({"5"})).status == SolveStatus::Indeterminate);  // n = 0
  // n = 1 splits on the sign of a^1
  CHECK(solve_cf(pd({"2", "1"})).status == SolveStatus::Indeterminate);
  CHECK(solve_cf(pd({"2", "0"})).status == SolveStatus::UniqueSolvable);
  CHECK(solve_cf(pd({"2", "-1"})).status == SolveStatus::NoSolution);
}

TEST_CASE("construct_solution fixtures") {
  CHECK(construct_solution(pd({"0", "1", "0", "1"})) == rf({"0", "1"}, {"1", "0", "-1"}));
  CHECK(construct_solution(pd({"0", "1", "2", "4"})) == rf({"0", "1"}, {"1", "-2"}));
  CHECK(construct_solution(pd({"5"})) == RationalFunction::constant(5));
  CHECK_THROWS_WITH_AS(construct_solution(pd({"0", "1", "2", "3"})),
                       doctest::Contains("Unsolvable"), Error);
}

TEST_CASE("construct_solution soundness on fixtures") {
  for (const auto& data : {pd({"0", "1", "0", "1"}), pd({"0", "1", "2", "4"}),
                           pd({"0", "1", "2", "4", "8"}), pd({"0", "1", "0", "1", "0"}),
                           pd({"1", "2", "3"}), pd({"0", "0"}), pd({"-3"})}) {
    const auto f = construct_solution(data);
    CHECK(verify_solution(f, data).pass);
    CHECK(is_pick(f).pick);
  }
}

TEST_CASE("unique odd case: degree equals rank") {
  rng_t rng(31415);
  int checked = 0;
  while (checked < 40) {
    const auto h = random_pick_function(rng, 3);
    const int n = 3 + 2 * int(rng() % 3);  // odd
    ProblemData p{0, taylor_at(h, 0, n).coeffs(), std::nullopt, false};
    const auto v = solve_cf(p);
    if (v.status != SolveStatus::UniqueSolvable) {
      // tighten the corner to force SE-minimality
      p.a.back() = minimal_corner_value(build_hankel(p.a, v.m));
      const auto v2 = solve_cf(p);
      REQUIRE(v2.status == SolveStatus::UniqueSolvable);
      const auto f = construct_solution(p);
      CHECK(degree(f) == v2.rank);
      CHECK(verify_solution(f, p).pass);
      CHECK(is_pick(f).pick);
    } else {
      const auto f = construct_solution(p);
      CHECK(degree(f) == v.rank);
      CHECK(verify_solution(f, p).pass);
    }
    ++checked;
  }
}

TEST_CASE("generator closure: taylor data of Pick functions is always solvable") {
  rng_t rng(2718);
  for (int t = 0; t < 120; ++t) {
    const auto h = random_pick_function(rng, 4, true);
    const int n = int(rng() % 9);
    ProblemData p{0, taylor_at(h, 0, n).coeffs(), std::nullopt, false};
    const auto v = solve_cf(p);
    CHECK(v.status != SolveStatus::NoSolution);
    const auto f = construct_solution(p);
    const auto rep = verify_solution(f, p);
    CHECK(rep.pass);
    CHECK(is_pick(f).pick);
    // monotone relaxation on odd data
    if (n % 2 == 1) CHECK(solve_relaxed(p).status != SolveStatus::NoSolution);
  }
}

TEST_CASE("verdict consistency under PSD-breaking perturbations") {
  rng_t rng(1618);
  for (int t = 0; t < 80; ++t) {
    const auto h = random_pick_function(rng, 3);
    const int n = 1 + 2 * int(rng() % 3);
    ProblemData p{0, taylor_at(h, 0, n).coeffs(), std::nullopt, false};
    // drop the top coefficient below the minimal corner value: never solvable
    const auto hm = build_hankel(p.a, (n + 1) / 2);
    p.a.back() = minimal_corner_value(hm) - random_positive_rat(rng, 4);
    const auto v = solve_cf(p);
    CHECK(v.status == SolveStatus::NoSolution);
    CHECK_THROWS_AS((void)construct_solution(p), Error);
  }
}

TEST_CASE("relaxed construction tightens the top coefficient") {
  // (0,1,2,5): strict problem solvable? corner 5 > minimal 4 and H PD fails
  ProblemData strict = pd({"0", "1", "2", "5"});
  // det [[1,2],[2,5]] = 1 > 0: positive definite, so strict is indeterminate
  CHECK(solve_cf(strict).status == SolveStatus::Indeterminate);
  ProblemData relaxed = strict;
  relaxed.relaxed = true;
  const auto f = construct_solution(relaxed);
  CHECK(f == rf({"0", "1"}, {"1", "-2"}));  // tightened to (0,1,2,4)
  CHECK(verify_solution(f, relaxed).pass);
  // and the relaxed report accepts f_n <= a^n
  const auto rep = verify_solution(rf({"0", "1"}, {"1", "-2"}), relaxed);
  CHECK(rep.pass);
}

TEST_CASE("verify_solution") {
  CHECK(verify_solution(rf({"0", "1"}, {"1", "-2"}), pd({"0", "1", "2", "4"})).pass);
  const auto bad = verify_solution(rf({"0", "1"}, {"1"}), pd({"0", "1", "2", "4"}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_mismatch == 2);
  ProblemData relaxed = pd({"0", "1", "2", "5"});
  relaxed.relaxed = true;
  CHECK(verify_solution(rf({"0", "1"}, {"1", "-2"}), relaxed).pass);
  CHECK_THROWS_WITH_AS(verify_solution(rf({"1"}, {"0", "1"}), pd({"0"})),
                       doctest::Contains("PoleAtNode"), Error);
}

TEST_CASE("solve_laurent") {
  ProblemData p = pd({"0", "1"});
  p.a_minus1 = Rat(-1);
  const auto [v, f] = solve_laurent(p);
  CHECK(v.solvable());
  REQUIRE(f.has_value());
  CHECK(*f == rf({"-1", "0", "1"}, {"0", "1"}));  // z - 1/z
  CHECK(is_pick(*f).pick);
  const auto le = laurent_at(*f, 0, 1);
  CHECK(le.a_minus1 == Rat(-1));
  CHECK(le.tail.coeffs() == rv({"0", "1"}));

  ProblemData rejected = pd({"0", "1", "2", "4"});
  rejected.a_minus1 = Rat(1);
  const auto [vr, fr] = solve_laurent(rejected);
  CHECK(vr.status == SolveStatus::NoSolution);
  CHECK(vr.laurent_rejected);
  CHECK_FALSE(fr.has_value());

  ProblemData zero = pd({"0", "1", "2", "4"});
  zero.a_minus1 = Rat(0);
  const auto [vz, fz] = solve_laurent(zero);
  CHECK(vz.status == solve_cf(pd({"0", "1", "2", "4"})).status);
  REQUIRE(fz.has_value());
  CHECK(*fz == construct_solution(pd({"0", "1", "2", "4"})));

  ProblemData bad = pd({"0", "0", "1"});
  bad.a_minus1 = Rat(-1);
  CHECK_THROWS_WITH_AS(solve_laurent(bad), doctest::Contains("InvalidDerivative"), Error);
}

TEST_CASE("even PD case admits a solution through the recursion") {
  // indeterminate even-n data: check the produced function solves it
  for (const auto& data : {pd({"0", "1", "0"}), pd({"1", "2", "0", "1", "5"})}) {
    CHECK(solve_cf(data).status == SolveStatus::Indeterminate);
    const auto f = construct_solution(data);
    CHECK(verify_solution(f, data).pass);
    CHECK(is_pick(f).pick);
  }
}
