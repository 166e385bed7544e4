// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pickcf/errors.hpp"
#include "pickcf/json_io.hpp"
#include "test_support.hpp"

using namespace pickcf;

TEST_CASE("rational strings are canonical p/q") {
  CHECK(rat_to_string(rat_from_string("2/4")) == "1/2");
  CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
  CHECK(rat_to_string(rat_from_string("3/-4")) == "-3/4");  // sign moves to the numerator
  CHECK(rat_to_string(rat_from_string("7/1")) == "7");
  CHECK_THROWS_WITH_AS(rat_from_string("1/0"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(rat_from_string("x"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(rat_from_string(""), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(rat_from_string("1.5"), doctest::Contains("BadInput"), Error);
}

TEST_CASE("round trips preserve values") {
  rng_t rng(99);
  for (int t = 0; t < 50; ++t) {
    // series
    std::vector<Rat> c(1 + rng() % 6);
    for (auto& v : c) v = random_rat(rng, 9);
    const PowerSeries s(random_rat(rng, 5), c);
    CHECK(series_from_json(series_to_json(s)) == s);
    // function (canonical both ways)
    const auto f = random_pick_function(rng, 3, true);
    CHECK(function_from_json(function_to_json(f)) == f);
    // problem
    ProblemData p{random_rat(rng, 3), c, std::nullopt, bool(rng() % 2)};
    if (rng() % 2) p.a_minus1 = random_rat(rng, 3);
    const auto q = problem_from_json(problem_to_json(p));
    CHECK(q.x == p.x);
    CHECK(q.a == p.a);
    CHECK(q.a_minus1 == p.a_minus1);
    CHECK(q.relaxed == p.relaxed);
  }
}

TEST_CASE("hankel json validates structure") {
  const auto h = build_hankel(rv({"0", "1", "2", "4"}), 2);
  const auto j = hankel_to_json(h);
  CHECK(j.dump() == R"([["1","2"],["2","4"]])");
  CHECK(hankel_from_json(j) == h);
  CHECK_THROWS_WITH_AS(hankel_from_json(Json::parse(R"([["1","2"],["3","4"]])")),
                       doctest::Contains("Hankel"), Error);
  CHECK_THROWS_WITH_AS(hankel_from_json(Json::parse(R"([["1","2"]])")),
                       doctest::Contains("square"), Error);
}

TEST_CASE("problem parsing rejects malformed input") {
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"x":"0"})")), Error);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"x":"0","a":[]})")), Error);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"x":"0","a":[1,2]})")), Error);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"x":"0","a":["1"],"relaxed":"yes"})")),
                  Error);
}

TEST_CASE("fixture problems parse as in the interface examples") {
  const auto p = problem_from_json(Json::parse(R"({"x":"0","a":["0","1","2","4"]})"));
  CHECK(p.x == 0);
  CHECK(p.a == rv({"0", "1", "2", "4"}));
  CHECK_FALSE(p.relaxed);
  CHECK_FALSE(p.a_minus1.has_value());
}
