// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "pickcf/analyzer.hpp"
#include "pickcf/errors.hpp"
#include "pickcf/parallel.hpp"
#include "test_support.hpp"

using namespace pickcf;

namespace {

RationalFunction rf(const std::vector<std::string>& num, const std::vector<std::string>& den) {
  return RationalFunction(Polynomial(rv(num)), Polynomial(rv(den)));
}

constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;
constexpr double kZeta4 = 1.0823232337111382;
constexpr double kZeta5 = 1.0369277551433699;

}  // namespace

TEST_CASE("an_coefficient recurrence") {
  CHECK(an_coefficient(0) == 1);
  CHECK(an_coefficient(1) == 2);
  CHECK(an_coefficient(2) == 5);
  CHECK(an_coefficient(3) == 15);
  CHECK(an_coefficient(4) == 52);
  CHECK(an_coefficient(5) == 203);
}

TEST_CASE("deterministic chunked sum: parallel equals serial bit for bit") {
  auto term = [](std::int64_t i) {
    const double k = double(i + 1);
    return Cplx{1.0 / (k * k), 1.0 / (k * k * k)};
  };
  for (std::int64_t n : {1ll, 100ll, 4096ll, 4097ll, 1000000ll}) {
    const Cplx a = par::sum_terms(n, term, true);
    const Cplx b = par::sum_terms_serial(n, term);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
  // plain left-to-right sum agrees to rounding
  Cplx plain{0, 0};
  for (std::int64_t i = 0; i < 1000000; ++i) plain += term(i);
  CHECK(std::abs(par::sum_terms(1000000, term, true) - plain) < 1e-10);
}

TEST_CASE("rational handle: exact derivatives vs Cauchy fallback") {
  const auto f = rf({"0", "1"}, {"1", "-2"});  // z/(1-2z)
  const auto exact = make_rational_handle(f);
  const auto generic = make_handle("generic", [f](Cplx z) { return eval(f, z); });
  const Cplx z{0.05, 0.2};
  for (int k = 0; k <= 5; ++k) {
    const Cplx a = exact.derivative(z, k);
    const Cplx b = generic.derivative(z, k);
    CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("radial_coefficients on rational oracles") {
  const auto h = make_rational_handle(rf({"0", "1"}, {"1", "-2"}));
  const auto est = radial_coefficients(h, 0.0, 3);
  const double expected[4] = {0, 1, 2, 4};
  for (int k = 0; k <= 3; ++k) {
    CHECK(est.coefficients[size_t(k)].converged);
    CHECK(est.coefficients[size_t(k)].value == doctest::Approx(expected[k]).epsilon(1e-8));
  }
}

TEST_CASE("nontangential_coefficients on rational oracles") {
  const auto h = make_rational_handle(rf({"0", "1"}, {"1", "0", "-1"}));  // z/(1-z^2)
  const auto est = nontangential_coefficients(h, 0.0, 3, 2.0);
  const double expected[4] = {0, 1, 0, 1};
  for (int k = 0; k <= 3; ++k) {
    CHECK(est.coefficients[size_t(k)].converged);
    CHECK(est.coefficients[size_t(k)].value == doctest::Approx(expected[k]).epsilon(1e-8));
  }
  const auto c5 = nontangential_coefficients(make_handle("const", [](Cplx) {
                                               return Cplx{5.0, 0.0};
                                             }),
                                             0.0, 2, 4.0);
  CHECK(c5.coefficients[0].value == doctest::Approx(5.0));
  CHECK(c5.coefficients[1].value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_THROWS_WITH_AS(nontangential_coefficients(make_rational_handle(rf({"0", "1"}, {"1"})),
                                                  0.0, 1, 0.5),
                       doctest::Contains("InvalidParameter"), Error);
}

TEST_CASE("example bank evaluations at z = i") {
  const Cplx i{0.0, 1.0};
  const auto e1 = example_bank("ex_2_1");
  // i / (1 - i log i) = i / (1 + pi/2)
  CHECK(std::abs(e1.evaluator(i) - i / (1.0 + M_PI / 2.0)) < 1e-12);
  CHECK(e1.evaluator(i).imag() >= 0);

  const auto e2 = example_bank("ex_2_2", 5);
  CHECK(std::abs(e2.evaluator(i)) <= kZeta4 + 1e-9);  // termwise modulus bound sum 1/k^4
  CHECK(e2.evaluator(i).imag() >= 0);

  const auto e3 = example_bank("ex_2_3");
  CHECK(e3.evaluator(i).imag() >= 0);
  CHECK(std::abs(e3.evaluator(i)) < 1.0);

  CHECK_THROWS_WITH_AS(example_bank("ex_2_2", 3), doctest::Contains("InvalidParameter"), Error);
  CHECK_THROWS_WITH_AS(example_bank("nope"), doctest::Contains("InvalidParameter"), Error);
}

TEST_CASE("bank handles satisfy Im f >= 0 on a sample grid") {
  for (const auto& h : {example_bank("ex_2_1"), example_bank("ex_2_2", 4),
                        example_bank("ex_2_2", 6), example_bank("ex_2_3")}) {
    for (double r : {1e-3, 0.1, 1.0, 10.0}) {
      for (int it = 1; it < 8; ++it) {
        const double th = M_PI * it / 8.0;
        const Cplx z = std::polar(r, th);
        CHECK(h.evaluator(z).imag() >= -1e-12);
      }
    }
  }
}

TEST_CASE("ex_2_3 radial estimates match the signed recurrence") {
  const auto h = example_bank("ex_2_3");
  const auto est = radial_coefficients(h, 0.0, 4);
  for (int n = 0; n <= 4; ++n) {
    const double expected =
        (n % 2 == 0 ? -1.0 : 1.0) * an_coefficient(n).get_d();  // (-1)^{n+1} A_n
    CHECK(est.coefficients[size_t(n)].converged);
    CHECK(est.coefficients[size_t(n)].value ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("ex_2_3 nontangential estimates at aperture 4") {
  const auto est = nontangential_coefficients(example_bank("ex_2_3"), 0.0, 2, 4.0);
  const double expected[3] = {-1, 2, -5};
  for (int k = 0; k <= 2; ++k)
    CHECK(std::abs(est.coefficients[size_t(k)].value - expected[k]) < 1e-5);
}

TEST_CASE("bank derivative evaluators agree with divided differences") {
  const Cplx z{0.1, 0.4};
  const double h = 1e-6;
  for (const auto& fh : {example_bank("ex_2_2", 5), example_bank("ex_2_3")}) {
    const Cplx dd = (fh.evaluator(z + Cplx{h, 0.0}) - fh.evaluator(z - Cplx{h, 0.0})) / (2 * h);
    CHECK(std::abs(fh.derivative(z, 1) - dd) < 1e-6 * std::max(1.0, std::abs(dd)));
  }
}

TEST_CASE("ex_2_2 nu=6 estimates reach the zeta values") {
  const auto h = example_bank("ex_2_2", 6);
  const auto est = radial_coefficients(h, 0.0, 3);
  const double expected[4] = {-kZeta5, kZeta4, -kZeta3, kZeta2};
  for (int k = 0; k <= 3; ++k)
    CHECK(std::abs(est.coefficients[size_t(k)].value - expected[k]) < 1e-4);
}

TEST_CASE("detect_divergence") {
  const auto rat = make_rational_handle(rf({"0", "1"}, {"1", "-2"}));
  for (int k = 0; k <= 5; ++k)
    CHECK(detect_divergence(rat, 0.0, k).verdict == LimitBehavior::Convergent);

  const auto e2 = example_bank("ex_2_2", 5);
  const auto rep = detect_divergence(e2, 0.0, 3);
  CHECK(rep.verdict == LimitBehavior::Divergent);
  CHECK(rep.growth_slope > 0.5);
  CHECK(rep.growth_slope < 2.0);
  CHECK(rep.last_magnitude > 2.0 * rep.first_magnitude);

  // order nu-3 still converges
  const auto conv = detect_divergence(e2, 0.0, 2);
  CHECK(conv.verdict == LimitBehavior::Convergent);

  const auto e1 = example_bank("ex_2_1");
  CHECK(detect_divergence(e1, 0.0, 2).verdict == LimitBehavior::Divergent);
}

TEST_CASE("ex_2_2 order boundary across nu") {
  // coefficients converge exactly up to order nu-3, divergence sets in at nu-2
  const double zeta[] = {0, 0, 1.6449340668482264, 1.2020569031595943, 1.0823232337111382,
                         1.0369277551433699};
  for (int nu : {4, 5, 6}) {
    const auto h = example_bank("ex_2_2", nu);
    const auto est = radial_coefficients(h, 0.0, nu - 3);
    for (int j = 0; j <= nu - 3; ++j) {
      const double expected = (j % 2 == 0 ? -1.0 : 1.0) * zeta[nu - 1 - j];
      CHECK(std::abs(est.coefficients[size_t(j)].value - expected) < 1e-4);
    }
    CHECK(detect_divergence(h, 0.0, nu - 2).verdict == LimitBehavior::Divergent);
  }
}

TEST_CASE("evaluation failures surface as EvaluationFailed") {
  const auto broken = make_handle("broken", [](Cplx) {
    return Cplx{std::numeric_limits<double>::infinity(), 0.0};
  });
  CHECK_THROWS_WITH_AS(radial_coefficients(broken, 0.0, 0),
                       doctest::Contains("EvaluationFailed"), Error);
}

TEST_CASE("theorem equivalence at desk scale: radial vs nontangential") {
  AnalyzerConfig cfg;
  const auto h3 = example_bank("ex_2_3", 0, cfg);
  const auto rad = radial_coefficients(h3, 0.0, 3, cfg);
  for (double aperture : {2.0, 4.0, 8.0}) {
    const auto nt = nontangential_coefficients(h3, 0.0, 3, aperture, cfg);
    for (int k = 0; k <= 3; ++k) {
      if (!rad.coefficients[size_t(k)].converged || !nt.coefficients[size_t(k)].converged)
        continue;
      const double scale =
          std::max(1.0, std::abs(rad.coefficients[size_t(k)].value));
      CHECK(std::abs(rad.coefficients[size_t(k)].value - nt.coefficients[size_t(k)].value) <=
            10.0 * cfg.conv_tol * scale);
    }
  }
}

TEST_CASE("radial estimates match exact taylor data within tolerance") {
  rng_t rng(8080);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_pick_function(rng, 3);
    const auto exact = taylor_at(f, 0, 4);
    const auto est = radial_coefficients(make_rational_handle(f), 0.0, 4);
    for (int k = 0; k <= 4; ++k) {
      if (!est.coefficients[size_t(k)].converged) continue;
      const double scale = std::max(1.0, std::abs(to_double(exact.coeff(k))));
      CHECK(std::abs(est.coefficients[size_t(k)].value - to_double(exact.coeff(k))) <
            1e-6 * scale);
    }
  }
}
