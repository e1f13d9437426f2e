#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delone/sequence.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

using namespace delone;

TEST_CASE("naturals: values, alpha, log-factorials") {
  DeloneSequence seq(SequenceSpec::naturals());
  CHECK(seq.value(0) == 0.0);
  CHECK(seq.value(7) == 7.0);
  CHECK(seq.alpha(13) == 0.0);
  CHECK(seq.log_factorial(0) == 0.0);
  CHECK(seq.log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(seq.log_factorial(20) == doctest::Approx(std::lgamma(21.0)).epsilon(1e-14));
}

TEST_CASE("constant shift: values and parameter validation") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  CHECK(seq.value(0) == 0.0);  // x_0 pinned at 0
  CHECK(seq.value(1) == doctest::Approx(1.1).epsilon(1e-15));
  CHECK(seq.value(42) == doctest::Approx(42.1).epsilon(1e-15));
  CHECK_THROWS(DeloneSequence(SequenceSpec::constant_shift(1.0)));
  CHECK_THROWS(DeloneSequence(SequenceSpec::constant_shift(-1.3)));
}

TEST_CASE("homographic: projective values and constraints") {
  DeloneSequence seq(SequenceSpec::homographic(0.1, 0.0, 1.0, 2.2));
  CHECK(seq.value(0) == 0.0);
  CHECK(seq.value(1) == doctest::Approx(1.0 + 0.1 / 3.2).epsilon(1e-15));
  // |a/c| >= 1 breaks the jump bound
  CHECK_THROWS(DeloneSequence(SequenceSpec::homographic(2.0, 0.0, 1.0, 1.0)));
  // inverse-square variant alpha(n) = -eps/n
  DeloneSequence inv(SequenceSpec::homographic(0.0, -0.04, 1.0, 0.0));
  CHECK(inv.value(2) == doctest::Approx(2.0 - 0.04 / 2.0).epsilon(1e-15));
  CHECK(inv.value(0) == 0.0);
}

TEST_CASE("periodic and sine-over-n families") {
  DeloneSequence per(SequenceSpec::periodic(0.2, 1.3));
  CHECK(per.value(3) == doctest::Approx(3.0 + 0.2 * std::sin(1.3 * 3.0)).epsilon(1e-15));
  CHECK_THROWS(DeloneSequence(SequenceSpec::periodic(0.6, 1.5707963267948966)));

  DeloneSequence so(SequenceSpec::sine_over_n(0.1, 1.0));
  CHECK(so.value(5) == doctest::Approx(5.0 + 0.1 * std::sin(5.0) / 5.0).epsilon(1e-15));
  CHECK(so.value(0) == 0.0);
  CHECK_THROWS(DeloneSequence(SequenceSpec::sine_over_n(0.6, 1.0)));
}

TEST_CASE("fractional periodic: values and Delone certificate") {
  const double mu = std::sqrt(2.0);
  DeloneSequence fp(SequenceSpec::fractional_periodic(0.2, mu, 0.0));
  CHECK(fp.value(1) == doctest::Approx(1.0 + 0.2 * std::fmod(mu, 1.0)).epsilon(1e-14));
  const DeloneCertificate cert = fp.certify(5000);
  CHECK(cert.ok);
  CHECK(cert.min_gap > 0.5);
  CHECK(cert.max_gap < 1.5);
  CHECK_THROWS(DeloneSequence(SequenceSpec::fractional_periodic(0.7, mu, 0.0)));
}

TEST_CASE("beta integers: golden and nonsimple units") {
  const double c_tau = 0.854101966249684545;
  const double tau = 0.5 * (1.0 + std::sqrt(5.0));
  DeloneSequence g(SequenceSpec::beta_integer(BetaKind::Golden));
  CHECK(g.value(0) == 0.0);
  CHECK(g.value(1) == doctest::Approx(1.0 / c_tau).epsilon(1e-13));
  CHECK(g.value(2) == doctest::Approx(tau / c_tau).epsilon(1e-13));
  CHECK(g.value(3) == doctest::Approx(tau * tau / c_tau).epsilon(1e-13));
  CHECK(g.certify(5000).ok);

  DeloneSequence ns(
      SequenceSpec::beta_integer(BetaKind::NonsimpleUnit, 0.5 * (3.0 + std::sqrt(5.0))));
  CHECK(ns.certify(5000).ok);
  // beta must be a quadratic unit of the right kind
  CHECK_THROWS(DeloneSequence(SequenceSpec::beta_integer(BetaKind::SimpleUnit, 1.7)));
}

TEST_CASE("hypergeometric family: values and pole validation") {
  DeloneSequence hq(SequenceSpec::hypergeometric_pq({0.3}, {0.7}));
  CHECK(hq.value(0) == 0.0);
  CHECK(hq.value(2) == doctest::Approx(2.0 * (2.0 - 0.7) / (2.0 - 0.3)).epsilon(1e-14));
  CHECK_THROWS(DeloneSequence(SequenceSpec::hypergeometric_pq({1.5}, {0.5})));
  CHECK_THROWS(DeloneSequence(SequenceSpec::hypergeometric_pq({0.3, 0.2}, {0.5})));
}

TEST_CASE("table family: monotonicity, bounds, max index") {
  DeloneSequence t(SequenceSpec::from_table({0.0, 1.1, 2.05, 3.2}));
  CHECK(t.value(2) == 2.05);
  REQUIRE(t.max_index().has_value());
  CHECK(*t.max_index() == 3);
  CHECK_THROWS(DeloneSequence(SequenceSpec::from_table({0.0, 2.0, 1.5})));
  CHECK_THROWS(DeloneSequence(SequenceSpec::from_table({0.5, 1.0})));
  CHECK_FALSE(t.has_alpha_extension());
}

TEST_CASE("alpha continuous extension agrees with alpha at integers") {
  const std::vector<SequenceSpec> specs = {
      SequenceSpec::constant_shift(0.3),
      SequenceSpec::homographic(0.1, 0.0, 1.0, 2.2),
      SequenceSpec::periodic(0.2, 0.9),
      SequenceSpec::sine_over_n(0.1, 1.0),
      SequenceSpec::fractional_periodic(0.2, std::sqrt(2.0), 0.0),
      SequenceSpec::beta_integer(BetaKind::Golden),
  };
  for (const auto& s : specs) {
    DeloneSequence seq(s);
    REQUIRE(seq.has_alpha_extension());
    for (std::size_t n = 1; n <= 40; ++n)
      CHECK(seq.alpha_continuous(static_cast<double>(n)) ==
            doctest::Approx(seq.alpha(n)).epsilon(1e-10));
  }
}

TEST_CASE("JSON spec round trip") {
  const std::vector<SequenceSpec> specs = {
      SequenceSpec::naturals(),
      SequenceSpec::constant_shift(0.25),
      SequenceSpec::homographic(0.1, 0.0, 1.0, 2.2),
      SequenceSpec::fractional_periodic(0.2, std::sqrt(2.0), 0.1),
      SequenceSpec::hypergeometric_pq({0.3}, {0.7}),
      SequenceSpec::from_table({0.0, 1.0, 2.5}),
  };
  for (const auto& s : specs) {
    const SequenceSpec back = SequenceSpec::from_json(s.to_json());
    DeloneSequence a(s), b(back);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(a.value(n) == b.value(n));
  }
}

TEST_CASE("Delone certificate flags a gap violation") {
  // a legal table (increasing) whose gaps collapse below any reasonable r
  DeloneSequence t(SequenceSpec::from_table({0.0, 1.0, 1.0 + 1e-9, 2.0}));
  const DeloneCertificate cert = t.certify(3);
  CHECK(cert.min_gap < 1e-8);
}
