#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delone/moments.hpp"
#include "delone/specfun.hpp"

#include <cmath>

using namespace delone;

TEST_CASE("naturals anchor: moment integrals are factorials, mu = 1") {
  DeloneSequence nat(SequenceSpec::naturals());
  for (std::size_t n : {0, 1, 5, 20, 60})
    CHECK(moment_integral(nat, n) ==
          doctest::Approx(ln_gamma(static_cast<double>(n) + 1.0)).epsilon(1e-10));
  const MomentTable t = mu_sequence(nat, 100, 1e-10);
  for (std::size_t n = 0; n <= 100; ++n)
    CHECK(t.mu[n] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant shift: frozen high-precision values") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  const MomentTable t = mu_sequence(seq, 10, 1e-10);
  CHECK(t.mu[0] == doctest::Approx(1.06861158736800656).epsilon(1e-10));
  CHECK(t.mu[1] == doctest::Approx(1.01949704969118501).epsilon(1e-10));
  CHECK(t.mu[10] == doctest::Approx(1.00000953715692852).epsilon(1e-10));
  CHECK(std::abs(t.mu[10] - 1.0) < 1e-3);
  for (double err : t.abs_err) CHECK(err < 1e-8);
}

TEST_CASE("dual-tolerance consistency") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.3));
  const double tol = 1e-8;
  const double a = std::exp(moment_integral(seq, 5, tol) - seq.log_factorial(5));
  const double b = std::exp(moment_integral(seq, 5, tol / 10.0) - seq.log_factorial(5));
  CHECK(std::abs(a - b) < 10.0 * tol);
}

TEST_CASE("asymptote tracking for the constant shift") {
  // |mu_n - asymptote| decreases with n through the crossover window
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  const MomentTable t = mu_sequence(seq, 14, 1e-11);
  double prev = 1e9;
  for (std::size_t n = 1; n <= 14; ++n) {
    const double dev = std::abs(t.mu[n] - asymptotic_mu(AsymptoticModel::ConstantShift, 0.1, n));
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("inverse-square family approaches 1 + eps/n^2") {
  const double eps = 0.04;
  DeloneSequence seq(SequenceSpec::homographic(0.0, -eps, 1.0, 0.0));
  const MomentTable t = mu_sequence(seq, 120, 1e-9);
  for (std::size_t n : {100, 110, 120}) {
    const double scaled = static_cast<double>(n) * static_cast<double>(n) * (t.mu[n] - 1.0);
    CHECK(scaled == doctest::Approx(eps).epsilon(0.10));
  }
}

TEST_CASE("closed asymptote substitutions") {
  CHECK(asymptotic_mu(AsymptoticModel::InverseSquare, 0.01, 100) ==
        doctest::Approx(1.0 + 1e-6).epsilon(1e-15));
  const double g01 = std::exp(ln_gamma(0.1));
  CHECK(asymptotic_mu(AsymptoticModel::ConstantShift, 0.1, 5) ==
        doctest::Approx(1.0 + 1.0 / (g01 * 5.0 * 32.0)).epsilon(1e-13));
  CHECK(asymptotic_mu(AsymptoticModel::ConstantShift, 0.1, 10) ==
        doctest::Approx(1.0).epsilon(1e-4));  // already indistinguishable from 1
  CHECK_THROWS(asymptotic_mu(AsymptoticModel::ConstantShift, 0.1, 0));
}

TEST_CASE("Hankel determinants: positivity and a crafted counterexample") {
  DeloneSequence nat(SequenceSpec::naturals());
  const auto h = hankel_determinants(nat, 6);
  REQUIRE(h.size() == 6);
  // size 2: det [[1,1],[1,2]] = 1
  CHECK(h[1].det_a * std::exp(h[1].ln_scale_a) == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& r : h) {
    CHECK(r.det_a > 0.0);
    CHECK(r.det_b > 0.0);
  }

  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  for (const auto& r : hankel_determinants(seq, 6)) {
    CHECK(r.det_a > 0.0);
    CHECK(r.det_b > 0.0);
  }

  // wild gap pattern breaks Stieltjes positivity at size 3
  DeloneSequence bad(SequenceSpec::from_table({0.0, 10.0, 10.1, 30.0, 30.1, 60.0, 60.1}));
  const auto hb = hankel_determinants(bad, 3);
  CHECK(hb[2].det_a < 0.0);
  CHECK_THROWS(hankel_determinants(nat, 16));
}

TEST_CASE("smoothness report for continuous alpha extensions") {
  DeloneSequence cs(SequenceSpec::constant_shift(0.2));
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(100.0 + 7.3 * i);
  const PropConditionReport r = check_prop_conditions(cs, grid);
  CHECK(r.max_abs_alpha_prime < 1e-8);
  CHECK(r.ok);

  // fractional periodic: |alpha'| = |lambda mu| a.e., alpha'' = 0 a.e.
  const double lambda = 0.2, mu = std::sqrt(2.0);
  DeloneSequence fp(SequenceSpec::fractional_periodic(lambda, mu, 0.0));
  std::vector<double> grid2;
  for (int i = 0; i < 200; ++i) {
    const double x = 100.0 + 0.37 * i;
    // keep clear of the discontinuities of {mu x}
    const double f = std::fmod(mu * x, 1.0);
    if (f > 0.05 && f < 0.95) grid2.push_back(x);
  }
  const PropConditionReport r2 = check_prop_conditions(fp, grid2);
  CHECK(r2.max_abs_alpha_prime == doctest::Approx(lambda * mu).epsilon(1e-5));
  CHECK(r2.max_x_alpha_second < 0.05);

  DeloneSequence t(SequenceSpec::from_table({0.0, 1.0, 2.0}));
  CHECK_THROWS(check_prop_conditions(t, grid));
}

TEST_CASE("ratio of consecutive mu tends to one for perturbed families") {
  DeloneSequence fp(SequenceSpec::fractional_periodic(0.2, std::sqrt(2.0), 0.0));
  const MomentTable t = mu_sequence(fp, 60, 1e-9);
  double worst_late = 0.0, worst_early = 0.0;
  for (std::size_t n = 5; n <= 15; ++n)
    worst_early = std::max(worst_early, std::abs(t.mu[n] / t.mu[n - 1] - 1.0));
  for (std::size_t n = 50; n <= 60; ++n)
    worst_late = std::max(worst_late, std::abs(t.mu[n] / t.mu[n - 1] - 1.0));
  CHECK(worst_late < worst_early);
  CHECK(worst_late < 5e-3);
}
