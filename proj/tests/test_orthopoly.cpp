#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delone/orthopoly.hpp"

#include <cmath>
#include <complex>

using namespace delone;

namespace {

RenormalizedSequence make_ren(const DeloneSequence& seq, std::size_t n_max,
                              double tol = 1e-10) {
  return renormalize(seq, mu_sequence(seq, n_max, tol));
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * x + coeffs[j];
  return v;
}

// monic Hermite by He_{n+1} = x He_n - n He_{n-1}
double monic_hermite(std::size_t n, double x) {
  double hm1 = 0.0, h = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = x * h - static_cast<double>(k) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

}  // namespace

TEST_CASE("monic recursion: low orders for the unperturbed sequence") {
  DeloneSequence nat(SequenceSpec::naturals());
  const RenormalizedSequence ren = make_ren(nat, 30);
  const PolySet ps = monic_polys(ren, 5);
  REQUIRE(ps.coeffs.size() == 6);
  CHECK(ps.coeffs[0] == std::vector<double>{1.0});
  CHECK(ps.coeffs[1][0] == 0.0);
  CHECK(ps.coeffs[1][1] == 1.0);
  // q_2 = x^2 - 1/2, q_3 = x^3 - (3/2) x
  CHECK(ps.coeffs[2][0] == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(ps.coeffs[2][2] == 1.0);
  CHECK(ps.coeffs[3][1] == doctest::Approx(-1.5).epsilon(1e-9));
  CHECK(ps.coeffs[3][3] == 1.0);
  for (const auto& row : ps.coeffs) CHECK(row.back() == 1.0);  // monic
  CHECK_THROWS(monic_polys(ren, 61));
}

TEST_CASE("Hermite rescale identity for the unperturbed sequence") {
  DeloneSequence nat(SequenceSpec::naturals());
  const RenormalizedSequence ren = make_ren(nat, 40);
  for (std::size_t n : {1, 2, 3, 7, 12})
    for (double lam : {-1.7, -0.3, 0.0, 0.9, 2.4}) {
      const double want =
          std::pow(2.0, -0.5 * static_cast<double>(n)) * monic_hermite(n, std::sqrt(2.0) * lam);
      CHECK(monic_poly_value(ren, n, lam) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("characteristic polynomial of the truncated Jacobi matrix") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  const RenormalizedSequence ren = make_ren(seq, 40);
  // q_n(lambda) = prod (lambda - lambda_i): compare against the spectrum
  for (std::size_t n : {2, 5, 10, 25}) {
    const SpectrumResult sp = spectrum(ren, n);
    for (double lam : {-0.9, 0.4, 1.8}) {
      double prod = 1.0;
      for (double ev : sp.eigenvalues) prod *= lam - ev;
      CHECK(monic_poly_value(ren, n, lam) == doctest::Approx(prod).epsilon(1e-8));
    }
  }
  // coefficient tables evaluate to the same values where they exist
  const PolySet ps = monic_polys(ren, 12);
  for (double lam : {-1.1, 0.2, 2.0})
    CHECK(eval_poly(ps.coeffs[12], lam) ==
          doctest::Approx(monic_poly_value(ren, 12, lam)).epsilon(1e-9));
}

TEST_CASE("spectrum: symmetry, closed three-point case, interlacing") {
  DeloneSequence nat(SequenceSpec::naturals());
  const RenormalizedSequence ren = make_ren(nat, 40);

  const SpectrumResult s3 = spectrum(ren, 3);
  CHECK(s3.eigenvalues[0] == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-10));
  CHECK(s3.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(s3.eigenvalues[2] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));

  for (std::size_t n : {4, 9, 20}) {
    const SpectrumResult sp = spectrum(ren, n);
    // zero-diagonal Jacobi matrices have symmetric spectra
    for (std::size_t k = 0; k < n; ++k)
      CHECK(sp.eigenvalues[k] == doctest::Approx(-sp.eigenvalues[n - 1 - k]).epsilon(1e-9));
    // interlacing with the next truncation
    const SpectrumResult sp1 = spectrum(ren, n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(sp1.eigenvalues[k] < sp.eigenvalues[k] + 1e-12);
      CHECK(sp.eigenvalues[k] < sp1.eigenvalues[k + 1] + 1e-12);
    }
  }
}

TEST_CASE("QL spectrum agrees with Sturm bisection") {
  DeloneSequence seq(SequenceSpec::periodic(0.2, 1.3));
  const RenormalizedSequence ren = make_ren(seq, 60);
  for (std::size_t n : {3, 12, 25, 40}) {
    const SpectrumResult a = spectrum(ren, n);
    const std::vector<double> b = spectrum_bisection(ren, n);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(a.eigenvalues[k] == doctest::Approx(b[k]).epsilon(1e-8));
  }
}

TEST_CASE("truncated position matrix matches the spectrum input") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  const RenormalizedSequence ren = make_ren(seq, 20);
  const OperatorMatrix m = truncated_position_matrix(ren, 6);
  CHECK(m.storage() == Storage::Tridiagonal);
  CHECK(m.is_hermitian());
  for (std::size_t k = 1; k < 6; ++k)
    CHECK(m.at(k - 1, k).real() == doctest::Approx(std::sqrt(0.5 * ren.value(k))).epsilon(1e-12));
  const OperatorMatrix one = truncated_position_matrix(ren, 1);
  CHECK(one.at(0, 0) == std::complex<double>{});
}

TEST_CASE("Gauss weights give discrete orthonormality") {
  DeloneSequence seq(SequenceSpec::constant_shift(0.1));
  const RenormalizedSequence ren = make_ren(seq, 40);
  const std::size_t big_n = 22;
  const SpectrumResult sp = spectrum(ren, big_n);

  auto p_ortho = [&](std::size_t n, double lam) {
    double cf = 1.0;
    for (std::size_t k = 1; k <= n; ++k) cf *= std::sqrt(0.5 * ren.value(k));
    return monic_poly_value(ren, n, lam) / cf;
  };
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t m = n; m <= 20; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < big_n; ++i)
        s += sp.first_components[i] * sp.first_components[i] *
             p_ortho(n, sp.eigenvalues[i]) * p_ortho(m, sp.eigenvalues[i]);
      CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) < 1e-8);
    }
}

TEST_CASE("generating function") {
  DeloneSequence nat(SequenceSpec::naturals());
  const RenormalizedSequence ren = make_ren(nat, 120);
  CHECK(generating_function(ren, {0.0, 0.0}, 1.7, 10).real() == 1.0);

  // unperturbed case: G(z, lambda) = exp(sqrt(2) lambda z - z^2/2)
  for (double lam : {-0.8, 0.0, 1.3})
    for (const std::complex<double> z :
         {std::complex<double>{0.4, 0.0}, std::complex<double>{0.9, -0.6}}) {
      const std::complex<double> want =
          std::exp(std::sqrt(2.0) * lam * z - 0.5 * z * z);
      const std::complex<double> got = generating_function(ren, z, lam, 100);
      CHECK(std::abs(got - want) < 1e-9 * std::abs(want) + 1e-12);
    }
  CHECK_THROWS_AS(generating_function(ren, {5.0, 0.0}, 0.5, 6), std::length_error);
}
