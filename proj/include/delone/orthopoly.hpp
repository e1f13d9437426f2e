#pragma once

#include "delone/operators.hpp"
#include "delone/renorm.hpp"

#include <complex>
#include <vector>

namespace delone {

/// Monic polynomials q_n from q_{n+1} = lambda q_n - c_n^2 q_{n-1},
/// c_n = sqrt(xt_n / 2). Row n of `coeffs` holds the monomial coefficients of
/// q_n in ascending degree (length n + 1, leading coefficient exactly 1).
struct PolySet {
  std::size_t n_max = 0;
  std::vector<std::vector<double>> coeffs;
  std::vector<double> c;  // c_0 unused; c_1..c_n_max
  bool conditioning_warning = false;  // coefficient growth beyond safe range
};

/// Coefficient tables are capped at n_max = 60; beyond that the monomial
/// basis is too ill-conditioned and spectra must come from the eigensolver.
PolySet monic_polys(const RenormalizedSequence& ren, std::size_t n_max);

/// q_n(lambda) by the value recursion (usable beyond the coefficient cap).
double monic_poly_value(const RenormalizedSequence& ren, std::size_t n, double lambda);

/// n x n symmetric tridiagonal Qt_n: zero diagonal, off-diagonals c_1..c_{n-1}.
OperatorMatrix truncated_position_matrix(const RenormalizedSequence& ren, std::size_t n);

struct SpectrumResult {
  std::vector<double> eigenvalues;        // ascending
  std::vector<double> first_components;   // e_0-components of the eigenvectors
};

/// Eigenvalues of Qt_n via a hand-rolled implicit-shift QL iteration for
/// symmetric tridiagonal matrices, accumulating only the first row of the
/// eigenvector matrix (enough for Gauss weights).
SpectrumResult spectrum(const RenormalizedSequence& ren, std::size_t n);

/// Independent path: eigenvalues by Sturm-count bisection (no eigenvectors).
std::vector<double> spectrum_bisection(const RenormalizedSequence& ren, std::size_t n);

/// G(z, lambda) = sum_n 2^{n/2} z^n / xt_n! q_n(lambda), truncated at n_trunc
/// with a certified geometric tail.
std::complex<double> generating_function(const RenormalizedSequence& ren,
                                         std::complex<double> z, double lambda,
                                         std::size_t n_trunc, double tol = 1e-12);

}  // namespace delone
