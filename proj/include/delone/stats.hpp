#pragma once

#include "delone/sequence.hpp"

#include <functional>
#include <vector>

namespace delone {

/// Poisson-like pmf: t^n / (N(t) x_n!), log-space evaluation.
double poisson_like_pmf(const DeloneSequence& seq, double t, std::size_t n,
                        double tol = 1e-12);

/// Deformed binomial of the perturbed sequence: the full row k = 0..n, with
/// the normalization constant w_n fixed by summing the row. The Kummer factor
/// is 2F1(x_{n-k}, a; a + eps; p) through its Euler integral; eps = 0 falls
/// back to the closed form (1 - p)^{-x_{n-k}} (plain binomial for naturals).
struct DeformedBinomial {
  const DeloneSequence* seq = nullptr;
  std::size_t n = 0;
  double p = 0.0;  // in (0, 1)
  double a = 1.0;
  double eps = 0.0;
};

std::vector<double> deformed_binomial_row(const DeformedBinomial& db, double tol = 1e-10);
double deformed_binomial_pmf(const DeformedBinomial& db, std::size_t k, double tol = 1e-10);

/// xi(n) = n! / x_n!; rejects table sequences (not an alpha-perturbation).
double xi(const DeloneSequence& seq, std::size_t n);

/// Truncated Poisson expectation sum_n f(n) t^n e^{-t} / n!.
double poisson_mean(const std::function<double(std::size_t)>& f, double t,
                    double tol = 1e-12);

/// Gamma expectation int_0^inf F(t) t^m e^{-t} / m! dt.
double gamma_mean(const std::function<double(double)>& big_f, std::size_t m,
                  double tol = 1e-10);

/// I_m = xi(m) * E_G[ 1 / E_P xi ](m); identical to mu_m. Returned from the
/// moment quadrature; for m <= 20 the composed expectation path is evaluated
/// too and the two are asserted to agree.
double i_m(const DeloneSequence& seq, std::size_t m, double tol = 1e-10);

}  // namespace delone
