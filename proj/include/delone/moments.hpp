#pragma once

#include "delone/sequence.hpp"

#include <cstddef>
#include <vector>

namespace delone {

struct MomentTable {
  std::vector<double> mu;       // mu_0 .. mu_{n_max}
  std::vector<double> abs_err;  // quadrature error estimates, same indexing
  std::size_t n_max = 0;
};

/// ln I(n), I(n) = int_0^inf t^n / N(t) dt. Adaptive quadrature in u = ln t
/// on a window cut where the log-integrand has dropped well below its peak
/// (the peak sits near t = n); the discarded tail is folded into the error.
double moment_integral(const DeloneSequence& seq, std::size_t n, double tol = 1e-10);

/// mu_n = I(n) / x_n! for n = 0..n_max, all in log space.
MomentTable mu_sequence(const DeloneSequence& seq, std::size_t n_max, double tol = 1e-10);

/// Determinants of the two Hankel matrices built from x_k!:
/// A_n = [x_{i+j}!], B_n = [x_{i+j+1}!], 0 <= i,j < size. Determinants are
/// returned after symmetric row/column scaling by the diagonal entries, so
/// their signs match the unscaled ones; ln_scale_* recovers the natural value
/// as det * exp(ln_scale).
struct HankelResult {
  std::size_t size = 0;
  double det_a = 0.0, det_b = 0.0;  // scaled determinants
  double ln_scale_a = 0.0, ln_scale_b = 0.0;
  bool conditioning_warning = false;  // some |scaled det| < 1e-10
};

std::vector<HankelResult> hankel_determinants(const DeloneSequence& seq, std::size_t n_max);

/// Closed asymptotes for the two solved perturbation models.
enum class AsymptoticModel {
  ConstantShift,  // mu_n ~ 1 + 1/(Gamma(eps) n 2^n)
  InverseSquare,  // x_n = n(1 - eps/n^2): mu_n ~ 1 + eps/n^2
};

double asymptotic_mu(AsymptoticModel model, double epsilon, std::size_t n);

/// Smoothness report for the continuous extension of alpha: max |alpha'(x)|
/// and max x |alpha''(x)| over the grid (central finite differences), checked
/// against a smallness threshold for points with x >= x_floor.
struct PropConditionReport {
  double max_abs_alpha_prime = 0.0;
  double max_x_alpha_second = 0.0;
  bool ok = false;
  double threshold = 0.0;
};

PropConditionReport check_prop_conditions(const DeloneSequence& seq,
                                          const std::vector<double>& x_grid,
                                          double threshold = 0.1, double x_floor = 100.0);

}  // namespace delone
