#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace delone {

/// Thrown when an adaptive scheme cannot meet its tolerance within budget.
struct quadrature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::size_t panels = 0;
  bool converged = false;
};

struct ComplexQuadResult {
  std::complex<double> value{0.0, 0.0};
  double abs_err = 0.0;
  std::size_t panels = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 7-15 on [a, b]. Splits the worst panel
/// until the summed error estimate is below max(abs_tol, rel_tol*|I|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol = 0.0, std::size_t max_panels = 4000);

ComplexQuadResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, double rel_tol, double abs_tol = 0.0,
                                    std::size_t max_panels = 4000);

/// Integral over the whole line of exp(ln_env(u)) * g(u), where ln_env is
/// unimodal with ln_env -> -inf on both sides (a log-transformed radial
/// integrand). The result is value * exp(scale); the window is cut where
/// ln_env has dropped `drop` below its peak and the remainder is folded into
/// abs_err via the observed edge decay rate.
struct ScaledQuadResult {
  double scale = 0.0;                  // log offset
  std::complex<double> value{0.0, 0.0};
  double abs_err = 0.0;                // on `value`, same scale
  bool converged = false;
};

ScaledQuadResult integrate_peaked(const std::function<double(double)>& ln_env,
                                  const std::function<std::complex<double>(double)>& g,
                                  double peak_hint, double rel_tol,
                                  std::size_t max_panels = 4000, double drop = 45.0);

/// Real specialization of integrate_peaked with g == 1; returns ln of the
/// (positive) integral plus a relative error estimate.
struct LogQuadResult {
  double ln_value = 0.0;
  double rel_err = 0.0;
  bool converged = false;
};

LogQuadResult log_integrate_peaked(const std::function<double(double)>& ln_env,
                                   double peak_hint, double rel_tol,
                                   std::size_t max_panels = 4000, double drop = 45.0);

}  // namespace delone
