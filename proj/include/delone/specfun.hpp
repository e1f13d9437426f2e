#pragma once

#include <vector>

namespace delone {

struct PfqParams {
  std::vector<double> a;  // numerator parameters
  std::vector<double> b;  // denominator parameters
};

/// ln Gamma(x), x > 0. Backed by the C library Lanczos-class implementation.
double ln_gamma(double x);

/// Upper incomplete Gamma(s, t) = int_t^inf x^{s-1} e^{-x} dx, s > 0, t >= 0.
/// Continued fraction for t > s + 1, series complement otherwise.
double upper_incomplete_gamma(double s, double t);

/// pFq(a; b; t) by direct series, t >= 0, summed until the tail is certifiably
/// below tol relative to the partial sum. With len(a) = len(b) the series is
/// entire and always converges.
double pfq(const PfqParams& params, double t, double tol = 1e-14);

/// Log-variant of pfq for arguments where the natural-scale sum overflows.
/// Returns ln of the (positive) sum.
double ln_pfq(const PfqParams& params, double t, double tol = 1e-14);

/// Gauss 2F1(b, a; c; z) with 0 <= z < 1, a > 0, c > a, via the Euler
/// integral representation. Used by the deformed-binomial machinery.
double gauss_2f1_euler(double b, double a, double c, double z, double tol = 1e-12);

}  // namespace delone
