#include "delone/specfun.hpp"

#include "delone/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace delone {

namespace {
constexpr double kRescaleAt = 1e280;
constexpr double kRescale = 1e-280;
constexpr double kLnRescaleAt = 644.72382603833279;  // ln 1e280

bool near_nonpositive_integer(double x) {
  return x <= 0.5 && std::abs(x - std::round(x)) < 1e-13;
}
}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  return std::lgamma(x);
}

double upper_incomplete_gamma(double s, double t) {
  if (!(s > 0.0) || t < 0.0)
    throw std::domain_error("upper_incomplete_gamma: requires s > 0, t >= 0");
  const double ln_g = std::lgamma(s);
  if (t == 0.0) return std::exp(ln_g);

  if (t > s + 1.0) {
    // Lentz continued fraction for Gamma(s,t) = e^{-t} t^s / (t+1-s + CF)
    const double tiny = 1e-300;
    double b = t + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int n = 1; n <= 500; ++n) {
      const double an = -static_cast<double>(n) * (static_cast<double>(n) - s);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const double delta = d * c;
      h *= delta;
      if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-t + s * std::log(t)) * h;
  }

  // series for the lower function P(s,t), then complement
  double term = 1.0 / s;
  double sum = term;
  double ap = s;
  for (int n = 0; n < 1000; ++n) {
    ap += 1.0;
    term *= t / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  const double lower = sum * std::exp(-t + s * std::log(t));
  return std::exp(ln_g) - lower;
}

namespace {

// Shared pFq kernel: sums the series with streaming rescaling, returning
// ln(sum) and a flag for whether the natural-scale value is representable.
double pfq_ln_kernel(const PfqParams& params, double t, double tol) {
  if (t < 0.0) throw std::domain_error("pfq: requires t >= 0");
  for (double bi : params.b)
    if (near_nonpositive_integer(bi))
      throw std::domain_error("pfq: denominator parameter at a pole");
  if (params.a.size() > params.b.size() + 1)
    throw std::domain_error("pfq: divergent series (p > q + 1)");

  double term = 1.0;   // current term, rescaled
  double sum = 1.0;    // partial sum, same scale
  double comp = 0.0;   // Kahan carry
  double ln_scale = 0.0;
  int quiet = 0;
  for (std::size_t n = 0; n < 100000; ++n) {
    double ratio = t / (static_cast<double>(n) + 1.0);
    for (double ai : params.a) ratio *= ai + static_cast<double>(n);
    for (double bi : params.b) ratio /= bi + static_cast<double>(n);
    term *= ratio;
    const double y = term - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++quiet >= 25) break;
    } else {
      quiet = 0;
    }
    if (std::abs(sum) > kRescaleAt || std::abs(term) > kRescaleAt) {
      sum *= kRescale;
      term *= kRescale;
      comp *= kRescale;
      ln_scale += kLnRescaleAt;
    }
  }
  if (!(sum > 0.0)) throw std::domain_error("pfq: non-positive partial sum");
  return ln_scale + std::log(sum);
}

}  // namespace

double pfq(const PfqParams& params, double t, double tol) {
  const double ln_v = pfq_ln_kernel(params, t, tol);
  if (ln_v > 709.0) throw std::overflow_error("pfq: result overflows, use ln_pfq");
  return std::exp(ln_v);
}

double ln_pfq(const PfqParams& params, double t, double tol) {
  return pfq_ln_kernel(params, t, tol);
}

double gauss_2f1_euler(double b, double a, double c, double z, double tol) {
  if (!(a > 0.0) || !(c > a))
    throw std::domain_error("gauss_2f1_euler: requires c > a > 0");
  if (z < 0.0 || z >= 1.0)
    throw std::domain_error("gauss_2f1_euler: requires 0 <= z < 1");
  if (z == 0.0) return 1.0;

  // 2F1(b,a;c;z) = B(a,c-a)^{-1} int_0^1 u^{a-1}(1-u)^{c-a-1}(1-zu)^{-b} du.
  // Endpoint singularities removed by substitutions on the two halves:
  //   [0,1/2]: u = (1/2) p^{1/a},   du = (1/(2a)) p^{1/a - 1} dp
  //   [1/2,1]: 1-u = (1/2) q^{1/e}, e = c-a
  const double e = c - a;
  const double ln_beta = std::lgamma(a) + std::lgamma(e) - std::lgamma(c);

  auto left = [&](double p) {
    const double u = 0.5 * std::pow(p, 1.0 / a);
    return std::pow(0.5, a) / a * std::pow(1.0 - u, e - 1.0) * std::pow(1.0 - z * u, -b);
  };
  auto right = [&](double q) {
    const double om = 0.5 * std::pow(q, 1.0 / e);  // 1 - u
    const double u = 1.0 - om;
    return std::pow(0.5, e) / e * std::pow(u, a - 1.0) * std::pow(1.0 - z * u, -b);
  };

  const QuadResult ql = integrate(left, 0.0, 1.0, tol * 0.25);
  const QuadResult qr = integrate(right, 0.0, 1.0, tol * 0.25);
  if (!ql.converged || !qr.converged)
    throw quadrature_error("gauss_2f1_euler: Euler integral did not converge");
  return (ql.value + qr.value) * std::exp(-ln_beta);
}

}  // namespace delone
