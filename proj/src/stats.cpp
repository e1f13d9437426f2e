#include "delone/stats.hpp"

#include "delone/moments.hpp"
#include "delone/quadrature.hpp"
#include "delone/series.hpp"
#include "delone/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

double poisson_like_pmf(const DeloneSequence& seq, double t, std::size_t n, double tol) {
  if (t < 0.0) throw std::domain_error("poisson_like_pmf: requires t >= 0");
  if (t == 0.0) return (n == 0) ? 1.0 : 0.0;
  const double lnN = exp_series(seq, t, tol).value_ln;
  return std::exp(static_cast<double>(n) * std::log(t) - seq.log_factorial(n) - lnN);
}

std::vector<double> deformed_binomial_row(const DeformedBinomial& db, double tol) {
  if (db.seq == nullptr) throw std::invalid_argument("deformed_binomial: null sequence");
  if (!(db.p > 0.0 && db.p < 1.0))
    throw std::domain_error("deformed_binomial: requires 0 < p < 1");
  if (!(db.a > 0.0) || db.eps < 0.0)
    throw std::domain_error("deformed_binomial: requires a > 0, eps >= 0");
  const DeloneSequence& seq = *db.seq;
  const std::size_t n = db.n;

  std::vector<double> row(n + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double ln_comb =
        seq.log_factorial(n) - seq.log_factorial(n - k) - seq.log_factorial(k);
    const double kummer =
        (db.eps == 0.0)
            ? std::pow(1.0 - db.p, -seq.value(n - k))
            : gauss_2f1_euler(seq.value(n - k), db.a, db.a + db.eps, db.p, tol * 1e-2);
    if (!(kummer > 0.0) || !std::isfinite(kummer))
      throw std::domain_error("deformed_binomial: Kummer factor outside valid domain");
    row[k] = std::exp(ln_comb + static_cast<double>(k) * std::log(db.p)) / kummer;
    sum += row[k];
  }
  // w_n is fixed by normalization over the row
  for (double& v : row) v /= sum;
  return row;
}

double deformed_binomial_pmf(const DeformedBinomial& db, std::size_t k, double tol) {
  if (k > db.n) throw std::domain_error("deformed_binomial: k out of range");
  return deformed_binomial_row(db, tol)[k];
}

double xi(const DeloneSequence& seq, std::size_t n) {
  if (seq.spec().family == Family::Table)
    throw std::invalid_argument("xi: table sequences are not alpha-perturbations");
  return std::exp(ln_gamma(static_cast<double>(n) + 1.0) - seq.log_factorial(n));
}

double poisson_mean(const std::function<double(std::size_t)>& f, double t, double tol) {
  if (t < 0.0) throw std::domain_error("poisson_mean: requires t >= 0");
  if (t == 0.0) return f(0);
  const double lnt = std::log(t);
  double sum = 0.0, comp = 0.0;
  double peak_term = 0.0;
  for (std::size_t n = 0; n < 1000000; ++n) {
    const double ln_w = static_cast<double>(n) * lnt - t -
                        ln_gamma(static_cast<double>(n) + 1.0);
    const double term = f(n) * std::exp(ln_w);
    const double y = term - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    peak_term = std::max(peak_term, std::abs(term));
    if (static_cast<double>(n) > t) {
      // Poisson weights decay faster than geometric beyond the mean
      const double ratio = t / (static_cast<double>(n) + 1.0);
      if (std::abs(term) / (1.0 - ratio) < tol * std::max(std::abs(sum), peak_term))
        return sum;
      if (std::abs(term) > 1e6 * (peak_term + 1.0) ||
          static_cast<double>(n) > 100.0 * (t + 10.0))
        throw std::domain_error("poisson_mean: terms fail the decay contract");
    }
  }
  throw std::domain_error("poisson_mean: truncation budget exhausted");
}

double gamma_mean(const std::function<double(double)>& big_f, std::size_t m, double tol) {
  const double lgm = ln_gamma(static_cast<double>(m) + 1.0);
  auto ln_env = [&](double u) {
    return (static_cast<double>(m) + 1.0) * u - std::exp(u) - lgm;
  };
  auto g = [&](double u) {
    return std::complex<double>(big_f(std::exp(u)), 0.0);
  };
  const ScaledQuadResult r =
      integrate_peaked(ln_env, g, std::log(static_cast<double>(m) + 1.0), tol * 0.1);
  if (!r.converged) throw quadrature_error("gamma_mean: quadrature did not converge");
  return std::exp(r.scale) * r.value.real();
}

double i_m(const DeloneSequence& seq, std::size_t m, double tol) {
  const double mu = std::exp(moment_integral(seq, m, tol) - seq.log_factorial(m));
  if (m <= 20) {
    // composed path: xi(m) E_G[ 1 / E_P xi ](m)
    auto xi_fn = [&](std::size_t n) { return xi(seq, n); };
    auto inv_ep_xi = [&](double t) { return 1.0 / poisson_mean(xi_fn, t, tol * 1e-2); };
    const double composed = xi(seq, m) * gamma_mean(inv_ep_xi, m, tol);
    if (std::abs(composed - mu) > 1e-7 * std::max(1.0, std::abs(mu)))
      throw std::runtime_error("i_m: expectation path disagrees with moment quadrature");
  }
  return mu;
}

}  // namespace delone
