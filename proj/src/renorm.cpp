#include "delone/renorm.hpp"

#include "delone/series.hpp"
#include "delone/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace delone {

RenormalizedSequence::RenormalizedSequence(const DeloneSequence& base,
                                           const MomentTable& moments)
    : moments_(moments) {
  if (moments.mu.empty()) throw std::invalid_argument("renormalize: empty moment table");
  values_.resize(moments.n_max + 1);
  values_[0] = 0.0;
  for (std::size_t n = 1; n <= moments.n_max; ++n)
    values_[n] = (moments.mu[n] / moments.mu[n - 1]) * base.value(n);
  if (!std::is_sorted(values_.begin(), values_.end(),
                      [](double a, double b) { return a <= b; })) {
    // crossings: keep xt_0 = 0 pinned, sort the rest ascending
    std::stable_sort(values_.begin() + 1, values_.end());
    reordered_ = true;
  }
  tilde_ = std::make_shared<const DeloneSequence>(SequenceSpec::from_table(values_));
}

RenormalizedSequence renormalize(const DeloneSequence& base, const MomentTable& moments) {
  return RenormalizedSequence(base, moments);
}

double nu_density(const DeloneSequence& base, const RenormalizedSequence& ren, double t,
                  double tol) {
  return series_ratio(ren.tilde(), base, t, tol) / ren.mu0();
}

double nu_density_expectation(const DeloneSequence& base, const RenormalizedSequence& ren,
                              double t, double tol) {
  // E_X sigma = sum_n (1/mu_n) t^n / (x_n! N(t)); terms beyond the moment
  // table must already be negligible at this t.
  const double lnN = exp_series(base, t, tol).value_ln;
  const double lnt = (t > 0.0) ? std::log(t) : 0.0;
  double sum = 0.0, comp = 0.0;
  for (std::size_t n = 0; n <= ren.n_max(); ++n) {
    if (t == 0.0 && n > 0) break;
    const double ln_term = static_cast<double>(n) * lnt - base.log_factorial(n) - lnN;
    const double term = std::exp(ln_term) / ren.moments().mu[n];
    const double y = term - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
  }
  // truncation check: the Poisson-like weight left beyond n_max
  if (t > 0.0) {
    const std::size_t m = ren.n_max();
    const double xm1 = base.value(m + 1);
    const double ratio = t / xm1;
    if (!(ratio < 0.5))
      throw std::domain_error("nu_density_expectation: moment table too short for this t");
    const double last = std::exp(static_cast<double>(m) * lnt - base.log_factorial(m) - lnN);
    if (last * ratio / (1.0 - ratio) > 100.0 * tol)
      throw std::domain_error("nu_density_expectation: moment table too short for this t");
  }
  return sum;
}

SolvedDensity solved_measure_density(const SolvedMeasure& m, double t) {
  if (!(m.epsilon > -1.0) || m.epsilon == 0.0)
    throw std::domain_error("solved_measure_density: requires epsilon > -1, != 0");
  if (t < 0.0) throw std::domain_error("solved_measure_density: requires t >= 0");
  SolvedDensity out;
  if (t == 0.0) {
    if (m.epsilon < 0.0) {
      // Gamma(eps, t) ~ -t^eps/eps as t -> 0 for eps < 0: density blows up
      out.value = std::numeric_limits<double>::infinity();
      out.diverged = true;
      return out;
    }
    out.value = 1.0 - m.epsilon;
    return out;
  }
  if (m.epsilon < 0.0) {
    // eps Gamma(eps, t) = Gamma(eps + 1, t) - t^eps e^{-t}, eps + 1 > 0
    const double num = upper_incomplete_gamma(m.epsilon + 1.0, t) -
                       std::exp(m.epsilon * std::log(t) - t);
    out.value = 1.0 - num / std::exp(ln_gamma(1.0 + m.epsilon));
    return out;
  }
  out.value = 1.0 - m.epsilon * upper_incomplete_gamma(m.epsilon, t) /
                        std::exp(ln_gamma(1.0 + m.epsilon));
  return out;
}

std::vector<MeasureRow> compare_measures(double epsilon, const std::vector<double>& t_grid,
                                         double tol) {
  double t_max = 0.0;
  for (double t : t_grid) t_max = std::max(t_max, t);
  const std::size_t n_max =
      std::max<std::size_t>(40, static_cast<std::size_t>(2.0 * t_max) + 80);

  const DeloneSequence base(SequenceSpec::constant_shift(epsilon));
  const MomentTable table = mu_sequence(base, n_max, tol);
  const RenormalizedSequence ren = renormalize(base, table);
  const SolvedMeasure solved{epsilon};

  std::vector<MeasureRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    MeasureRow row;
    row.t = t;
    row.solved = solved_measure_density(solved, t).value;
    row.nu = nu_density(base, ren, t);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace delone
