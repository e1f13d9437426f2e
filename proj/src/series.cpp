#include "delone/series.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

namespace {
constexpr double kRescaleAt = 1e280;
constexpr double kRescale = 1e-280;
constexpr double kLnRescaleAt = 644.72382603833279;  // ln 1e280
}  // namespace

SeriesEval exp_series(const DeloneSequence& seq, double t, double tol) {
  if (t < 0.0) throw std::domain_error("exp_series: requires t >= 0");
  if (!(tol > 0.0)) throw std::domain_error("exp_series: requires tol > 0");

  SeriesEval out;
  if (t == 0.0) {
    out.value_ln = 0.0;
    out.n_terms = 1;
    out.tail_bound = 0.0;
    return out;
  }

  const auto limit = seq.max_index();
  double term = 1.0;  // t^n / x_n!, rescaled
  double sum = 1.0;
  double comp = 0.0;  // Kahan carry
  double ln_scale = 0.0;
  double tail_rel = 0.0;
  std::size_t n = 0;
  for (;;) {
    if (limit && n + 1 > *limit)
      throw std::length_error("exp_series: table sequence too short for this t");
    const double xn1 = seq.value(n + 1);
    if (!(xn1 > 0.0)) throw std::domain_error("exp_series: sequence not positive beyond 0");
    const double ratio = t / xn1;
    // convergence certified once terms shrink geometrically
    if (ratio < 0.5) {
      const double tail = term * ratio / (1.0 - ratio);
      if (tail < tol * sum) {
        tail_rel = tail / sum;
        break;
      }
    }
    term *= ratio;
    const double y = term - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    ++n;
    if (sum > kRescaleAt || term > kRescaleAt) {
      sum *= kRescale;
      term *= kRescale;
      comp *= kRescale;
      ln_scale += kLnRescaleAt;
    }
  }
  out.value_ln = ln_scale + std::log(sum);
  out.n_terms = n + 1;
  out.tail_bound = tail_rel * std::exp(out.value_ln);  // inf only if the sum itself is
  return out;
}

double series_ratio(const DeloneSequence& seq_num, const DeloneSequence& seq_den,
                    double t, double tol) {
  const SeriesEval num = exp_series(seq_num, t, tol);
  const SeriesEval den = exp_series(seq_den, t, tol);
  return std::exp(num.value_ln - den.value_ln);
}

}  // namespace delone
