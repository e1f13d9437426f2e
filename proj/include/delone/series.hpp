#pragma once

#include "delone/sequence.hpp"

namespace delone {

/// ln of a deformed-exponential partial sum with a certified truncation bound.
struct SeriesEval {
  double value_ln = 0.0;
  std::size_t n_terms = 0;
  double tail_bound = 0.0;  // absolute, same scale as exp(value_ln)
};

/// ln N(t), N(t) = sum_n t^n / x_n!. Truncated where the term ratio
/// t / x_{n+1} falls below 1/2 and the geometric tail bound is below
/// tol * partial sum.
SeriesEval exp_series(const DeloneSequence& seq, double t, double tol = 1e-12);

/// N_num(t) / N_den(t) as an exp of a log-difference; safe for t up to ~1e5.
double series_ratio(const DeloneSequence& seq_num, const DeloneSequence& seq_den,
                    double t, double tol = 1e-12);

}  // namespace delone
