#pragma once

#include "delone/moments.hpp"
#include "delone/sequence.hpp"

#include <memory>
#include <vector>

namespace delone {

/// Renormalized sequence xt_n = (mu_n / mu_{n-1}) x_n, xt_0 = 0. If the raw
/// ratios ever decrease, the values are sorted ascending (xt_0 pinned) and
/// `reordered` is set; downstream factorials always come from the stored
/// order. Backed by a table-family DeloneSequence so the series engine can
/// consume it directly.
class RenormalizedSequence {
 public:
  RenormalizedSequence(const DeloneSequence& base, const MomentTable& moments);

  const std::vector<double>& values() const { return values_; }
  bool reordered() const { return reordered_; }
  double mu0() const { return moments_.mu[0]; }
  const MomentTable& moments() const { return moments_; }
  std::size_t n_max() const { return moments_.n_max; }

  /// The xt sequence as a DeloneSequence (table family).
  const DeloneSequence& tilde() const { return *tilde_; }

  double value(std::size_t n) const { return values_[n]; }
  double log_factorial(std::size_t n) const { return tilde_->log_factorial(n); }

 private:
  std::vector<double> values_;
  bool reordered_ = false;
  MomentTable moments_;
  std::shared_ptr<const DeloneSequence> tilde_;
};

RenormalizedSequence renormalize(const DeloneSequence& base, const MomentTable& moments);

/// Radial density of the modified measure: Nt(t) / (mu_0 N(t)).
double nu_density(const DeloneSequence& base, const RenormalizedSequence& ren, double t,
                  double tol = 1e-12);

/// Same quantity as the Poisson-like expectation of sigma(n) = 1/mu_n;
/// independent cross-check path (truncated at the table's n_max).
double nu_density_expectation(const DeloneSequence& base, const RenormalizedSequence& ren,
                              double t, double tol = 1e-12);

struct SolvedMeasure {
  double epsilon = 0.0;  // > -1, != 0
};

struct SolvedDensity {
  double value = 0.0;
  bool diverged = false;  // epsilon < 0, t -> 0: density is +inf
};

/// w(t) N(t) for the constant shift: 1 - eps * Gamma(eps, t) / Gamma(1 + eps).
SolvedDensity solved_measure_density(const SolvedMeasure& m, double t);

struct MeasureRow {
  double t = 0.0;
  double solved = 0.0;
  double nu = 0.0;
};

/// Both densities for the constant shift over a t grid.
std::vector<MeasureRow> compare_measures(double epsilon, const std::vector<double>& t_grid,
                                         double tol = 1e-10);

}  // namespace delone
