#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace delone {

/// Built-in perturbation families x_n = n + alpha(n), plus explicit tables.
enum class Family {
  Naturals,
  ConstantShift,       // alpha(n) = epsilon, n >= 1
  Homographic,         // alpha(n) = (a n + b) / (c n + d)
  Periodic,            // alpha(n) = epsilon sin(omega n)
  SineOverN,           // alpha(n) = epsilon sin(kappa n) / n
  FractionalPeriodic,  // alpha(n) = lambda {mu n} + nu, n >= 1
  BetaInteger,         // rescaled beta-integers of a quadratic PV unit
  HypergeometricPQ,    // x_n = n prod(n - b_i) / prod(n - a_i)
  Table,
};

enum class BetaKind { SimpleUnit, NonsimpleUnit, Golden };

struct SequenceSpec {
  Family family = Family::Naturals;

  double epsilon = 0.0;  // constant_shift, periodic, sine_over_n
  double omega = 0.0;    // periodic
  double kappa = 0.0;    // sine_over_n
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;      // homographic
  double lambda = 0.0, mu = 0.0, nu = 0.0;        // fractional_periodic
  BetaKind beta_kind = BetaKind::Golden;
  double beta = 0.0;                              // beta_integer
  std::vector<double> pfq_a, pfq_b;               // hypergeometric_pq
  std::vector<double> table;                      // table

  static SequenceSpec naturals();
  static SequenceSpec constant_shift(double epsilon);
  static SequenceSpec homographic(double a, double b, double c, double d);
  static SequenceSpec periodic(double epsilon, double omega);
  static SequenceSpec sine_over_n(double epsilon, double kappa);
  static SequenceSpec fractional_periodic(double lambda, double mu, double nu);
  static SequenceSpec beta_integer(BetaKind kind, double beta = 0.0);
  static SequenceSpec hypergeometric_pq(std::vector<double> a, std::vector<double> b);
  static SequenceSpec from_table(std::vector<double> values);

  nlohmann::json to_json() const;
  static SequenceSpec from_json(const nlohmann::json& j);
};

struct DeloneCertificate {
  bool ok = false;
  double min_gap = 0.0;
  double max_gap = 0.0;
  std::optional<std::size_t> first_violation;  // index n with x_{n+1} - x_n <= 0
};

/// A Delone sequence with lazily cached values and log-factorials.
/// Immutable after construction apart from the internal memo cache, which is
/// lock-protected so concurrent readers are safe.
class DeloneSequence {
 public:
  explicit DeloneSequence(SequenceSpec spec);

  double value(std::size_t n) const;

  /// ln(x_n!) = sum_{k=1..n} ln x_k, compensated summation; 0 for n = 0.
  double log_factorial(std::size_t n) const;

  double alpha(std::size_t n) const { return value(n) - static_cast<double>(n); }

  /// Continuous extension of alpha, where the family admits one.
  bool has_alpha_extension() const;
  double alpha_continuous(double x) const;

  const SequenceSpec& spec() const { return spec_; }

  /// Largest usable index for finite (table) sequences.
  std::optional<std::size_t> max_index() const;

  /// Set when a fractional-part argument exceeded 2^53 (precision loss).
  bool precision_warning() const { return precision_warning_.load(); }

  DeloneCertificate certify(std::size_t n_max) const;

 private:
  double raw_value(std::size_t n) const;
  void validate() const;

  SequenceSpec spec_;
  // beta-integer constants, fixed once in extended precision
  double c_beta_ = 0.0, beta_val_ = 0.0;
  mutable std::mutex cache_mutex_;
  mutable std::vector<double> logfact_;   // prefix sums of ln x_k
  mutable double kahan_carry_ = 0.0;
  mutable std::atomic<bool> precision_warning_{false};
};

DeloneSequence make_sequence(SequenceSpec spec);
DeloneSequence beta_integers(BetaKind kind, double beta = 0.0);
DeloneCertificate certify_delone(const DeloneSequence& seq, std::size_t n_max);

std::string family_name(Family f);

}  // namespace delone
