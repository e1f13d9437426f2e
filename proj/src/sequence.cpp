#include "delone/sequence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace delone {

namespace {

double frac_part(double x) { return x - std::floor(x); }

// m such that beta^2 = m beta + 1 (simple unit) or beta^2 = m beta - 1
// (non-simple unit), if beta is a quadratic PV unit of that kind.
std::optional<long> pv_unit_multiplier(double beta, bool simple) {
  if (!(beta > 1.0)) return std::nullopt;
  const double m = (beta * beta + (simple ? -1.0 : 1.0)) / beta;
  const double mr = std::round(m);
  if (std::abs(m - mr) > 1e-9) return std::nullopt;
  const long mi = static_cast<long>(mr);
  if (simple && mi < 1) return std::nullopt;
  if (!simple && mi < 3) return std::nullopt;
  return mi;
}

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("sequence spec rejected: " + what);
}

}  // namespace

SequenceSpec SequenceSpec::naturals() { return SequenceSpec{}; }

SequenceSpec SequenceSpec::constant_shift(double epsilon) {
  SequenceSpec s;
  s.family = Family::ConstantShift;
  s.epsilon = epsilon;
  return s;
}

SequenceSpec SequenceSpec::homographic(double a, double b, double c, double d) {
  SequenceSpec s;
  s.family = Family::Homographic;
  s.a = a; s.b = b; s.c = c; s.d = d;
  return s;
}

SequenceSpec SequenceSpec::periodic(double epsilon, double omega) {
  SequenceSpec s;
  s.family = Family::Periodic;
  s.epsilon = epsilon; s.omega = omega;
  return s;
}

SequenceSpec SequenceSpec::sine_over_n(double epsilon, double kappa) {
  SequenceSpec s;
  s.family = Family::SineOverN;
  s.epsilon = epsilon; s.kappa = kappa;
  return s;
}

SequenceSpec SequenceSpec::fractional_periodic(double lambda, double mu, double nu) {
  SequenceSpec s;
  s.family = Family::FractionalPeriodic;
  s.lambda = lambda; s.mu = mu; s.nu = nu;
  return s;
}

SequenceSpec SequenceSpec::beta_integer(BetaKind kind, double beta) {
  SequenceSpec s;
  s.family = Family::BetaInteger;
  s.beta_kind = kind;
  s.beta = beta;
  return s;
}

SequenceSpec SequenceSpec::hypergeometric_pq(std::vector<double> a, std::vector<double> b) {
  SequenceSpec s;
  s.family = Family::HypergeometricPQ;
  s.pfq_a = std::move(a);
  s.pfq_b = std::move(b);
  return s;
}

SequenceSpec SequenceSpec::from_table(std::vector<double> values) {
  SequenceSpec s;
  s.family = Family::Table;
  s.table = std::move(values);
  return s;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Naturals: return "naturals";
    case Family::ConstantShift: return "constant_shift";
    case Family::Homographic: return "homographic";
    case Family::Periodic: return "periodic";
    case Family::SineOverN: return "sine_over_n";
    case Family::FractionalPeriodic: return "fractional_periodic";
    case Family::BetaInteger: return "beta_integer";
    case Family::HypergeometricPQ: return "hypergeometric_pq";
    case Family::Table: return "table";
  }
  return "?";
}

DeloneSequence::DeloneSequence(SequenceSpec spec) : spec_(std::move(spec)) {
  if (spec_.family == Family::BetaInteger) {
    long double beta;
    if (spec_.beta_kind == BetaKind::Golden) {
      beta = (1.0L + std::sqrt(5.0L)) / 2.0L;
    } else {
      beta = static_cast<long double>(spec_.beta);
    }
    const bool simple = spec_.beta_kind != BetaKind::NonsimpleUnit;
    long double cb;
    if (simple) {
      cb = (1.0L + beta * beta) / (beta * (1.0L + beta));
    } else {
      cb = 1.0L - 1.0L / (beta * beta);
    }
    beta_val_ = static_cast<double>(beta);
    c_beta_ = static_cast<double>(cb);
  }
  validate();
  logfact_.push_back(0.0);  // x_0! = 1
}

void DeloneSequence::validate() const {
  const SequenceSpec& s = spec_;
  switch (s.family) {
    case Family::Naturals:
      break;
    case Family::ConstantShift:
      if (!(std::abs(s.epsilon) < 1.0)) reject("constant_shift requires |epsilon| < 1");
      break;
    case Family::Homographic: {
      if (s.c == 0.0 && s.d == 0.0) reject("homographic requires c, d not both zero");
      if (s.c != 0.0 && !(std::abs(s.a / s.c) < 1.0))
        reject("homographic requires |a/c| < 1 when c != 0");
      if (s.c == 0.0 && !(std::abs(s.b / s.d) < 1.0 && std::abs(s.a / s.d) < 1.0))
        reject("homographic with c = 0 requires |a/d| < 1 and |b/d| < 1");
      for (std::size_t n = 1; n <= 64; ++n)
        if (s.c * static_cast<double>(n) + s.d <= 0.0)
          reject("homographic denominator c n + d must stay positive for n >= 1");
      break;
    }
    case Family::Periodic:
      if (!(std::abs(s.epsilon) < 1.0)) reject("periodic requires |epsilon| < 1");
      if (!(1.0 - 2.0 * std::abs(s.epsilon * std::sin(s.omega)) > 0.0))
        reject("periodic requires 1 - 2|epsilon sin(omega)| > 0");
      break;
    case Family::SineOverN:
      if (!(2.0 * std::abs(s.epsilon) < 1.0)) reject("sine_over_n requires |epsilon| < 1/2");
      break;
    case Family::FractionalPeriodic: {
      if (!(std::abs(s.lambda) < 0.5)) reject("fractional_periodic requires |lambda| < 1/2");
      if (s.lambda > 0.0) {
        if (!(-1.0 < s.nu && s.nu < 1.0 - s.lambda))
          reject("fractional_periodic with lambda > 0 requires -1 < nu < 1 - lambda");
      } else if (s.lambda < 0.0) {
        if (!(-s.lambda - 1.0 < s.nu && s.nu < 1.0))
          reject("fractional_periodic with lambda < 0 requires -lambda - 1 < nu < 1");
      } else if (!(std::abs(s.nu) < 1.0)) {
        reject("fractional_periodic requires |nu| < 1");
      }
      break;
    }
    case Family::BetaInteger: {
      const bool simple = s.beta_kind != BetaKind::NonsimpleUnit;
      if (!pv_unit_multiplier(beta_val_, simple))
        reject(simple ? "beta is not a simple quadratic PV unit (beta^2 = m beta + 1, m >= 1)"
                      : "beta is not a non-simple quadratic PV unit (beta^2 = m beta - 1, m >= 3)");
      break;
    }
    case Family::HypergeometricPQ: {
      if (s.pfq_a.size() != s.pfq_b.size() || s.pfq_a.empty())
        reject("hypergeometric_pq requires equally sized, nonempty parameter lists");
      for (double ai : s.pfq_a)
        if (!(ai < 1.0)) reject("hypergeometric_pq requires a_i < 1");
      for (double bi : s.pfq_b)
        if (!(bi < 1.0)) reject("hypergeometric_pq requires b_i < 1");
      double drift = 0.0;  // alpha(n) -> sum(a_i - b_i)
      for (std::size_t i = 0; i < s.pfq_a.size(); ++i) drift += s.pfq_a[i] - s.pfq_b[i];
      if (!(std::abs(drift) < 1.0))
        reject("hypergeometric_pq requires |sum(a_i - b_i)| < 1 (bounded perturbation)");
      break;
    }
    case Family::Table: {
      if (s.table.empty() || s.table.front() != 0.0)
        reject("table requires x_0 = 0");
      for (std::size_t n = 0; n + 1 < s.table.size(); ++n)
        if (!(s.table[n + 1] > s.table[n]))
          reject("table must be strictly increasing (violated at index " +
                 std::to_string(n + 1) + ")");
      break;
    }
  }

  // gap scan over a prefix; a parameter set producing non-increasing values is
  // rejected here rather than at use
  if (s.family != Family::Table) {
    double prev = 0.0;
    for (std::size_t n = 1; n <= 2048; ++n) {
      const double v = raw_value(n);
      if (!(v > prev))
        reject(family_name(s.family) + " parameters produce a non-increasing sequence at n = " +
               std::to_string(n));
      prev = v;
    }
  }
}

double DeloneSequence::raw_value(std::size_t n) const {
  if (n == 0) return 0.0;
  const double dn = static_cast<double>(n);
  const SequenceSpec& s = spec_;
  switch (s.family) {
    case Family::Naturals:
      return dn;
    case Family::ConstantShift:
      return dn + s.epsilon;
    case Family::Homographic:
      return dn + (s.a * dn + s.b) / (s.c * dn + s.d);
    case Family::Periodic:
      return dn + s.epsilon * std::sin(s.omega * dn);
    case Family::SineOverN:
      return dn + s.epsilon * std::sin(s.kappa * dn) / dn;
    case Family::FractionalPeriodic: {
      if (s.mu * dn > 9.007199254740992e15) precision_warning_.store(true);
      return dn + s.lambda * frac_part(s.mu * dn) + s.nu;
    }
    case Family::BetaInteger: {
      const double beta = beta_val_;
      const bool simple = s.beta_kind != BetaKind::NonsimpleUnit;
      double bn;
      if (simple) {
        const double arg = (dn + 1.0) / (1.0 + beta);
        if (arg > 9.007199254740992e15) precision_warning_.store(true);
        bn = c_beta_ * dn + (1.0 / beta) * (1.0 - beta) / (1.0 + beta) +
             (beta - 1.0) / beta * frac_part(arg);
      } else {
        const double arg = dn / beta;
        if (arg > 9.007199254740992e15) precision_warning_.store(true);
        bn = c_beta_ * dn + (1.0 / beta) * frac_part(arg);
      }
      return bn / c_beta_;
    }
    case Family::HypergeometricPQ: {
      double num = 1.0, den = 1.0;
      for (double bi : s.pfq_b) num *= dn - bi;
      for (double ai : s.pfq_a) den *= dn - ai;
      return dn * num / den;
    }
    case Family::Table:
      if (n >= s.table.size())
        throw std::out_of_range("table sequence index " + std::to_string(n) +
                                " beyond stored length " + std::to_string(s.table.size()));
      return s.table[n];
  }
  return dn;
}

double DeloneSequence::value(std::size_t n) const { return raw_value(n); }

double DeloneSequence::log_factorial(std::size_t n) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  while (logfact_.size() <= n) {
    const std::size_t k = logfact_.size();
    const double xk = raw_value(k);
    if (!(xk > 0.0))
      throw std::domain_error("log_factorial: degenerate sequence, x_" + std::to_string(k) +
                              " <= 0");
    // Kahan-compensated prefix sum
    const double y = std::log(xk) - kahan_carry_;
    const double t = logfact_.back() + y;
    kahan_carry_ = (t - logfact_.back()) - y;
    logfact_.push_back(t);
  }
  return logfact_[n];
}

bool DeloneSequence::has_alpha_extension() const {
  return spec_.family != Family::Table;
}

double DeloneSequence::alpha_continuous(double x) const {
  const SequenceSpec& s = spec_;
  switch (s.family) {
    case Family::Naturals: return 0.0;
    case Family::ConstantShift: return s.epsilon;
    case Family::Homographic: return (s.a * x + s.b) / (s.c * x + s.d);
    case Family::Periodic: return s.epsilon * std::sin(s.omega * x);
    case Family::SineOverN: return s.epsilon * std::sin(s.kappa * x) / x;
    case Family::FractionalPeriodic: return s.lambda * frac_part(s.mu * x) + s.nu;
    case Family::BetaInteger: {
      const double beta = beta_val_;
      if (s.beta_kind != BetaKind::NonsimpleUnit) {
        return ((1.0 / beta) * (1.0 - beta) / (1.0 + beta) +
                (beta - 1.0) / beta * frac_part((x + 1.0) / (1.0 + beta))) / c_beta_;
      }
      return (1.0 / beta) * frac_part(x / beta) / c_beta_;
    }
    case Family::HypergeometricPQ: {
      double num = 1.0, den = 1.0;
      for (double bi : s.pfq_b) num *= x - bi;
      for (double ai : s.pfq_a) den *= x - ai;
      return x * num / den - x;
    }
    case Family::Table:
      throw std::domain_error("table sequences have no continuous alpha extension");
  }
  return 0.0;
}

std::optional<std::size_t> DeloneSequence::max_index() const {
  if (spec_.family == Family::Table) return spec_.table.size() - 1;
  return std::nullopt;
}

DeloneCertificate DeloneSequence::certify(std::size_t n_max) const {
  DeloneCertificate cert;
  cert.min_gap = std::numeric_limits<double>::infinity();
  cert.max_gap = 0.0;
  double prev = value(0);
  for (std::size_t n = 0; n < n_max; ++n) {
    const double cur = value(n + 1);
    const double gap = cur - prev;
    if (gap <= 0.0 && !cert.first_violation) cert.first_violation = n;
    cert.min_gap = std::min(cert.min_gap, gap);
    cert.max_gap = std::max(cert.max_gap, gap);
    prev = cur;
  }
  cert.ok = cert.min_gap > 0.0 && std::isfinite(cert.max_gap);
  return cert;
}

DeloneSequence make_sequence(SequenceSpec spec) { return DeloneSequence(std::move(spec)); }

DeloneSequence beta_integers(BetaKind kind, double beta) {
  return DeloneSequence(SequenceSpec::beta_integer(kind, beta));
}

DeloneCertificate certify_delone(const DeloneSequence& seq, std::size_t n_max) {
  return seq.certify(n_max);
}

// ---- JSON (de)serialization ------------------------------------------------

nlohmann::json SequenceSpec::to_json() const {
  nlohmann::json p = nlohmann::json::object();
  switch (family) {
    case Family::Naturals: break;
    case Family::ConstantShift: p["epsilon"] = epsilon; break;
    case Family::Homographic: p["a"] = a; p["b"] = b; p["c"] = c; p["d"] = d; break;
    case Family::Periodic: p["epsilon"] = epsilon; p["omega"] = omega; break;
    case Family::SineOverN: p["epsilon"] = epsilon; p["kappa"] = kappa; break;
    case Family::FractionalPeriodic: p["lambda"] = lambda; p["mu"] = mu; p["nu"] = nu; break;
    case Family::BetaInteger:
      p["kind"] = beta_kind == BetaKind::Golden ? "golden"
                  : beta_kind == BetaKind::SimpleUnit ? "simple_unit" : "nonsimple_unit";
      if (beta_kind != BetaKind::Golden) p["beta"] = beta;
      break;
    case Family::HypergeometricPQ: p["a"] = pfq_a; p["b"] = pfq_b; break;
    case Family::Table: p["values"] = table; break;
  }
  return nlohmann::json{{"family", family_name(family)}, {"params", p}};
}

SequenceSpec SequenceSpec::from_json(const nlohmann::json& j) {
  const std::string fam = j.at("family").get<std::string>();
  const nlohmann::json p = j.value("params", nlohmann::json::object());
  if (fam == "naturals") return naturals();
  if (fam == "constant_shift") return constant_shift(p.at("epsilon").get<double>());
  if (fam == "homographic")
    return homographic(p.at("a").get<double>(), p.value("b", 0.0),
                       p.at("c").get<double>(), p.at("d").get<double>());
  if (fam == "periodic")
    return periodic(p.at("epsilon").get<double>(), p.at("omega").get<double>());
  if (fam == "sine_over_n")
    return sine_over_n(p.at("epsilon").get<double>(), p.at("kappa").get<double>());
  if (fam == "fractional_periodic")
    return fractional_periodic(p.at("lambda").get<double>(), p.at("mu").get<double>(),
                               p.value("nu", 0.0));
  if (fam == "beta_integer") {
    const std::string kind = p.value("kind", "golden");
    BetaKind k = kind == "golden" ? BetaKind::Golden
                 : kind == "simple_unit" ? BetaKind::SimpleUnit
                 : kind == "nonsimple_unit" ? BetaKind::NonsimpleUnit
                 : throw std::invalid_argument("unknown beta_integer kind: " + kind);
    return beta_integer(k, p.value("beta", 0.0));
  }
  if (fam == "hypergeometric_pq")
    return hypergeometric_pq(p.at("a").get<std::vector<double>>(),
                             p.at("b").get<std::vector<double>>());
  if (fam == "table") return from_table(p.at("values").get<std::vector<double>>());
  throw std::invalid_argument("unknown sequence family: " + fam);
}

}  // namespace delone
