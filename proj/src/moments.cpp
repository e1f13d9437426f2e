#include "delone/moments.hpp"

#include "delone/quadrature.hpp"
#include "delone/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace delone {

namespace {

// ln N(e^u) memoized per sequence instance; quadrature nodes repeat across
// adjacent moment orders, and identical-key reinsertions are idempotent.
class LnNCache {
 public:
  explicit LnNCache(const DeloneSequence& seq, double tol) : seq_(seq), tol_(tol) {}

  double operator()(double u) const {
    {
      std::lock_guard<std::mutex> lk(mutex_);
      auto it = map_.find(u);
      if (it != map_.end()) return it->second;
    }
    const double v = exp_series(seq_, std::exp(u), tol_).value_ln;
    std::lock_guard<std::mutex> lk(mutex_);
    map_.emplace(u, v);
    return v;
  }

 private:
  const DeloneSequence& seq_;
  double tol_;
  mutable std::mutex mutex_;
  mutable std::map<double, double> map_;
};

double ln_moment_integral(std::size_t n, double tol, const LnNCache& lnN) {
  // I(n) = int t^n / N(t) dt = int exp((n+1)u - ln N(e^u)) du
  auto ln_env = [&](double u) {
    return (static_cast<double>(n) + 1.0) * u - lnN(u);
  };
  const double hint = std::log(static_cast<double>(n) + 1.0);
  const LogQuadResult r = log_integrate_peaked(ln_env, hint, tol * 0.1);
  if (!r.converged)
    throw quadrature_error("moment_integral: adaptive scheme exhausted its budget");
  return r.ln_value;
}

}  // namespace

double moment_integral(const DeloneSequence& seq, std::size_t n, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("moment_integral: requires tol > 0");
  LnNCache lnN(seq, std::min(tol * 1e-2, 1e-13));
  return ln_moment_integral(n, tol, lnN);
}

MomentTable mu_sequence(const DeloneSequence& seq, std::size_t n_max, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("mu_sequence: requires tol > 0");
  LnNCache lnN(seq, std::min(tol * 1e-2, 1e-13));
  MomentTable table;
  table.n_max = n_max;
  table.mu.reserve(n_max + 1);
  table.abs_err.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto ln_env = [&](double u) {
      return (static_cast<double>(n) + 1.0) * u - lnN(u);
    };
    const double hint = std::log(static_cast<double>(n) + 1.0);
    const LogQuadResult r = log_integrate_peaked(ln_env, hint, tol * 0.1);
    if (!r.converged)
      throw quadrature_error("mu_sequence: adaptive scheme exhausted its budget");
    const double mu = std::exp(r.ln_value - seq.log_factorial(n));
    table.mu.push_back(mu);
    table.abs_err.push_back(mu * r.rel_err);
  }
  return table;
}

namespace {

// determinant of a small dense matrix by partial-pivot LU, in place
double lu_det(std::vector<double>& m, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = -det;
    }
    const double pivot = m[k * n + k];
    if (pivot == 0.0) return 0.0;
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return det;
}

}  // namespace

std::vector<HankelResult> hankel_determinants(const DeloneSequence& seq, std::size_t n_max) {
  if (n_max == 0 || n_max > 15)
    throw std::domain_error("hankel_determinants: size must be in [1, 15]");
  std::vector<double> lf(2 * n_max + 1);
  for (std::size_t k = 0; k <= 2 * n_max; ++k) lf[k] = seq.log_factorial(k);

  std::vector<HankelResult> out;
  out.reserve(n_max);
  for (std::size_t size = 1; size <= n_max; ++size) {
    HankelResult r;
    r.size = size;
    // symmetric scaling by the diagonal keeps entries O(1)
    for (int which = 0; which < 2; ++which) {
      const std::size_t off = static_cast<std::size_t>(which);
      std::vector<double> m(size * size);
      double ln_scale = 0.0;
      for (std::size_t i = 0; i < size; ++i) ln_scale += lf[2 * i + off];
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          m[i * size + j] =
              std::exp(lf[i + j + off] - 0.5 * lf[2 * i + off] - 0.5 * lf[2 * j + off]);
      const double det = lu_det(m, size);
      if (which == 0) {
        r.det_a = det;
        r.ln_scale_a = ln_scale;
      } else {
        r.det_b = det;
        r.ln_scale_b = ln_scale;
      }
      if (std::abs(det) < 1e-10) r.conditioning_warning = true;
    }
    out.push_back(r);
  }
  return out;
}

double asymptotic_mu(AsymptoticModel model, double epsilon, std::size_t n) {
  if (n == 0) throw std::domain_error("asymptotic_mu: requires n >= 1");
  switch (model) {
    case AsymptoticModel::ConstantShift:
      return 1.0 + 1.0 / (std::tgamma(epsilon) * static_cast<double>(n) *
                          std::pow(2.0, static_cast<double>(n)));
    case AsymptoticModel::InverseSquare:
      return 1.0 + epsilon / (static_cast<double>(n) * static_cast<double>(n));
  }
  throw std::logic_error("asymptotic_mu: unknown model");
}

PropConditionReport check_prop_conditions(const DeloneSequence& seq,
                                          const std::vector<double>& x_grid,
                                          double threshold, double x_floor) {
  if (!seq.has_alpha_extension())
    throw std::invalid_argument("check_prop_conditions: family has no continuous extension");
  PropConditionReport rep;
  rep.threshold = threshold;
  const double h = 1e-5;
  double max_p = 0.0, max_s = 0.0;
  double max_p_floor = 0.0, max_s_floor = 0.0;
  for (double x : x_grid) {
    const double fp = seq.alpha_continuous(x + h), fm = seq.alpha_continuous(x - h);
    const double f0 = seq.alpha_continuous(x);
    const double d1 = std::abs((fp - fm) / (2.0 * h));
    const double d2 = std::abs(x * (fp - 2.0 * f0 + fm) / (h * h));
    max_p = std::max(max_p, d1);
    max_s = std::max(max_s, d2);
    if (x >= x_floor) {
      max_p_floor = std::max(max_p_floor, d1);
      max_s_floor = std::max(max_s_floor, d2);
    }
  }
  rep.max_abs_alpha_prime = max_p;
  rep.max_x_alpha_second = max_s;
  rep.ok = max_p_floor < threshold && max_s_floor < threshold;
  return rep;
}

}  // namespace delone
