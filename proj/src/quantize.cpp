#include "delone/quantize.hpp"

#include "delone/moments.hpp"
#include "delone/quadrature.hpp"
#include "delone/series.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(const RenormalizedSequence& ren,
                                                          std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("ladder_matrices: dim must be >= 2");
  if (dim > ren.n_max()) throw std::invalid_argument("ladder_matrices: dim exceeds table");
  OperatorMatrix lower(dim), raise(dim);
  for (std::size_t n = 1; n < dim; ++n) {
    const double x = ren.value(n);
    if (x < 0.0) throw std::domain_error("ladder_matrices: negative renormalized value");
    const double s = std::sqrt(x);
    lower.at(n - 1, n) = s;  // a~ e_n = sqrt(xt_n) e_{n-1}
    raise.at(n, n - 1) = s;
  }
  return {lower, raise};
}

CoherentState coherent_state(const RenormalizedSequence& ren, std::complex<double> z,
                             std::size_t dim, double tol) {
  if (dim == 0 || dim > ren.n_max() + 1)
    throw std::invalid_argument("coherent_state: dim out of range for the table");
  const double t = std::norm(z);
  const double lnN = exp_series(ren.tilde(), t, std::min(tol, 1e-13)).value_ln;

  CoherentState cs;
  cs.z = z;
  cs.dim = dim;
  cs.coeffs.resize(dim);
  const double lnt = (t > 0.0) ? std::log(t) : 0.0;
  double norm2 = 0.0;
  std::complex<double> zpow = 1.0;
  for (std::size_t n = 0; n < dim; ++n) {
    const double ln_mag2 =
        (t > 0.0 ? static_cast<double>(n) * lnt : 0.0) - lnN - ren.log_factorial(n);
    const double p = (t > 0.0 || n == 0) ? std::exp(ln_mag2) : 0.0;
    norm2 += p;
    if (n > 0) zpow *= z;
    const double mag = std::sqrt(p);
    cs.coeffs[n] = (std::abs(zpow) > 0.0) ? zpow / std::abs(zpow) * mag
                                          : std::complex<double>(mag, 0.0);
  }
  cs.tail = 1.0 - norm2;
  if (!(cs.tail < tol)) {
    // scan forward for the dim that would satisfy the tail rule
    std::size_t m = dim;
    double extra = 0.0;
    while (m <= ren.n_max() && cs.tail - extra >= tol) {
      extra += std::exp(static_cast<double>(m) * lnt - lnN - ren.log_factorial(m));
      ++m;
    }
    throw truncation_error("coherent_state: truncation tail above tolerance", m);
  }
  return cs;
}

std::size_t auto_dim(const RenormalizedSequence& ren, double z_abs_max, double tol) {
  const double t = z_abs_max * z_abs_max;
  const double lnN = exp_series(ren.tilde(), t, std::min(tol, 1e-13)).value_ln;
  const double lnt = (t > 0.0) ? std::log(t) : 0.0;
  double norm2 = 0.0;
  for (std::size_t n = 0; n <= ren.n_max(); ++n) {
    norm2 += (t > 0.0 || n == 0)
                 ? std::exp(static_cast<double>(n) * lnt - lnN - ren.log_factorial(n))
                 : 0.0;
    if (1.0 - norm2 < tol) return std::max<std::size_t>(16, n + 1);
  }
  throw truncation_error("auto_dim: moment table too short for this |z|", ren.n_max() + 1);
}

namespace {

std::vector<double> resolution_diag(const DeloneSequence& base,
                                    const std::function<double(std::size_t)>& ln_fact,
                                    std::size_t dim, double tol) {
  const double ln_i0 = moment_integral(base, 0, tol);
  // mu_0 = I(0) / x_0! = I(0)
  std::vector<double> diag(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const double ln_in = (n == 0) ? ln_i0 : moment_integral(base, n, tol);
    diag[n] = std::exp(ln_in - ln_i0 - ln_fact(n));
  }
  return diag;
}

}  // namespace

std::vector<double> resolution_check(const DeloneSequence& base,
                                     const RenormalizedSequence& ren, std::size_t dim,
                                     double tol) {
  if (dim > ren.n_max() + 1)
    throw std::invalid_argument("resolution_check: dim exceeds table");
  return resolution_diag(
      base, [&](std::size_t n) { return ren.log_factorial(n); }, dim, tol);
}

std::vector<double> resolution_check_raw(const DeloneSequence& base, std::size_t dim,
                                         double tol) {
  return resolution_diag(
      base, [&](std::size_t n) { return base.log_factorial(n); }, dim, tol);
}

RadialSymbol symbol_one() {
  return {[](int, double) { return std::complex<double>(1.0, 0.0); }, {0}};
}
RadialSymbol symbol_z() {
  return {[](int, double u) { return std::complex<double>(std::sqrt(u), 0.0); }, {1}};
}
RadialSymbol symbol_zbar() {
  return {[](int, double u) { return std::complex<double>(std::sqrt(u), 0.0); }, {-1}};
}
RadialSymbol symbol_zzbar() {
  return {[](int, double u) { return std::complex<double>(u, 0.0); }, {0}};
}
RadialSymbol symbol_q() {
  // q = (z + zbar)/sqrt(2): c_{+-1}(u) = sqrt(u/2)
  return {[](int, double u) { return std::complex<double>(std::sqrt(0.5 * u), 0.0); },
          {-1, 1}};
}
RadialSymbol symbol_p() {
  // p = (z - zbar)/(i sqrt 2): c_1 = -i sqrt(u/2), c_{-1} = +i sqrt(u/2)
  return {[](int k, double u) {
            const double m = std::sqrt(0.5 * u);
            return (k == 1) ? std::complex<double>(0.0, -m) : std::complex<double>(0.0, m);
          },
          {-1, 1}};
}

OperatorMatrix quantize_radial(const DeloneSequence& base, const RenormalizedSequence& ren,
                               const RadialSymbol& symbol, std::size_t dim, double tol) {
  if (dim == 0 || dim > ren.n_max() + 1)
    throw std::invalid_argument("quantize_radial: dim out of range for the table");
  const double series_tol = std::min(tol * 1e-2, 1e-13);
  const double ln_mu0 = moment_integral(base, 0, tol);  // mu_0 = I(0)

  OperatorMatrix a(dim);
  for (std::size_t n = 0; n < dim; ++n)
    for (int k : symbol.bands) {
      const long np_l = static_cast<long>(n) + k;
      if (np_l < 0 || np_l >= static_cast<long>(dim)) continue;
      const std::size_t np = static_cast<std::size_t>(np_l);
      const double s = 0.5 * static_cast<double>(n + np);
      // u = e^v substitution: integrand exp((s+1)v - ln N(e^v)) c_k(e^v)
      auto ln_env = [&](double v) {
        return (s + 1.0) * v - exp_series(base, std::exp(v), series_tol).value_ln;
      };
      auto g = [&](double v) { return symbol.coeff(k, std::exp(v)); };
      const ScaledQuadResult r =
          integrate_peaked(ln_env, g, std::log(s + 1.0), tol * 0.1);
      if (!r.converged)
        throw quadrature_error("quantize_radial: entry integral did not converge");
      const double ln_pref =
          r.scale - ln_mu0 - 0.5 * (ren.log_factorial(n) + ren.log_factorial(np));
      if (!std::isfinite(ln_pref))
        throw std::domain_error("quantize_radial: entry failed the decay check");
      a.at(n, np) = r.value * std::exp(ln_pref);
    }
  return a;
}

std::pair<OperatorMatrix, OperatorMatrix> position_momentum(const RenormalizedSequence& ren,
                                                            std::size_t dim) {
  auto [low, rai] = ladder_matrices(ren, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  OperatorMatrix q(dim), p(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      q.at(i, j) = (low.at(i, j) + rai.at(i, j)) * inv_sqrt2;
      p.at(i, j) = (low.at(i, j) - rai.at(i, j)) * std::complex<double>(0.0, -inv_sqrt2);
    }
  return {q, p};
}

std::complex<double> lower_symbol(const OperatorMatrix& a, const RenormalizedSequence& ren,
                                  std::complex<double> z, std::size_t dim, double tol) {
  const CoherentState cs = coherent_state(ren, z, dim, tol);
  const auto av = a.apply(cs.coeffs);
  std::complex<double> out{};
  for (std::size_t i = 0; i < dim; ++i) out += std::conj(cs.coeffs[i]) * av[i];
  return out;
}

UncertaintyResult uncertainty_product(const RenormalizedSequence& ren, std::complex<double> z,
                                      std::size_t dim, double tol) {
  const CoherentState cs = coherent_state(ren, z, dim, tol);
  auto [q, p] = position_momentum(ren, dim);

  auto expect = [&](const OperatorMatrix& a) {
    const auto av = a.apply(cs.coeffs);
    std::complex<double> out{};
    for (std::size_t i = 0; i < dim; ++i) out += std::conj(cs.coeffs[i]) * av[i];
    return out;
  };
  const double mq = expect(q).real();
  const double mp = expect(p).real();
  const double mq2 = expect(q * q).real();
  const double mp2 = expect(p * p).real();
  UncertaintyResult r;
  r.product = std::sqrt(std::max(0.0, mq2 - mq * mq)) *
              std::sqrt(std::max(0.0, mp2 - mp * mp));

  // independent path: (1/2) <xt_{N+1} - xt_N>
  double acc = 0.0;
  for (std::size_t n = 0; n + 1 <= ren.n_max() && n < dim; ++n)
    acc += std::norm(cs.coeffs[n]) * (ren.value(n + 1) - ren.value(n));
  r.product_expectation = 0.5 * acc;

  double inf_jump = 0.0, sup_jump = 0.0;
  bool first = true;
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const double jump = ren.value(n + 1) - ren.value(n) - 1.0;  // alpha~ jump
    if (first || jump < inf_jump) inf_jump = jump;
    if (first || jump > sup_jump) sup_jump = jump;
    first = false;
  }
  r.lower_bound = 0.5 * (1.0 + inf_jump);
  r.upper_bound = 0.5 * (1.0 + sup_jump);
  return r;
}

}  // namespace delone
