#include "delone/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace delone {

namespace {

std::vector<double> offdiag_c(const RenormalizedSequence& ren, std::size_t n_max) {
  std::vector<double> c(n_max + 1, 0.0);
  for (std::size_t k = 1; k <= n_max; ++k) c[k] = std::sqrt(0.5 * ren.value(k));
  return c;
}

}  // namespace

PolySet monic_polys(const RenormalizedSequence& ren, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("monic_polys: n_max must be >= 1");
  if (n_max > 60)
    throw std::invalid_argument("monic_polys: coefficient tables capped at n_max = 60");
  if (n_max > ren.n_max()) throw std::invalid_argument("monic_polys: n_max exceeds table");

  PolySet ps;
  ps.n_max = n_max;
  ps.c = offdiag_c(ren, n_max);
  ps.coeffs.resize(n_max + 1);
  ps.coeffs[0] = {1.0};
  ps.coeffs[1] = {0.0, 1.0};
  for (std::size_t n = 1; n < n_max; ++n) {
    const double cn2 = ps.c[n] * ps.c[n];
    std::vector<double> next(n + 2, 0.0);
    for (std::size_t j = 0; j <= n; ++j) next[j + 1] += ps.coeffs[n][j];  // lambda * q_n
    for (std::size_t j = 0; j < n; ++j) next[j] -= cn2 * ps.coeffs[n - 1][j];
    ps.coeffs[n + 1] = std::move(next);
  }
  for (const auto& row : ps.coeffs)
    for (double v : row)
      if (std::abs(v) > 1e12) ps.conditioning_warning = true;
  return ps;
}

double monic_poly_value(const RenormalizedSequence& ren, std::size_t n, double lambda) {
  if (n > ren.n_max()) throw std::invalid_argument("monic_poly_value: n exceeds table");
  double qm1 = 0.0, q = 1.0;  // q_{-1}, q_0
  for (std::size_t k = 0; k < n; ++k) {
    const double ck2 = (k >= 1) ? 0.5 * ren.value(k) : 0.0;
    const double next = lambda * q - ck2 * qm1;
    qm1 = q;
    q = next;
  }
  return q;
}

OperatorMatrix truncated_position_matrix(const RenormalizedSequence& ren, std::size_t n) {
  if (n < 1) throw std::invalid_argument("truncated_position_matrix: n must be >= 1");
  if (n > ren.n_max() + 1)
    throw std::invalid_argument("truncated_position_matrix: n exceeds table");
  OperatorMatrix m(n);
  for (std::size_t k = 1; k < n; ++k) {
    const double c = std::sqrt(0.5 * ren.value(k));
    m.at(k - 1, k) = c;
    m.at(k, k - 1) = c;
  }
  return m;
}

SpectrumResult spectrum(const RenormalizedSequence& ren, std::size_t n) {
  if (n < 1) throw std::invalid_argument("spectrum: n must be >= 1");
  std::vector<double> d(n, 0.0);      // diagonal (zero for Qt)
  std::vector<double> e(n, 0.0);      // e[i]: off-diagonal between i and i+1
  for (std::size_t k = 1; k < n; ++k) e[k - 1] = std::sqrt(0.5 * ren.value(k));
  std::vector<double> w(n, 0.0);      // first row of the eigenvector matrix
  w[0] = 1.0;

  // implicit-shift QL for a symmetric tridiagonal matrix; rotations are
  // applied to w so that w[i] tracks the e_0 component of eigenvector i
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m == l) break;
      if (++iter > 60)
        throw std::runtime_error("spectrum: QL failed to converge at index " +
                                 std::to_string(l));
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        f = w[ii + 1];
        w[ii + 1] = s * w[ii] + c * f;
        w[ii] = c * w[ii] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  SpectrumResult out;
  out.eigenvalues.reserve(n);
  out.first_components.reserve(n);
  for (std::size_t i : idx) {
    out.eigenvalues.push_back(d[i]);
    out.first_components.push_back(w[i]);
  }
  return out;
}

std::vector<double> spectrum_bisection(const RenormalizedSequence& ren, std::size_t n) {
  if (n < 1) throw std::invalid_argument("spectrum_bisection: n must be >= 1");
  std::vector<double> b2(n, 0.0);  // squared off-diagonals
  double radius = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double c = std::sqrt(0.5 * ren.value(k));
    b2[k] = c * c;
    radius = std::max(radius, 2.0 * c);  // Gershgorin bound, zero diagonal
  }

  // Sturm count: number of eigenvalues strictly below x
  auto count_below = [&](double x) {
    std::size_t count = 0;
    double q = -x;  // d_0 - x
    if (q < 0.0) ++count;
    for (std::size_t k = 1; k < n; ++k) {
      const double denom = (q == 0.0) ? 1e-300 : q;
      q = -x - b2[k] / denom;
      if (q < 0.0) ++count;
    }
    return count;
  };

  std::vector<double> eig(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lo = -radius - 1.0, hi = radius + 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    eig[k] = 0.5 * (lo + hi);
  }
  return eig;
}

std::complex<double> generating_function(const RenormalizedSequence& ren,
                                         std::complex<double> z, double lambda,
                                         std::size_t n_trunc, double tol) {
  if (n_trunc > ren.n_max())
    throw std::length_error("generating_function: n_trunc exceeds table");
  const double az = std::abs(z);
  const double ln_az = (az > 0.0) ? std::log(az) : 0.0;
  const std::complex<double> phase = (az > 0.0) ? z / az : std::complex<double>(1.0, 0.0);

  std::complex<double> sum{};
  std::complex<double> ph = 1.0;
  double qm1 = 0.0, q = 1.0;
  std::size_t shrinking = 0;
  for (std::size_t n = 0; n <= n_trunc; ++n) {
    const double ln_w = 0.5 * static_cast<double>(n) * std::log(2.0) +
                        static_cast<double>(n) * ln_az - ren.log_factorial(n);
    const double term_mag = std::exp(ln_w) * std::abs(q);
    sum += ph * std::exp(ln_w) * q;
    if (az == 0.0) return sum;  // only n = 0 contributes
    if (n > 0) {
      // monotone decay is too strict near polynomial zero crossings; five
      // consecutive negligible terms certify the tail instead
      shrinking = (term_mag < tol * std::abs(sum)) ? shrinking + 1 : 0;
      if (shrinking >= 5) return sum;
    }
    // advance q_n and the z phase
    const double cn2 = (n >= 1) ? 0.5 * ren.value(n) : 0.0;
    const double next = lambda * q - cn2 * qm1;
    qm1 = q;
    q = next;
    ph *= phase;
  }
  throw std::length_error("generating_function: tail not certified at n_trunc");
}

}  // namespace delone
