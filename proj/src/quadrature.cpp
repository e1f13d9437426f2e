#include "delone/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace delone {

namespace {

// Gauss-Kronrod 7-15 abscissae/weights on [-1, 1] (nonnegative half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
  double a, b;
  T integral;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T resk{}, resg{};
  double resabs = 0.0;
  for (int j = 0; j < 8; ++j) {
    const T f1 = f(c - h * kXgk[j]);
    const T f2 = (j == 7) ? f1 : f(c + h * kXgk[j]);
    const T sum = (j == 7) ? f1 : T(f1 + f2);
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
    resabs += kWgk[j] * ((j == 7) ? std::abs(f1) : std::abs(f1) + std::abs(f2));
  }
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.integral = h * resk;
  const double diff = std::abs(resk - resg) * h;
  const double scale = resabs * h;
  // QUADPACK-style sharpened estimate
  p.err = (scale > 0.0 && diff > 0.0)
              ? std::min(diff, scale * std::pow(200.0 * diff / scale, 1.5))
              : diff;
  if (!std::isfinite(p.err)) p.err = diff;
  return p;
}

template <typename T, typename F>
void adapt(const F& f, double a, double b, double rel_tol, double abs_tol,
           std::size_t max_panels, T& total, double& total_err, std::size_t& used,
           bool& converged) {
  std::priority_queue<Panel<T>> heap;
  heap.push(gk15<T>(f, a, b));
  used = 1;
  for (;;) {
    total = T{};
    total_err = 0.0;
    {
      // heap snapshot sums are cheap at these sizes
      std::priority_queue<Panel<T>> copy = heap;
      while (!copy.empty()) {
        total += copy.top().integral;
        total_err += copy.top().err;
        copy.pop();
      }
    }
    const double target = std::max(abs_tol, rel_tol * std::abs(total));
    if (total_err <= target) {
      converged = true;
      return;
    }
    if (used >= max_panels) {
      converged = false;
      return;
    }
    Panel<T> worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    heap.push(gk15<T>(f, worst.a, m));
    heap.push(gk15<T>(f, m, worst.b));
    ++used;
  }
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, std::size_t max_panels) {
  QuadResult r;
  double total = 0.0, err = 0.0;
  adapt<double>(f, a, b, rel_tol, abs_tol, max_panels, total, err, r.panels, r.converged);
  r.value = total;
  r.abs_err = err;
  return r;
}

ComplexQuadResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, double rel_tol, double abs_tol,
                                    std::size_t max_panels) {
  ComplexQuadResult r;
  std::complex<double> total{};
  double err = 0.0;
  adapt<std::complex<double>>(f, a, b, rel_tol, abs_tol, max_panels, total, err, r.panels,
                              r.converged);
  r.value = total;
  r.abs_err = err;
  return r;
}

ScaledQuadResult integrate_peaked(const std::function<double(double)>& ln_env,
                                  const std::function<std::complex<double>(double)>& g,
                                  double peak_hint, double rel_tol, std::size_t max_panels,
                                  double drop) {
  // hill-climb from the hint, then golden-section refine
  double u = peak_hint, step = 0.5;
  double fu = ln_env(u);
  {
    double fr = ln_env(u + step), fl = ln_env(u - step);
    if (fr > fu || fl > fu) {
      const double dir = (fr > fl) ? 1.0 : -1.0;
      double best = std::max(fr, fl);
      double ub = u + dir * step;
      while (true) {
        step *= 2.0;
        const double un = ub + dir * step;
        const double fn = ln_env(un);
        if (fn <= best) break;
        u = ub;
        fu = best;
        ub = un;
        best = fn;
      }
      u = ub;
      fu = best;
    }
  }
  {
    double lo = u - step, hi = u + step;
    const double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = ln_env(x1), f2 = ln_env(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = ln_env(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = ln_env(x1);
      }
    }
    u = 0.5 * (lo + hi);
    fu = ln_env(u);
  }
  const double peak = fu;

  // expand window until ln_env has dropped `drop` below the peak
  double lo = u, hi = u;
  double step_l = 0.25, step_r = 0.25;
  double env_lo = peak, env_hi = peak;
  while (env_lo > peak - drop) {
    lo -= step_l;
    step_l *= 1.5;
    env_lo = ln_env(lo);
  }
  while (env_hi > peak - drop) {
    hi += step_r;
    step_r *= 1.5;
    env_hi = ln_env(hi);
  }

  const bool have_g = static_cast<bool>(g);
  auto integrand = [&](double x) -> std::complex<double> {
    const double e = std::exp(ln_env(x) - peak);
    return have_g ? g(x) * e : std::complex<double>(e, 0.0);
  };

  ScaledQuadResult r;
  r.scale = peak;
  std::size_t panels = 0;
  adapt<std::complex<double>>(integrand, lo, hi, rel_tol, 0.0, max_panels, r.value, r.abs_err,
                              panels, r.converged);
  // tail bound from the observed edge decay (local log-slope)
  const double du = 0.5;
  const double slope_r = std::max(1e-3, (env_hi - ln_env(hi + du)) / du);
  const double slope_l = std::max(1e-3, (env_lo - ln_env(lo - du)) / du);
  double tail = std::exp(env_hi - peak) / slope_r + std::exp(env_lo - peak) / slope_l;
  if (have_g) tail *= std::max(std::abs(g(lo)), std::abs(g(hi)));
  r.abs_err += tail;
  return r;
}

LogQuadResult log_integrate_peaked(const std::function<double(double)>& ln_env,
                                   double peak_hint, double rel_tol, std::size_t max_panels,
                                   double drop) {
  const ScaledQuadResult s =
      integrate_peaked(ln_env, nullptr, peak_hint, rel_tol, max_panels, drop);
  LogQuadResult r;
  const double v = s.value.real();
  if (!(v > 0.0)) throw quadrature_error("log_integrate_peaked: non-positive integral");
  r.ln_value = s.scale + std::log(v);
  r.rel_err = s.abs_err / v;
  r.converged = s.converged;
  return r;
}

}  // namespace delone
