#include "delone/gha.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

GhaModel::GhaModel(const DeloneSequence& seq) : seq_(seq) {
  const SequenceSpec& s = seq.spec();
  if (s.family == Family::ConstantShift)
    throw std::invalid_argument(
        "GhaModel: the constant shift (x_0 = 0) has no GHA structure");
  if (s.family == Family::Table)
    throw std::invalid_argument("GhaModel: table sequences have no continuous inverse");
  if (!seq.has_alpha_extension())
    throw std::invalid_argument("GhaModel: family has no continuous alpha extension");
  if (s.family == Family::Homographic && s.b == 0.0 && s.c != 0.0) {
    projective_ = true;
    a_ = s.a;
    c_ = s.c;
    d_ = s.d;
  }
}

double GhaModel::gamma(double x) const {
  if (x < 0.0) throw std::domain_error("GhaModel::gamma: requires x >= 0");
  if (x == 0.0) return 0.0;  // x_0 = 0 by construction
  if (projective_) {
    // invert x = n + a n/(c n + d): quadratic in n, positive branch
    const double disc =
        c_ * c_ * x * x + 2.0 * c_ * (d_ - a_) * x + (a_ + d_) * (a_ + d_);
    return (std::sqrt(disc) - c_ * x - a_ - d_) / (2.0 * c_);
  }
  // bisection on nu + alpha(nu) = x over [x - 1, x + 1] (|alpha| < 1)
  double lo = std::max(1e-12, x - 1.0), hi = x + 1.0;
  auto f = [&](double nu) { return nu + seq_.alpha_continuous(nu) - x; };
  double flo = f(lo), fhi = f(hi);
  if (flo > 0.0 || fhi < 0.0)
    throw std::domain_error("GhaModel::gamma: map not invertible on the bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + x); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi) - x;
}

double GhaModel::delta(double x) const {
  const double g = gamma(x);
  return g + seq_.alpha_continuous(x + 1.0 + g);
}

GhaModel make_gha(const DeloneSequence& seq) { return GhaModel(seq); }

}  // namespace delone
