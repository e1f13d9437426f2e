#pragma once

#include "delone/sequence.hpp"

namespace delone {

/// Generalized Heisenberg Algebra data for an invertible perturbation:
/// gamma inverts n = x_n + gamma(x_n), delta(x) = gamma(x) + alpha(x + 1 +
/// gamma(x)), and the characteristic function h(x) = x + 1 + delta(x)
/// satisfies h(x_n) = x_{n+1}. Built on the original sequence, never the
/// renormalized one; mixing with renorm outputs is undefined.
class GhaModel {
 public:
  explicit GhaModel(const DeloneSequence& seq);

  double gamma(double x) const;
  double delta(double x) const;
  double h(double x) const { return x + 1.0 + delta(x); }

  const DeloneSequence& sequence() const { return seq_; }

 private:
  const DeloneSequence& seq_;
  bool projective_ = false;  // alpha(n) = a n / (c n + d): closed-form gamma
  double a_ = 0.0, c_ = 0.0, d_ = 0.0;
};

GhaModel make_gha(const DeloneSequence& seq);

}  // namespace delone
