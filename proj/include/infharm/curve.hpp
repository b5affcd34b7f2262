#pragma once

#include "infharm/kprofile.hpp"
#include "infharm/types.hpp"

#include <vector>

namespace infharm {

/// Unit-speed planar curve f(t) = integral of (cos K, sin K) from 0 to t.
/// f' and f'' are closed-form in the profile; f itself is computed by
/// adaptive Gauss-Kronrod quadrature against a table of anchor values at
/// unit spacing, so each evaluation integrates only the fractional
/// remainder. The anchor table is built in the constructor and never
/// mutated afterwards, so concurrent reads need no synchronization.
class PlanarCurve {
 public:
  struct Options {
    double anchor_min = -16.0;
    double anchor_max = 16.0;
    double quad_tol = 1e-12;  // absolute tolerance on f
  };

  explicit PlanarCurve(KProfile profile);
  PlanarCurve(KProfile profile, Options opts);

  const KProfile& profile() const { return profile_; }

  /// (f(t), f'(t), f''(t)); the derivatives are exact in the profile:
  /// f' = (cos K, sin K), f'' = K' * (-sin K, cos K).
  CurveJet jet(double t) const;

  Vec2 value(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;

 private:
  Vec2 integrate_split(double a, double b, double tol) const;

  KProfile profile_;
  Options opts_;
  double anchor0_ = 0.0;  // parameter of anchors_[0]
  std::vector<Vec2> anchors_;
};

}  // namespace infharm
