#pragma once

#include "infharm/curve.hpp"
#include "infharm/types.hpp"

#include <memory>

namespace infharm {

/// Separated-variables map u(x,y) = f(x) + g(y) built from unit-speed
/// curves. The MinusF sign realizes g = -f, i.e. u(x,y) = f(x) - f(y);
/// PlusG pairs curve f with an independent curve g.
class SeparatedMap {
 public:
  enum class Sign { MinusF, PlusG };

  /// u(x,y) = f(x) - f(y).
  static SeparatedMap minus_f(PlanarCurve f);
  /// u(x,y) = f(x) + g(y).
  static SeparatedMap plus_g(PlanarCurve f, PlanarCurve g);

  Sign sign() const { return sign_; }
  const PlanarCurve& fcurve() const { return *f_; }
  const PlanarCurve& gcurve() const { return sign_ == Sign::MinusF ? *f_ : *g_; }

  /// Jet of f at x and of g at y (with the MinusF negation already applied
  /// to the g side).
  CurveJet f_jet(double x) const { return f_->jet(x); }
  CurveJet g_jet(double y) const;

  /// Full second-order jet: u = f(x)+g(y), Du = (f'(x), g'(y)) as columns,
  /// Hxx = f''(x), Hyy = g''(y), Hxy = 0 exactly.
  Jet2 jet(double x, double y) const;

  /// Map value only (no derivatives); what finite-difference stencils see.
  Vec2 value(double x, double y) const;

 private:
  SeparatedMap(Sign sign, std::shared_ptr<const PlanarCurve> f,
               std::shared_ptr<const PlanarCurve> g)
      : sign_(sign), f_(std::move(f)), g_(std::move(g)) {}

  Sign sign_;
  std::shared_ptr<const PlanarCurve> f_;
  std::shared_ptr<const PlanarCurve> g_;
};

}  // namespace infharm
