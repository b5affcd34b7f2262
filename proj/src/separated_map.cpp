#include "infharm/separated_map.hpp"

namespace infharm {

SeparatedMap SeparatedMap::minus_f(PlanarCurve f) {
  auto fp = std::make_shared<const PlanarCurve>(std::move(f));
  return SeparatedMap(Sign::MinusF, fp, nullptr);
}

SeparatedMap SeparatedMap::plus_g(PlanarCurve f, PlanarCurve g) {
  return SeparatedMap(Sign::PlusG,
                      std::make_shared<const PlanarCurve>(std::move(f)),
                      std::make_shared<const PlanarCurve>(std::move(g)));
}

CurveJet SeparatedMap::g_jet(double y) const {
  if (sign_ == Sign::PlusG) return g_->jet(y);
  CurveJet j = f_->jet(y);
  j.f = -j.f;
  j.d1 = -j.d1;
  j.d2 = -j.d2;
  return j;
}

Jet2 SeparatedMap::jet(double x, double y) const {
  const CurveJet fx = f_jet(x);
  const CurveJet gy = g_jet(y);
  Jet2 j;
  j.u = fx.f + gy.f;
  j.du.col(0) = fx.d1;
  j.du.col(1) = gy.d1;
  j.hxx = fx.d2;
  j.hxy = Vec2::Zero();
  j.hyy = gy.d2;
  return j;
}

Vec2 SeparatedMap::value(double x, double y) const {
  if (sign_ == Sign::MinusF) return f_->value(x) - f_->value(y);
  return f_->value(x) + g_->value(y);
}

}  // namespace infharm
