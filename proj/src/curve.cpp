#include "infharm/curve.hpp"

#include "infharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infharm {
namespace {

Vec2 tangent(const KProfile& p, double t) {
  const double k = p.eval(t).first;
  return {std::cos(k), std::sin(k)};
}

}  // namespace

PlanarCurve::PlanarCurve(KProfile profile)
    : PlanarCurve(std::move(profile), Options{}) {}

PlanarCurve::PlanarCurve(KProfile profile, Options opts)
    : profile_(std::move(profile)), opts_(opts) {
  double lo = opts_.anchor_min, hi = opts_.anchor_max;
  if (profile_.bounded_domain()) {
    if (profile_.domain_min() > 0.0 || profile_.domain_max() < 0.0)
      throw std::invalid_argument("PlanarCurve: tabulated profile must cover t = 0");
    lo = std::max(lo, profile_.domain_min());
    hi = std::min(hi, profile_.domain_max());
  }
  if (!(lo <= 0.0 && hi >= 0.0))
    throw std::invalid_argument("PlanarCurve: anchor range must contain 0");

  const int below = static_cast<int>(std::floor(-lo));
  const int above = static_cast<int>(std::floor(hi));
  anchor0_ = -below;
  anchors_.assign(below + above + 1, Vec2::Zero());

  // f(0) = 0 exactly; chain unit panels outwards in both directions.
  const double panel_tol = opts_.quad_tol / 64.0;
  for (int n = below + 1; n < static_cast<int>(anchors_.size()); ++n)
    anchors_[n] = anchors_[n - 1] + integrate_split(anchor0_ + (n - 1), anchor0_ + n, panel_tol);
  for (int n = below - 1; n >= 0; --n)
    anchors_[n] = anchors_[n + 1] - integrate_split(anchor0_ + n, anchor0_ + n + 1, panel_tol);
}

Vec2 PlanarCurve::integrate_split(double a, double b, double tol) const {
  // Split at profile piece boundaries so every panel is smooth.
  std::vector<double> cuts{a};
  for (double br : profile_.breakpoints())
    if (br > a && br < b) cuts.push_back(br);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  auto f = [this](double t) { return tangent(profile_, t); };
  Vec2 total = Vec2::Zero();
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate_gk15(f, cuts[i], cuts[i + 1], tol / cuts.size());
  return total;
}

Vec2 PlanarCurve::value(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("PlanarCurve: non-finite parameter");
  if (profile_.bounded_domain() && (t < profile_.domain_min() || t > profile_.domain_max()))
    throw std::out_of_range("PlanarCurve: parameter outside tabulated range");

  // Nearest anchor at or below t, clamped to the table.
  int idx = static_cast<int>(std::floor(t - anchor0_));
  idx = std::clamp(idx, 0, static_cast<int>(anchors_.size()) - 1);
  const double ta = anchor0_ + idx;
  if (t == ta) return anchors_[idx];
  return anchors_[idx] + integrate_split(std::min(ta, t), std::max(ta, t),
                                         opts_.quad_tol / 8.0) *
                             (t >= ta ? 1.0 : -1.0);
}

Vec2 PlanarCurve::derivative(double t) const {
  return tangent(profile_, t);
}

Vec2 PlanarCurve::second_derivative(double t) const {
  const auto [k, kp] = profile_.eval(t);
  return {-kp * std::sin(k), kp * std::cos(k)};
}

CurveJet PlanarCurve::jet(double t) const {
  CurveJet j;
  j.f = value(t);
  const auto [k, kp] = profile_.eval(t);
  j.d1 = {std::cos(k), std::sin(k)};
  j.d2 = {-kp * std::sin(k), kp * std::cos(k)};
  return j;
}

}  // namespace infharm
