#include "infharm/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace infharm {
namespace {

// 15-point Kronrod abscissae on [-1,1] (positive half) and weights,
// with the embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  Vec2 kronrod;
  double error;
};

PanelResult gk15_panel(const std::function<Vec2(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  const Vec2 fc = f(mid);
  Vec2 gauss = kWg[3] * fc;
  Vec2 kronrod = kWgk[7] * fc;

  for (int k = 0; k < 7; ++k) {
    const double dx = half * kXgk[k];
    const Vec2 lo = f(mid - dx);
    const Vec2 hi = f(mid + dx);
    kronrod += kWgk[k] * (lo + hi);
    if (k % 2 == 1) gauss += kWg[k / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, (kronrod - gauss).norm()};
}

Vec2 integrate_rec(const std::function<Vec2(double)>& f, double a, double b,
                   double tol, int depth, int max_depth, double& worst_est) {
  const PanelResult r = gk15_panel(f, a, b);
  if (r.error <= tol) return r.kronrod;
  if (depth >= max_depth) {
    worst_est = std::max(worst_est, r.error);
    return r.kronrod;
  }
  const double mid = 0.5 * (a + b);
  return integrate_rec(f, a, mid, 0.5 * tol, depth + 1, max_depth, worst_est) +
         integrate_rec(f, mid, b, 0.5 * tol, depth + 1, max_depth, worst_est);
}

}  // namespace

Vec2 integrate_gk15(const std::function<Vec2(double)>& f, double a, double b,
                    double abs_tol, int max_depth) {
  if (a == b) return Vec2::Zero();
  const double sign = (b >= a) ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  double worst_est = 0.0;
  const Vec2 v = integrate_rec(f, lo, hi, abs_tol, 0, max_depth, worst_est);
  if (worst_est > abs_tol) throw QuadratureError(worst_est, abs_tol);
  return sign * v;
}

}  // namespace infharm
