#include "infharm/phase.hpp"

#include "infharm/linalg2.hpp"
#include "infharm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infharm {

Classification classify_point(const Jet2& jet, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify_point: tolerance must be positive");
  const Svd2 s = svd2(jet.du);
  const double indicator = s.sigma2 / std::max(1.0, s.sigma1);
  PhaseLabel label;
  if (rank_eps(jet.du, tol) == 2 && indicator > 2.0 * tol)
    label = PhaseLabel::TwoDim;
  else if (indicator < 0.5 * tol)
    label = PhaseLabel::OneDim;
  else
    label = PhaseLabel::InterfaceBand;
  return {label, indicator};
}

int PhaseMap::count(PhaseLabel l) const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), l));
}

PhaseMap build_phase_map(const SeparatedMap& map, const GridSpec& grid,
                         double tol, int threads) {
  PhaseMap pm;
  pm.grid = grid;
  pm.tol = tol;
  const std::size_t n = static_cast<std::size_t>(grid.nx) * grid.ny;
  pm.labels.assign(n, PhaseLabel::OneDim);
  pm.indicator.assign(n, 0.0);

  const auto xs = grid.xs();
  const auto ys = grid.ys();

  parallel_for_rows(grid.ny, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const Vec2 gy = map.g_jet(ys[j]).d1;
      for (int i = 0; i < grid.nx; ++i) {
        Jet2 jet;
        jet.du.col(0) = map.f_jet(xs[i]).d1;
        jet.du.col(1) = gy;
        const Classification c = classify_point(jet, tol);
        const std::size_t at = static_cast<std::size_t>(j) * grid.nx + i;
        pm.labels[at] = c.label;
        pm.indicator[at] = c.indicator;
      }
    }
  });

  // Discrete boundary of the rank-2 region: non-TwoDim nodes touching a
  // TwoDim 8-neighbour become InterfaceBand.
  std::vector<PhaseLabel> out = pm.labels;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (pm.label(i, j) == PhaseLabel::TwoDim) continue;
      bool touches = false;
      for (int dj = -1; dj <= 1 && !touches; ++dj) {
        for (int di = -1; di <= 1 && !touches; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= grid.nx || jj >= grid.ny) continue;
          touches = pm.label(ii, jj) == PhaseLabel::TwoDim;
        }
      }
      if (touches) out[static_cast<std::size_t>(j) * grid.nx + i] = PhaseLabel::InterfaceBand;
    }
  }
  pm.labels = std::move(out);
  return pm;
}

namespace {

// L-infinity distance to an axis-aligned segment {y = c, x in [x0, x1]}.
double dist_hseg(double px, double py, double x0, double x1, double c) {
  const double dx = px < x0 ? x0 - px : (px > x1 ? px - x1 : 0.0);
  return std::max(dx, std::abs(py - c));
}

double dist_vseg(double px, double py, double y0, double y1, double c) {
  return dist_hseg(py, px, y0, y1, c);
}

// L-infinity distance to the diagonal ray {x = y >= t0}.
double dist_diag_ray(double px, double py, double t0) {
  double t = 0.5 * (px + py);
  if (t < t0) t = t0;
  return std::max(std::abs(px - t), std::abs(py - t));
}

// ... and to the ray {x = y <= t0}.
double dist_diag_ray_down(double px, double py, double t0) {
  double t = 0.5 * (px + py);
  if (t > t0) t = t0;
  return std::max(std::abs(px - t), std::abs(py - t));
}

constexpr double kFar = 1e30;

}  // namespace

PhaseLabel analytic_phase_oracle(AnalyticCase c, double x, double y) {
  if (c == AnalyticCase::A) {
    if (x < 0.0 && y < 0.0) return PhaseLabel::OneDim;
    const bool on_sigma = (y == 0.0 && x <= 0.0) || (x == 0.0 && y <= 0.0) ||
                          (x == y && x >= 0.0);
    return on_sigma ? PhaseLabel::InterfaceBand : PhaseLabel::TwoDim;
  }
  if (std::abs(x) < 1.0 && std::abs(y) < 1.0) return PhaseLabel::OneDim;
  const bool on_square = (std::abs(x) == 1.0 && std::abs(y) <= 1.0) ||
                         (std::abs(y) == 1.0 && std::abs(x) <= 1.0);
  const bool on_diag = (x == y && std::abs(x) >= 1.0);
  return (on_square || on_diag) ? PhaseLabel::InterfaceBand : PhaseLabel::TwoDim;
}

double analytic_sigma_distance(AnalyticCase c, double x, double y) {
  if (c == AnalyticCase::A) {
    const double d1 = dist_hseg(x, y, -kFar, 0.0, 0.0);  // negative x-axis
    const double d2 = dist_vseg(x, y, -kFar, 0.0, 0.0);  // negative y-axis
    const double d3 = dist_diag_ray(x, y, 0.0);
    return std::min({d1, d2, d3});
  }
  const double e1 = dist_hseg(x, y, -1.0, 1.0, 1.0);
  const double e2 = dist_hseg(x, y, -1.0, 1.0, -1.0);
  const double e3 = dist_vseg(x, y, -1.0, 1.0, 1.0);
  const double e4 = dist_vseg(x, y, -1.0, 1.0, -1.0);
  const double r1 = dist_diag_ray(x, y, 1.0);
  const double r2 = dist_diag_ray_down(x, y, -1.0);
  return std::min({e1, e2, e3, e4, r1, r2});
}

}  // namespace infharm
