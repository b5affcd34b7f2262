#include "infharm/infinity_laplacian.hpp"

#include "infharm/linalg2.hpp"
#include "infharm/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace infharm {

Residual infinity_laplacian(const Jet2& jet, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("infinity_laplacian: tolerance must be positive");

  // s_i = sum over j, beta of D_j u_beta D2_ij u_beta; then the tangential
  // component is Du * s.
  const Vec2 cx = jet.du.col(0);
  const Vec2 cy = jet.du.col(1);
  Vec2 s;
  s(0) = cx.dot(jet.hxx) + cy.dot(jet.hxy);
  s(1) = cx.dot(jet.hxy) + cy.dot(jet.hyy);

  Residual r;
  r.tangential_part = jet.du * s;
  const Mat2 p = nullspace_projection(jet.du, tol);
  r.normal_part = jet.du.squaredNorm() * (p * (jet.hxx + jet.hyy));
  r.value = r.tangential_part + r.normal_part;
  return r;
}

Vec2 infinity_laplacian_separated(const CurveJet& fjet, const CurveJet& gjet,
                                  double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("infinity_laplacian_separated: tolerance must be positive");
  if (std::abs(fjet.d1.norm() - 1.0) > 1e-12 || std::abs(gjet.d1.norm() - 1.0) > 1e-12)
    throw std::invalid_argument(
        "infinity_laplacian_separated: curve jets must be unit speed");

  Mat2 du;
  du.col(0) = fjet.d1;
  du.col(1) = gjet.d1;
  return 2.0 * (nullspace_projection(du, tol) * (fjet.d2 + gjet.d2));
}

Jet2 numerical_jet(const std::function<Vec2(double, double)>& map, double x,
                   double y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numerical_jet: step must be positive");

  const Vec2 u0 = map(x, y);
  const Vec2 up0 = map(x + h, y), um0 = map(x - h, y);
  const Vec2 u0p = map(x, y + h), u0m = map(x, y - h);
  const Vec2 upp = map(x + h, y + h), upm = map(x + h, y - h);
  const Vec2 ump = map(x - h, y + h), umm = map(x - h, y - h);

  Jet2 j;
  j.u = u0;
  j.du.col(0) = (up0 - um0) / (2.0 * h);
  j.du.col(1) = (u0p - u0m) / (2.0 * h);
  j.hxx = (up0 - 2.0 * u0 + um0) / (h * h);
  j.hyy = (u0p - 2.0 * u0 + u0m) / (h * h);
  j.hxy = (upp - upm - ump + umm) / (4.0 * h * h);
  return j;
}

bool stencil_crosses_breakpoint(const KProfile& fprofile, const KProfile& gprofile,
                                double x, double y, double h) {
  auto crosses = [h](const KProfile& p, double t) {
    for (double br : p.breakpoints())
      if (std::abs(t - br) <= h) return true;
    return false;
  };
  return crosses(fprofile, x) || crosses(gprofile, y);
}

double e_infinity_estimate(const SeparatedMap& map, const GridSpec& grid) {
  const auto xs = grid.xs();
  const auto ys = grid.ys();
  double best = 0.0;
  for (double y : ys) {
    const Vec2 gy = map.g_jet(y).d1;
    for (double x : xs) {
      Mat2 du;
      du.col(0) = map.f_jet(x).d1;
      du.col(1) = gy;
      best = std::max(best, du.norm());
    }
  }
  return best;
}

double residual_grid_max(const SeparatedMap& map, const GridSpec& grid,
                         double tol, int threads) {
  const auto xs = grid.xs();
  const auto ys = grid.ys();
  std::vector<double> row_max(grid.ny, 0.0);
  parallel_for_rows(grid.ny, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const CurveJet gy = map.g_jet(ys[j]);
      double m = 0.0;
      for (int i = 0; i < grid.nx; ++i) {
        const CurveJet fx = map.f_jet(xs[i]);
        Jet2 jet;
        jet.du.col(0) = fx.d1;
        jet.du.col(1) = gy.d1;
        jet.hxx = fx.d2;
        jet.hyy = gy.d2;
        m = std::max(m, infinity_laplacian(jet, tol).value.norm());
      }
      row_max[j] = m;
    }
  });
  double best = 0.0;
  for (double m : row_max) best = std::max(best, m);
  return best;
}

}  // namespace infharm
