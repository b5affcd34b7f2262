#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace infharm {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Second-order jet of a planar map at a point. The gradient stores the
/// partial derivative vectors as columns (column 0 = d/dx, column 1 = d/dy).
/// The mixed derivative has a single slot since D2_xy = D2_yx.
struct Jet2 {
  Vec2 u = Vec2::Zero();
  Mat2 du = Mat2::Zero();
  Vec2 hxx = Vec2::Zero();
  Vec2 hxy = Vec2::Zero();
  Vec2 hyy = Vec2::Zero();
};

/// Value and first two derivatives of a planar curve at a parameter.
struct CurveJet {
  Vec2 f = Vec2::Zero();
  Vec2 d1 = Vec2::Zero();
  Vec2 d2 = Vec2::Zero();
};

/// Uniform rectangular sampling grid, node i = min + i*h with
/// h = (max - min)/(n - 1) per axis.
struct GridSpec {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
  int nx = 2;
  int ny = 2;

  GridSpec() = default;
  GridSpec(double x0, double x1, double y0, double y1, int n_x, int n_y)
      : xmin(x0), xmax(x1), ymin(y0), ymax(y1), nx(n_x), ny(n_y) {
    if (!(xmax > xmin) || !(ymax > ymin))
      throw std::invalid_argument("GridSpec: empty extent");
    if (nx < 2 || ny < 2)
      throw std::invalid_argument("GridSpec: need at least 2 nodes per axis");
  }

  double hx() const { return (xmax - xmin) / (nx - 1); }
  double hy() const { return (ymax - ymin) / (ny - 1); }
  // Last node snaps to the exact bound so grids round-trip bit-exactly.
  double x(int i) const { return i == nx - 1 ? xmax : xmin + i * hx(); }
  double y(int j) const { return j == ny - 1 ? ymax : ymin + j * hy(); }

  std::vector<double> xs() const {
    std::vector<double> v(nx);
    for (int i = 0; i < nx; ++i) v[i] = x(i);
    return v;
  }
  std::vector<double> ys() const {
    std::vector<double> v(ny);
    for (int j = 0; j < ny; ++j) v[j] = y(j);
    return v;
  }
};

}  // namespace infharm
