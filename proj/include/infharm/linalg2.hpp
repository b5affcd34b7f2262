#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

namespace infharm {

/// Singular value decomposition of a real 2x2 matrix,
/// M = sigma1*u1*v1^T + sigma2*u2*v2^T with sigma1 >= sigma2 >= 0 and
/// {u1,u2}, {v1,v2} orthonormal. The sign ambiguity is resolved by making
/// the first nonzero component of each left singular vector nonnegative,
/// so outputs are byte-reproducible.
template <typename Scalar>
struct Svd2T {
  Scalar sigma1 = Scalar(0);
  Scalar sigma2 = Scalar(0);
  Eigen::Matrix<Scalar, 2, 1> u1, u2, v1, v2;

  Eigen::Matrix<Scalar, 2, 2> reconstruct() const {
    return sigma1 * u1 * v1.transpose() + sigma2 * u2 * v2.transpose();
  }
};

using Svd2 = Svd2T<double>;

namespace detail {

template <typename Scalar>
Svd2T<Scalar> svd2_impl(const Eigen::Matrix<Scalar, 2, 2>& m) {
  if (!m.allFinite())
    throw std::invalid_argument("svd2: matrix has non-finite entries");

  // Closed form via the rotation algebra of 2x2 matrices: write
  //   M = E*I + F*K1 + G*K2 + H*J
  // (I identity, J the rotation generator, K1/K2 the reflections); then
  //   M = R(phi) * diag(s1, s2) * R(theta)^T
  // with s1 = Q+R, s2 = Q-R, Q = |E,H|, R = |F,G|, and the two rotation
  // angles recovered from atan2. No iteration, fully deterministic.
  const Scalar a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const Scalar e = (a + d) / 2;
  const Scalar f = (a - d) / 2;
  const Scalar g = (c + b) / 2;
  const Scalar h = (c - b) / 2;

  const Scalar q = std::hypot(e, h);
  const Scalar r = std::hypot(f, g);

  const Scalar a1 = std::atan2(g, f);  // phi + theta
  const Scalar a2 = std::atan2(h, e);  // phi - theta
  const Scalar phi = (a1 + a2) / 2;
  const Scalar theta = (a1 - a2) / 2;

  Svd2T<Scalar> out;
  out.sigma1 = q + r;
  const Scalar s2 = q - r;  // may be negative when det(M) < 0
  out.sigma2 = std::abs(s2);

  const Scalar cp = std::cos(phi), sp = std::sin(phi);
  const Scalar ct = std::cos(theta), st = std::sin(theta);
  out.u1 << cp, sp;
  out.u2 << -sp, cp;
  out.v1 << ct, st;
  const Scalar sgn = (s2 < Scalar(0)) ? Scalar(-1) : Scalar(1);
  out.v2 << -st * sgn, ct * sgn;

  // Deterministic sign convention on the left singular vectors; the paired
  // right vector flips too so the rank-1 terms are unchanged.
  auto fix = [](Eigen::Matrix<Scalar, 2, 1>& u, Eigen::Matrix<Scalar, 2, 1>& v) {
    const bool flip = (u(0) < Scalar(0)) || (u(0) == Scalar(0) && u(1) < Scalar(0));
    if (flip) {
      u = -u;
      v = -v;
    }
  };
  fix(out.u1, out.v1);
  fix(out.u2, out.v2);
  return out;
}

}  // namespace detail

template <typename Derived>
Svd2T<typename Derived::Scalar> svd2(const Eigen::MatrixBase<Derived>& m) {
  static_assert(Derived::RowsAtCompileTime == 2 && Derived::ColsAtCompileTime == 2,
                "svd2 expects a 2x2 matrix");
  using Scalar = typename Derived::Scalar;
  const Eigen::Matrix<Scalar, 2, 2> mm = m;
  return detail::svd2_impl<Scalar>(mm);
}

/// Number of singular values above the relative threshold tol*max(1, sigma1).
template <typename Derived>
int rank_eps(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar tol) {
  using Scalar = typename Derived::Scalar;
  if (!(tol > Scalar(0)))
    throw std::invalid_argument("rank_eps: tolerance must be positive");
  const auto s = svd2(m);
  const Scalar thr = tol * std::max(Scalar(1), s.sigma1);
  return (s.sigma1 > thr ? 1 : 0) + (s.sigma2 > thr ? 1 : 0);
}

/// Orthogonal projection onto the nullspace of M^T (the orthogonal
/// complement of the range of M): P = I - sum over kept directions of
/// u_i u_i^T. Full-rank M gives P = 0; a rank-1 M with range span(q)
/// gives P = I - q q^T.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2> nullspace_projection(
    const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar tol) {
  using Scalar = typename Derived::Scalar;
  if (!(tol > Scalar(0)))
    throw std::invalid_argument("nullspace_projection: tolerance must be positive");
  const auto s = svd2(m);
  const Scalar thr = tol * std::max(Scalar(1), s.sigma1);
  Eigen::Matrix<Scalar, 2, 2> p = Eigen::Matrix<Scalar, 2, 2>::Identity();
  if (s.sigma1 > thr) p -= s.u1 * s.u1.transpose();
  if (s.sigma2 > thr) p -= s.u2 * s.u2.transpose();
  return p;
}

}  // namespace infharm
