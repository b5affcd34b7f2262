#pragma once

#include "infharm/types.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace infharm {

/// Thrown when the adaptive integrator hits its depth limit before the
/// requested tolerance; carries the error estimate it did achieve.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double achieved, double requested)
      : std::runtime_error("quadrature failed to converge: achieved estimate " +
                           std::to_string(achieved) + ", requested " +
                           std::to_string(requested)),
        achieved_tolerance(achieved),
        requested_tolerance(requested) {}

  double achieved_tolerance;
  double requested_tolerance;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of a Vec2-valued integrand
/// over [a, b] to the given absolute tolerance. Panels are bisected while
/// the embedded error estimate exceeds the panel's share of the tolerance.
Vec2 integrate_gk15(const std::function<Vec2(double)>& f, double a, double b,
                    double abs_tol, int max_depth = 30);

}  // namespace infharm
