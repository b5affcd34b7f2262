#pragma once

#include "infharm/separated_map.hpp"
#include "infharm/types.hpp"

#include <cstdint>
#include <vector>

namespace infharm {

/// Phase of a point: rank-2 behaviour (local diffeomorphism), rank <= 1
/// behaviour (essentially scalar), or on/near the interface between them.
enum class PhaseLabel : std::uint8_t { TwoDim, OneDim, InterfaceBand };

struct Classification {
  PhaseLabel label;
  double indicator;  // sigma2 / max(1, sigma1) of Du
};

/// Pointwise label from the gradient's singular values with a hysteresis
/// band around the rank tolerance: TwoDim above 2*tol, OneDim below tol/2,
/// InterfaceBand in between.
Classification classify_point(const Jet2& jet, double tol);

/// Grid of phase labels. After per-node classification, every non-TwoDim
/// node with a TwoDim 8-neighbour is relabelled InterfaceBand: the discrete
/// boundary of the rank-2 region, which is the interface definition used
/// throughout (the indicator jumps across the tolerance there).
struct PhaseMap {
  GridSpec grid;
  double tol = 1e-8;
  std::vector<PhaseLabel> labels;     // row-major, index j*nx + i
  std::vector<double> indicator;

  PhaseLabel label(int i, int j) const { return labels[static_cast<std::size_t>(j) * grid.nx + i]; }
  double ind(int i, int j) const { return indicator[static_cast<std::size_t>(j) * grid.nx + i]; }

  int count(PhaseLabel l) const;
};

PhaseMap build_phase_map(const SeparatedMap& map, const GridSpec& grid,
                         double tol, int threads = 1);

/// The two built-in solution geometries with known phase sets.
enum class AnalyticCase { A, B };

/// Exact set membership for the analytic phase decomposition:
///   case A: Omega1 = {x,y < 0}, Sigma = boundary of Omega1 union the
///           diagonal ray {x = y >= 0};
///   case B: Omega1 = (-1,1)^2, Sigma = the square boundary union the
///           diagonal rays {x = y, |y| >= 1}.
PhaseLabel analytic_phase_oracle(AnalyticCase c, double x, double y);

/// Chebyshev (L-infinity) distance from (x, y) to the analytic interface.
double analytic_sigma_distance(AnalyticCase c, double x, double y);

}  // namespace infharm
