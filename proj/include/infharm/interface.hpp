#pragma once

#include "infharm/phase.hpp"
#include "infharm/separated_map.hpp"
#include "infharm/types.hpp"

#include <vector>

namespace infharm {

/// Polyline piece of the interface. `vertices` is the full-resolution node
/// chain; `simplified` indexes the vertices kept after collinearity
/// merging (used for corner detection and reporting).
struct InterfacePolyline {
  std::vector<Vec2> vertices;
  std::vector<int> simplified;
  bool closed = false;
};

struct InterfaceNode {
  Vec2 p;
  int degree;
};

struct InterfaceCorner {
  Vec2 p;
  double angle_deg;
  int piece;
  int vertex;  // index into the piece's vertices
};

/// Graph of the discrete interface: polyline pieces between nodes of
/// degree != 2, the terminal nodes with their degrees, the junctions
/// (degree >= 3) and the interior corner vertices.
struct InterfaceGraph {
  std::vector<InterfacePolyline> pieces;
  std::vector<InterfaceNode> nodes;
  std::vector<InterfaceNode> junctions;
  std::vector<InterfaceCorner> corners;

  bool empty() const { return pieces.empty(); }
};

struct InterfaceOptions {
  double corner_angle_deg = 20.0;
  double collinear_angle_deg = 1.0;
};

/// Traces the discrete boundary of the rank-2 region. Interface nodes are
/// the InterfaceBand grid nodes touching a TwoDim 8-neighbour; 4-adjacent
/// interface nodes are linked, diagonal pairs only when no orthogonal
/// interface node short-cuts them. Chains between degree != 2 nodes become
/// polylines; an empty interface yields an empty graph.
InterfaceGraph extract_interface(const PhaseMap& pm, InterfaceOptions opts = {});

/// Max of |Hxx| + |Hxy| + |Hyy| over interior rank <= 1 samples (OneDim
/// nodes whose Chebyshev-2 neighbourhood is entirely OneDim). Affine
/// behaviour on the 1-D phase means this vanishes.
struct AffineReport {
  double max_second_derivative = 0.0;
  int samples = 0;
  bool vacuous() const { return samples == 0; }
};

AffineReport check_prop2_affine(const SeparatedMap& map, const PhaseMap& pm);

/// Worst violation over samples of the rank-1 characterization
///   f'(x) = +/- g'(y)  and  f''(x) = -g''(y),
/// measured as max( min(|f'-g'|, |f'+g'|), |f''+g''| ).
struct Rank1Report {
  double worst_violation = 0.0;
  Vec2 worst_point = Vec2::Zero();
  int samples = 0;
};

Rank1Report check_rank1_characterization(const SeparatedMap& map,
                                         const std::vector<Vec2>& samples);

/// Grid nodes sampling the closure of the detected rank <= 1 region
/// (OneDim plus InterfaceBand labels).
std::vector<Vec2> rank1_closure_samples(const PhaseMap& pm);

/// Interface dichotomy: each corner- and junction-free polyline piece must
/// either run along a diagonal (total-least-squares slope within
/// `slope_tol` of +/-1 on every 5-vertex window) or carry an affine map
/// (|f''|, |g''| <= affine_tol along it).
enum class DichotomyBranch { Diagonal, Affine, Failed, Skipped };

struct DichotomyPiece {
  DichotomyBranch branch;
  double slope;      // representative fitted slope (NaN when skipped)
  double max_curve;  // max of |f''|, |g''| along the piece
  int vertices;
};

struct DichotomyReport {
  std::vector<DichotomyPiece> pieces;
  bool pass = true;  // no piece failed both branches
};

struct DichotomyOptions {
  double slope_tol = 0.1;
  double affine_tol = 1e-8;
  int min_vertices = 3;
};

DichotomyReport check_prop2_dichotomy(const InterfaceGraph& graph,
                                      const SeparatedMap& map,
                                      DichotomyOptions opts = {});

/// Size of the discontinuity of the nullspace projection at p: the larger
/// Frobenius distance between P at p and P at p +/- delta * normal. Stays
/// bounded away from 0 as delta -> 0 exactly when the projection jumps at
/// p; in phase interiors it vanishes.
double projection_jump(const SeparatedMap& map, const Vec2& p, const Vec2& normal,
                       double delta, double tol);

}  // namespace infharm
