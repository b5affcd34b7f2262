#pragma once

#include "infharm/separated_map.hpp"
#include "infharm/types.hpp"

#include <functional>

namespace infharm {

/// Pointwise value of the infinity-Laplacian system split into its two
/// contributions: the tangential term (Du x Du) : D^2u and the normal term
/// |Du|^2 [Du]perp (Hxx + Hyy). The operator value is their sum.
struct Residual {
  Vec2 value = Vec2::Zero();
  Vec2 tangential_part = Vec2::Zero();
  Vec2 normal_part = Vec2::Zero();
};

/// Full index-form operator on an arbitrary second-order jet:
///   value_a = D_i u_a D_j u_b D2_ij u_b + |Du|^2 P_ab (D2_xx + D2_yy) u_b
/// with P the nullspace projection of Du^T at relative rank tolerance tol
/// and |Du| the Frobenius norm.
Residual infinity_laplacian(const Jet2& jet, double tol);

/// Closed form for separated-variables maps with unit-speed curve jets:
///   2 [(f'(x), g'(y))]perp (f''(x) + g''(y)).
/// Inputs must satisfy |f'| = |g'| = 1 within 1e-12.
Vec2 infinity_laplacian_separated(const CurveJet& fjet, const CurveJet& gjet,
                                  double tol);

/// Second-order central differences of a map evaluator on the 9-point
/// stencil of half-width h around (x, y).
Jet2 numerical_jet(const std::function<Vec2(double, double)>& map, double x,
                   double y, double h);

/// True when the FD stencil at (x, y) straddles a profile piece boundary in
/// either coordinate; second differences there are only O(h) accurate.
bool stencil_crosses_breakpoint(const KProfile& fprofile, const KProfile& gprofile,
                                double x, double y, double h);

/// Grid estimator of the supremal energy: max over nodes of |Du|_F from
/// analytic jets.
double e_infinity_estimate(const SeparatedMap& map, const GridSpec& grid);

/// Max over grid nodes of ||infinity_laplacian||; `threads` <= 1 runs
/// serially, otherwise rows are split across that many workers.
double residual_grid_max(const SeparatedMap& map, const GridSpec& grid,
                         double tol, int threads = 1);

}  // namespace infharm
