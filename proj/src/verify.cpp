#include "infharm/verify.hpp"

#include "infharm/infinity_laplacian.hpp"
#include "infharm/interface.hpp"
#include "infharm/parallel.hpp"
#include "infharm/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace infharm {
namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kResidualCeiling = 1e-10;
constexpr double kFormEquivalenceTol = 1e-10;
constexpr double kOrderLo = 1.8, kOrderHi = 2.2;
constexpr double kAffineCeiling = 1e-10;
constexpr double kJumpTarget = 1.0, kJumpTol = 1e-2;
constexpr double kInteriorJumpCeiling = 1e-10;
constexpr double kNonSolutionFloor = 1e-2;

CheckResult make_pass_note(const std::string& name, const std::string& note) {
  CheckResult r;
  r.name = name;
  r.pass = true;
  r.note = note;
  r.measured = std::numeric_limits<double>::quiet_NaN();
  return r;
}

struct ResidualSweep {
  double max_full = 0.0;
  double max_separated = 0.0;
  double max_difference = 0.0;
};

ResidualSweep residual_sweep(const SeparatedMap& map, const GridSpec& grid,
                             double tol, int threads) {
  const auto xs = grid.xs();
  const auto ys = grid.ys();
  std::vector<ResidualSweep> rows(grid.ny);
  parallel_for_rows(grid.ny, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      ResidualSweep acc;
      const CurveJet gy = map.g_jet(ys[j]);
      for (int i = 0; i < grid.nx; ++i) {
        const CurveJet fx = map.f_jet(xs[i]);
        Jet2 jet;
        jet.du.col(0) = fx.d1;
        jet.du.col(1) = gy.d1;
        jet.hxx = fx.d2;
        jet.hyy = gy.d2;
        const Vec2 full = infinity_laplacian(jet, tol).value;
        const Vec2 sep = infinity_laplacian_separated(fx, gy, tol);
        acc.max_full = std::max(acc.max_full, full.norm());
        acc.max_separated = std::max(acc.max_separated, sep.norm());
        acc.max_difference = std::max(acc.max_difference, (full - sep).norm());
      }
      rows[j] = acc;
    }
  });
  ResidualSweep total;
  for (const auto& r : rows) {
    total.max_full = std::max(total.max_full, r.max_full);
    total.max_separated = std::max(total.max_separated, r.max_separated);
    total.max_difference = std::max(total.max_difference, r.max_difference);
  }
  return total;
}

CheckResult check_sup_k(const RunConfig& cfg, const SeparatedMap& map) {
  CheckResult r;
  r.name = "sup_k_below_pi_half";
  const double lo = std::min(cfg.grid.xmin, cfg.grid.ymin);
  const double hi = std::max(cfg.grid.xmax, cfg.grid.ymax);
  SupKReport rep = sup_k_check(map.fcurve().profile(), lo, hi, 10000);
  if (cfg.sign == SeparatedMap::Sign::PlusG) {
    const SupKReport rg = sup_k_check(map.gcurve().profile(), lo, hi, 10000);
    if (rg.max_abs_k > rep.max_abs_k) rep = rg;
  }
  r.measured = rep.max_abs_k;
  r.threshold = kPiHalf;
  r.upper_bound = true;
  r.pass = rep.below_pi_half;
  return r;
}

CheckResult check_fd_convergence(const RunConfig& cfg, const SeparatedMap& map) {
  CheckResult r;
  r.name = "fd_convergence_order";
  r.threshold = kOrderHi;
  r.upper_bound = true;

  const GridSpec& g = cfg.grid;
  const double hs[3] = {4.0 * cfg.fd_step, 2.0 * cfg.fd_step, cfg.fd_step};
  const double rel[5][2] = {{0.8, 0.55}, {0.3, 0.7}, {0.65, 0.2}, {0.25, 0.4}, {0.7, 0.85}};

  auto map_value = [&map](double x, double y) { return map.value(x, y); };
  auto jet_error = [&](double x, double y, double h) {
    const Jet2 num = numerical_jet(map_value, x, y, h);
    const Jet2 ana = map.jet(x, y);
    double e = (num.du - ana.du).norm();
    e = std::max(e, (num.hxx - ana.hxx).norm());
    e = std::max(e, (num.hxy - ana.hxy).norm());
    e = std::max(e, (num.hyy - ana.hyy).norm());
    return e;
  };

  const KProfile& fp = map.fcurve().profile();
  const KProfile& gp = map.gcurve().profile();
  for (const auto& rc : rel) {
    const double x = g.xmin + rc[0] * (g.xmax - g.xmin);
    const double y = g.ymin + rc[1] * (g.ymax - g.ymin);
    if (stencil_crosses_breakpoint(fp, gp, x, y, 5.0 * hs[0])) continue;
    const double e0 = jet_error(x, y, hs[0]);
    if (e0 < 1e-9) continue;  // derivatives locally polynomial; nothing to measure
    const double e2 = jet_error(x, y, hs[2]);
    const double order = std::log2(e0 / e2) / 2.0;
    r.measured = order;
    r.pass = order >= kOrderLo && order <= kOrderHi;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "probe (%g, %g), window [%g, %g]", x, y, kOrderLo, kOrderHi);
    r.note = buf;
    return r;
  }
  return make_pass_note(r.name, "stencil exact to roundoff everywhere probed; order test vacuous");
}

// Analytic labels are available for the built-in solution families.
enum class OracleKind { CaseA, CaseB, AllOneDim, DiagonalOnly, None };

OracleKind oracle_kind(const RunConfig& cfg) {
  if (cfg.sign != SeparatedMap::Sign::MinusF) return OracleKind::None;
  if (cfg.fprofile.kind == "example_a") return OracleKind::CaseA;
  if (cfg.fprofile.kind == "example_b") return OracleKind::CaseB;
  if (cfg.fprofile.kind == "zero") return OracleKind::AllOneDim;
  if (cfg.fprofile.kind == "linear" && cfg.fprofile.slope != 0.0)
    return OracleKind::DiagonalOnly;
  return OracleKind::None;
}

CheckResult check_phase_agreement(const RunConfig& cfg, const PhaseMap& pm) {
  const OracleKind kind = oracle_kind(cfg);
  if (kind == OracleKind::None)
    return make_pass_note("phase_oracle_agreement", "no analytic oracle for this profile; skipped");

  const GridSpec& g = pm.grid;
  const double margin = 2.0 * std::max(g.hx(), g.hy());
  int mismatches = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i), y = g.y(j);
      PhaseLabel expected;
      double dist;
      switch (kind) {
        case OracleKind::CaseA:
          expected = analytic_phase_oracle(AnalyticCase::A, x, y);
          dist = analytic_sigma_distance(AnalyticCase::A, x, y);
          break;
        case OracleKind::CaseB:
          expected = analytic_phase_oracle(AnalyticCase::B, x, y);
          dist = analytic_sigma_distance(AnalyticCase::B, x, y);
          break;
        case OracleKind::AllOneDim:
          expected = PhaseLabel::OneDim;
          dist = std::numeric_limits<double>::infinity();
          break;
        default:  // DiagonalOnly
          expected = (x == y) ? PhaseLabel::InterfaceBand : PhaseLabel::TwoDim;
          dist = 0.5 * std::abs(x - y);
          break;
      }
      if (dist <= margin) continue;
      if (pm.label(i, j) != expected) ++mismatches;
    }
  }
  CheckResult r;
  r.name = "phase_oracle_agreement";
  r.measured = mismatches;
  r.threshold = 0.0;
  r.upper_bound = true;
  r.pass = mismatches == 0;
  r.note = "mismatched labels farther than 2h from the analytic interface";
  return r;
}

CheckResult check_affine(const SeparatedMap& map, const PhaseMap& pm) {
  const AffineReport rep = check_prop2_affine(map, pm);
  if (rep.vacuous())
    return make_pass_note("prop2_affine_on_one_dim", "no interior 1-D nodes; vacuous");
  CheckResult r;
  r.name = "prop2_affine_on_one_dim";
  r.measured = rep.max_second_derivative;
  r.threshold = kAffineCeiling;
  r.upper_bound = true;
  r.pass = r.measured <= r.threshold;
  r.note = std::to_string(rep.samples) + " interior samples";
  return r;
}

CheckResult check_rank1(const SeparatedMap& map, const PhaseMap& pm) {
  const auto samples = rank1_closure_samples(pm);
  if (samples.empty())
    return make_pass_note("rank1_characterization", "no rank <= 1 nodes detected; vacuous");
  const Rank1Report rep = check_rank1_characterization(map, samples);
  CheckResult r;
  r.name = "rank1_characterization";
  r.measured = rep.worst_violation;
  // Grid-detected samples sit within 2h of the true set; scale accordingly.
  r.threshold = std::max(1e-8, 4.0 * std::max(pm.grid.hx(), pm.grid.hy()));
  r.upper_bound = true;
  r.pass = r.measured <= r.threshold;
  r.note = std::to_string(rep.samples) + " samples on the detected rank <= 1 closure";
  return r;
}

CheckResult check_dichotomy(const InterfaceGraph& graph, const SeparatedMap& map) {
  if (graph.empty())
    return make_pass_note("prop2_interface_dichotomy", "empty interface; vacuous");
  const DichotomyReport rep = check_prop2_dichotomy(graph, map);
  int failed = 0;
  for (const auto& p : rep.pieces)
    if (p.branch == DichotomyBranch::Failed) ++failed;
  CheckResult r;
  r.name = "prop2_interface_dichotomy";
  r.measured = failed;
  r.threshold = 0.0;
  r.upper_bound = true;
  r.pass = rep.pass;
  r.note = std::to_string(rep.pieces.size()) + " smooth pieces classified";
  return r;
}

CheckResult check_projection_jump_sigma(const RunConfig& cfg, const SeparatedMap& map,
                                        const InterfaceGraph& graph) {
  if (graph.empty())
    return make_pass_note("projection_jump_on_interface", "empty interface; skipped");

  // Probe interior vertices of long pieces, normal to the local direction;
  // the jump must settle at 1 for every delta in the shrinking ladder.
  // The ladder stops at 1e-3: where the profile leaves its flat piece the
  // rank indicator decays like the square of the distance, so offsets below
  // sqrt(2*tol) are not resolvable at the configured rank tolerance.
  double worst = 0.0;
  int probes = 0;
  for (const auto& pl : graph.pieces) {
    const int n = static_cast<int>(pl.vertices.size());
    if (n < 9) continue;
    const int k = n / 2;
    const Vec2 dir = (pl.vertices[k + 1] - pl.vertices[k - 1]).normalized();
    const Vec2 normal(-dir.y(), dir.x());
    for (double delta : {1e-2, 1e-3}) {
      const double jump = projection_jump(map, pl.vertices[k], normal, delta, cfg.tol_rank);
      worst = std::max(worst, std::abs(jump - kJumpTarget));
    }
    ++probes;
    if (probes >= 3) break;
  }
  if (probes == 0)
    return make_pass_note("projection_jump_on_interface", "no piece long enough to probe; skipped");
  CheckResult r;
  r.name = "projection_jump_on_interface";
  r.measured = worst;
  r.threshold = kJumpTol;
  r.upper_bound = true;
  r.pass = worst <= kJumpTol;
  r.note = "max |jump - 1| over " + std::to_string(probes) + " interface probes, delta down to 1e-3";
  return r;
}

CheckResult check_projection_jump_interior(const RunConfig& cfg, const SeparatedMap& map,
                                           const PhaseMap& pm) {
  const GridSpec& g = pm.grid;
  // Deepest interior node of each phase: maximize indicator for the 2-D
  // phase, Chebyshev-2 interiority for the 1-D phase.
  double worst = 0.0;
  int probes = 0;
  int best_i = -1, best_j = -1;
  double best_ind = -1.0;
  for (int j = 2; j < g.ny - 2; ++j)
    for (int i = 2; i < g.nx - 2; ++i)
      if (pm.label(i, j) == PhaseLabel::TwoDim && pm.ind(i, j) > best_ind) {
        best_ind = pm.ind(i, j);
        best_i = i;
        best_j = j;
      }
  const Vec2 normals[2] = {Vec2(1.0, 0.0), Vec2(1.0, -1.0).normalized()};
  if (best_i >= 0) {
    const Vec2 p(g.x(best_i), g.y(best_j));
    for (const Vec2& n : normals)
      worst = std::max(worst, projection_jump(map, p, n, 1e-3, cfg.tol_rank));
    ++probes;
  }
  for (int j = 2; j < g.ny - 2 && probes < 2; ++j) {
    for (int i = 2; i < g.nx - 2 && probes < 2; ++i) {
      if (pm.label(i, j) != PhaseLabel::OneDim) continue;
      bool interior = true;
      for (int dj = -2; dj <= 2 && interior; ++dj)
        for (int di = -2; di <= 2 && interior; ++di)
          interior = pm.label(i + di, j + dj) == PhaseLabel::OneDim;
      if (!interior) continue;
      const Vec2 p(g.x(i), g.y(j));
      for (const Vec2& n : normals)
        worst = std::max(worst, projection_jump(map, p, n, 1e-3, cfg.tol_rank));
      ++probes;
    }
  }
  if (probes == 0)
    return make_pass_note("projection_jump_in_interiors", "no interior probe available; skipped");
  CheckResult r;
  r.name = "projection_jump_in_interiors";
  r.measured = worst;
  r.threshold = kInteriorJumpCeiling;
  r.upper_bound = true;
  r.pass = worst <= r.threshold;
  r.note = std::to_string(probes) + " interior probes";
  return r;
}

// Built-in non-solution: u(x,y) = f(x) + f(y) with the case (a) profile
// violates the rank-1 curvature condition on the diagonal, so the residual
// has a strictly positive floor there.
CheckResult check_negative_control(int threads) {
  PlanarCurve::Options copts;
  copts.anchor_min = -2.0;
  copts.anchor_max = 4.0;
  PlanarCurve f(KProfile::example_a(), copts);
  PlanarCurve g(KProfile::example_a(), copts);
  const SeparatedMap bad = SeparatedMap::plus_g(std::move(f), std::move(g));
  const GridSpec grid(0.5, 2.0, 0.5, 2.0, 101, 101);
  const double floor = residual_grid_max(bad, grid, 1e-8, threads);
  CheckResult r;
  r.name = "negative_control_detects_non_solution";
  r.measured = floor;
  r.threshold = kNonSolutionFloor;
  r.upper_bound = false;
  r.pass = floor >= kNonSolutionFloor;
  r.note = "plus-g control map must show a residual floor";
  return r;
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    char buf[192];
    if (std::isnan(c.measured)) {
      std::snprintf(buf, sizeof(buf), "%-36s %-28s %s", c.name.c_str(), "-",
                    c.pass ? "PASS" : "FAIL");
    } else {
      char mid[96];
      std::snprintf(mid, sizeof(mid), "measured=%.6g %s %.6g", c.measured,
                    c.upper_bound ? "<=" : ">=", c.threshold);
      std::snprintf(buf, sizeof(buf), "%-36s %-28s %s", c.name.c_str(), mid,
                    c.pass ? "PASS" : "FAIL");
    }
    out << buf;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
  }
  out << (all_pass() ? "ALL CHECKS PASSED\n" : "VERIFICATION FAILED\n");
  return out.str();
}

VerifyReport run_verification(const RunConfig& cfg, int threads) {
  VerifyReport report;
  const SeparatedMap map = cfg.make_map();

  report.checks.push_back(check_sup_k(cfg, map));

  const ResidualSweep sweep = residual_sweep(map, cfg.grid, cfg.tol_rank, threads);
  {
    CheckResult r;
    r.name = "form_equivalence_full_vs_separated";
    r.measured = sweep.max_difference;
    r.threshold = kFormEquivalenceTol;
    r.upper_bound = true;
    r.pass = r.measured <= r.threshold;
    report.checks.push_back(r);
  }

  if (!cfg.expect_solution) {
    CheckResult r;
    r.name = "residual_floor_non_solution";
    r.measured = sweep.max_full;
    r.threshold = kNonSolutionFloor;
    r.upper_bound = false;
    r.pass = r.measured >= r.threshold;
    r.note = "config declares a non-solution; the tool must flag it";
    report.checks.push_back(r);
    return report;
  }

  {
    CheckResult r;
    r.name = "residual_max_full_form";
    r.measured = sweep.max_full;
    r.threshold = kResidualCeiling;
    r.upper_bound = true;
    r.pass = r.measured <= r.threshold;
    report.checks.push_back(r);

    r.name = "residual_max_separated_form";
    r.measured = sweep.max_separated;
    r.pass = r.measured <= r.threshold;
    report.checks.push_back(r);
  }

  report.checks.push_back(check_fd_convergence(cfg, map));

  const PhaseMap pm = build_phase_map(map, cfg.grid, cfg.tol_rank, threads);
  report.checks.push_back(check_phase_agreement(cfg, pm));
  report.checks.push_back(check_affine(map, pm));
  report.checks.push_back(check_rank1(map, pm));

  const InterfaceGraph graph = extract_interface(pm, cfg.interface_opts);
  report.checks.push_back(check_dichotomy(graph, map));
  report.checks.push_back(check_projection_jump_sigma(cfg, map, graph));
  report.checks.push_back(check_projection_jump_interior(cfg, map, pm));
  report.checks.push_back(check_negative_control(threads));

  return report;
}

}  // namespace infharm
