#include "infharm/interface.hpp"

#include "infharm/linalg2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace infharm {
namespace {

constexpr double kPi = 3.14159265358979323846;

double turn_angle_deg(const Vec2& a, const Vec2& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return std::acos(c) * 180.0 / kPi;
}

struct NodeGraph {
  int nx = 0, ny = 0;
  std::vector<char> in_sigma;                 // per grid node
  std::vector<std::vector<int>> adjacency;    // neighbour node indices

  int idx(int i, int j) const { return j * nx + i; }
  bool sigma(int i, int j) const {
    return i >= 0 && j >= 0 && i < nx && j < ny && in_sigma[idx(i, j)];
  }
};

NodeGraph build_node_graph(const PhaseMap& pm) {
  NodeGraph g;
  g.nx = pm.grid.nx;
  g.ny = pm.grid.ny;
  g.in_sigma.assign(static_cast<std::size_t>(g.nx) * g.ny, 0);

  auto two_dim_neighbour = [&](int i, int j) {
    for (int dj = -1; dj <= 1; ++dj)
      for (int di = -1; di <= 1; ++di) {
        if (di == 0 && dj == 0) continue;
        const int ii = i + di, jj = j + dj;
        if (ii < 0 || jj < 0 || ii >= g.nx || jj >= g.ny) continue;
        if (pm.label(ii, jj) == PhaseLabel::TwoDim) return true;
      }
    return false;
  };

  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (pm.label(i, j) == PhaseLabel::InterfaceBand && two_dim_neighbour(i, j))
        g.in_sigma[g.idx(i, j)] = 1;

  g.adjacency.assign(g.in_sigma.size(), {});
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (!g.sigma(i, j)) continue;
      auto link = [&](int ii, int jj) {
        g.adjacency[g.idx(i, j)].push_back(g.idx(ii, jj));
      };
      if (g.sigma(i + 1, j)) link(i + 1, j);
      if (g.sigma(i, j + 1)) link(i, j + 1);
      // Diagonal links only where no orthogonal interface node already
      // connects the pair (avoids chords across right-angle turns).
      if (g.sigma(i + 1, j + 1) && !g.sigma(i + 1, j) && !g.sigma(i, j + 1))
        link(i + 1, j + 1);
      if (g.sigma(i + 1, j - 1) && !g.sigma(i + 1, j) && !g.sigma(i, j - 1))
        link(i + 1, j - 1);
    }
  }
  // Mirror the half-links so adjacency is symmetric.
  for (std::size_t v = 0; v < g.adjacency.size(); ++v)
    for (int w : g.adjacency[v])
      if (static_cast<std::size_t>(w) > v) g.adjacency[w].push_back(static_cast<int>(v));
  return g;
}

std::vector<int> simplify_collinear(const std::vector<Vec2>& v, double angle_deg) {
  std::vector<int> keep;
  if (v.empty()) return keep;
  keep.push_back(0);
  for (int k = 1; k + 1 < static_cast<int>(v.size()); ++k) {
    const Vec2 incoming = v[k] - v[keep.back()];
    const Vec2 outgoing = v[k + 1] - v[k];
    if (turn_angle_deg(incoming, outgoing) > angle_deg) keep.push_back(k);
  }
  if (v.size() > 1) keep.push_back(static_cast<int>(v.size()) - 1);
  return keep;
}

// Principal direction of a vertex run by total least squares (the top
// singular direction of the centered scatter matrix).
Vec2 tls_direction(const std::vector<Vec2>& v, int begin, int end) {
  Vec2 mean = Vec2::Zero();
  for (int k = begin; k < end; ++k) mean += v[k];
  mean /= static_cast<double>(end - begin);
  Mat2 scatter = Mat2::Zero();
  for (int k = begin; k < end; ++k) {
    const Vec2 d = v[k] - mean;
    scatter += d * d.transpose();
  }
  return svd2(scatter).u1;
}

}  // namespace

InterfaceGraph extract_interface(const PhaseMap& pm, InterfaceOptions opts) {
  InterfaceGraph out;
  const int two_dim = pm.count(PhaseLabel::TwoDim);
  if (two_dim == 0 || two_dim == pm.grid.nx * pm.grid.ny) return out;

  const NodeGraph g = build_node_graph(pm);
  std::vector<int> degree(g.adjacency.size(), 0);
  for (std::size_t v = 0; v < g.adjacency.size(); ++v)
    degree[v] = static_cast<int>(g.adjacency[v].size());

  auto coords = [&](int v) {
    return Vec2(pm.grid.x(v % g.nx), pm.grid.y(v / g.nx));
  };

  std::unordered_set<long long> used;
  auto edge_key = [&](int a, int b) {
    const long long lo = std::min(a, b), hi = std::max(a, b);
    return lo * static_cast<long long>(g.adjacency.size()) + hi;
  };
  auto take = [&](int a, int b) { return used.insert(edge_key(a, b)).second; };

  auto walk = [&](int start, int next) {
    std::vector<int> chain{start, next};
    int prev = start, cur = next;
    while (degree[cur] == 2) {
      const auto& nb = g.adjacency[cur];
      const int nxt = (nb[0] == prev) ? nb[1] : nb[0];
      if (!take(cur, nxt)) break;  // closed back onto a used edge
      chain.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return chain;
  };

  std::vector<std::vector<int>> chains;
  for (std::size_t v = 0; v < g.adjacency.size(); ++v) {
    if (!g.in_sigma[v] || degree[v] == 2) continue;
    for (int w : g.adjacency[v])
      if (take(static_cast<int>(v), w)) chains.push_back(walk(static_cast<int>(v), w));
  }
  // Remaining unused edges belong to pure cycles.
  for (std::size_t v = 0; v < g.adjacency.size(); ++v) {
    if (!g.in_sigma[v]) continue;
    for (int w : g.adjacency[v])
      if (take(static_cast<int>(v), w)) chains.push_back(walk(static_cast<int>(v), w));
  }

  for (const auto& chain : chains) {
    InterfacePolyline pl;
    pl.vertices.reserve(chain.size());
    for (int v : chain) pl.vertices.push_back(coords(v));
    pl.closed = chain.size() > 2 && chain.front() == chain.back();
    pl.simplified = simplify_collinear(pl.vertices, opts.collinear_angle_deg);
    out.pieces.push_back(std::move(pl));
  }

  for (std::size_t v = 0; v < g.adjacency.size(); ++v) {
    if (!g.in_sigma[v] || degree[v] == 2) continue;
    out.nodes.push_back({coords(static_cast<int>(v)), degree[v]});
    if (degree[v] >= 3)
      out.junctions.push_back({coords(static_cast<int>(v)), degree[v]});
  }

  for (int pi = 0; pi < static_cast<int>(out.pieces.size()); ++pi) {
    const auto& pl = out.pieces[pi];
    const auto& s = pl.simplified;
    for (int k = 1; k + 1 < static_cast<int>(s.size()); ++k) {
      const Vec2 a = pl.vertices[s[k]] - pl.vertices[s[k - 1]];
      const Vec2 b = pl.vertices[s[k + 1]] - pl.vertices[s[k]];
      const double ang = turn_angle_deg(a, b);
      if (ang > opts.corner_angle_deg)
        out.corners.push_back({pl.vertices[s[k]], ang, pi, s[k]});
    }
  }
  return out;
}

AffineReport check_prop2_affine(const SeparatedMap& map, const PhaseMap& pm) {
  AffineReport rep;
  const GridSpec& grid = pm.grid;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (pm.label(i, j) != PhaseLabel::OneDim) continue;
      bool interior = true;
      for (int dj = -2; dj <= 2 && interior; ++dj)
        for (int di = -2; di <= 2 && interior; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= grid.nx || jj >= grid.ny) continue;
          interior = pm.label(ii, jj) == PhaseLabel::OneDim;
        }
      if (!interior) continue;
      const Jet2 jet = map.jet(grid.x(i), grid.y(j));
      rep.max_second_derivative =
          std::max(rep.max_second_derivative,
                   jet.hxx.norm() + jet.hxy.norm() + jet.hyy.norm());
      ++rep.samples;
    }
  }
  return rep;
}

Rank1Report check_rank1_characterization(const SeparatedMap& map,
                                         const std::vector<Vec2>& samples) {
  Rank1Report rep;
  for (const Vec2& p : samples) {
    const CurveJet fx = map.f_jet(p.x());
    const CurveJet gy = map.g_jet(p.y());
    const double colinear =
        std::min((fx.d1 - gy.d1).norm(), (fx.d1 + gy.d1).norm());
    const double curvature = (fx.d2 + gy.d2).norm();
    const double v = std::max(colinear, curvature);
    if (v > rep.worst_violation) {
      rep.worst_violation = v;
      rep.worst_point = p;
    }
    ++rep.samples;
  }
  return rep;
}

std::vector<Vec2> rank1_closure_samples(const PhaseMap& pm) {
  std::vector<Vec2> out;
  for (int j = 0; j < pm.grid.ny; ++j)
    for (int i = 0; i < pm.grid.nx; ++i)
      if (pm.label(i, j) != PhaseLabel::TwoDim)
        out.emplace_back(pm.grid.x(i), pm.grid.y(j));
  return out;
}

DichotomyReport check_prop2_dichotomy(const InterfaceGraph& graph,
                                      const SeparatedMap& map,
                                      DichotomyOptions opts) {
  DichotomyReport rep;

  for (int pi = 0; pi < static_cast<int>(graph.pieces.size()); ++pi) {
    const auto& pl = graph.pieces[pi];

    // Split the chain at detected corners so each sub-piece is smooth.
    std::vector<int> cuts{0};
    for (const auto& c : graph.corners)
      if (c.piece == pi) cuts.push_back(c.vertex);
    cuts.push_back(static_cast<int>(pl.vertices.size()) - 1);
    std::sort(cuts.begin(), cuts.end());

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const int begin = cuts[s], end = cuts[s + 1] + 1;
      DichotomyPiece piece{};
      piece.vertices = end - begin;
      piece.slope = std::numeric_limits<double>::quiet_NaN();
      piece.max_curve = 0.0;

      if (piece.vertices < opts.min_vertices) {
        piece.branch = DichotomyBranch::Skipped;
        rep.pieces.push_back(piece);
        continue;
      }

      // Diagonal branch: every 5-vertex window must fit slope within
      // slope_tol of +1 or -1.
      const int window = std::min(5, piece.vertices);
      bool diagonal = true;
      for (int b = begin; b + window <= end && diagonal; ++b) {
        const Vec2 dir = tls_direction(pl.vertices, b, b + window);
        if (std::abs(dir.x()) < 1e-9 * dir.norm()) {
          diagonal = false;
          break;
        }
        const double slope = dir.y() / dir.x();
        if (b == begin) piece.slope = slope;
        diagonal = std::min(std::abs(slope - 1.0), std::abs(slope + 1.0)) <= opts.slope_tol;
      }

      // Affine branch: curve accelerations vanish along the piece.
      for (int k = begin; k < end; ++k) {
        const Vec2& p = pl.vertices[k];
        piece.max_curve = std::max({piece.max_curve, map.f_jet(p.x()).d2.norm(),
                                    map.g_jet(p.y()).d2.norm()});
      }
      const bool affine = piece.max_curve <= opts.affine_tol;

      piece.branch = diagonal  ? DichotomyBranch::Diagonal
                     : affine ? DichotomyBranch::Affine
                              : DichotomyBranch::Failed;
      if (piece.branch == DichotomyBranch::Failed) rep.pass = false;
      rep.pieces.push_back(piece);
    }
  }
  return rep;
}

double projection_jump(const SeparatedMap& map, const Vec2& p, const Vec2& normal,
                       double delta, double tol) {
  if (!(delta > 0.0)) throw std::invalid_argument("projection_jump: delta must be positive");
  const Vec2 n = normal.normalized();
  auto proj_at = [&](const Vec2& q) {
    Mat2 du;
    du.col(0) = map.f_jet(q.x()).d1;
    du.col(1) = map.g_jet(q.y()).d1;
    return nullspace_projection(du, tol);
  };
  const Mat2 p0 = proj_at(p);
  const Mat2 pp = proj_at(p + delta * n);
  const Mat2 pm = proj_at(p - delta * n);
  return std::max((pp - p0).norm(), (pm - p0).norm());
}

}  // namespace infharm
