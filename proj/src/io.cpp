#include "infharm/io.hpp"

#include "infharm/infinity_laplacian.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace infharm {
namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* label_token(PhaseLabel l) {
  switch (l) {
    case PhaseLabel::TwoDim: return "two_dim";
    case PhaseLabel::OneDim: return "one_dim";
    case PhaseLabel::InterfaceBand: return "interface";
  }
  return "?";
}

PhaseLabel parse_label(const std::string& s) {
  if (s == "two_dim") return PhaseLabel::TwoDim;
  if (s == "one_dim") return PhaseLabel::OneDim;
  if (s == "interface") return PhaseLabel::InterfaceBand;
  throw IoError("unknown phase label: " + s);
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_field_csv(const std::string& path, const SeparatedMap& map,
                     const GridSpec& grid, double tol) {
  std::ofstream out = open_out(path);
  out << "x,y,u1,u2,du11,du21,du12,du22,res1,res2,rank_indicator\n";
  const auto xs = grid.xs();
  const auto ys = grid.ys();
  for (double y : ys) {
    for (double x : xs) {
      const Jet2 jet = map.jet(x, y);
      const Residual res = infinity_laplacian(jet, tol);
      const Classification c = classify_point(jet, tol);
      out << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(jet.u.x()) << ','
          << fmt17(jet.u.y()) << ',' << fmt17(jet.du(0, 0)) << ','
          << fmt17(jet.du(1, 0)) << ',' << fmt17(jet.du(0, 1)) << ','
          << fmt17(jet.du(1, 1)) << ',' << fmt17(res.value.x()) << ','
          << fmt17(res.value.y()) << ',' << fmt17(c.indicator) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_phase_csv(const std::string& path, const PhaseMap& pm) {
  std::ofstream out = open_out(path);
  out << "x,y,label,indicator\n";
  for (int j = 0; j < pm.grid.ny; ++j)
    for (int i = 0; i < pm.grid.nx; ++i)
      out << fmt17(pm.grid.x(i)) << ',' << fmt17(pm.grid.y(j)) << ','
          << label_token(pm.label(i, j)) << ',' << fmt17(pm.ind(i, j)) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

PhaseMap read_phase_csv(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty phase csv: " + path);

  std::vector<double> xs, ys;
  std::vector<PhaseLabel> labels;
  std::vector<double> indicators;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string xf, yf, lf, inf;
    if (!std::getline(ss, xf, ',') || !std::getline(ss, yf, ',') ||
        !std::getline(ss, lf, ',') || !std::getline(ss, inf))
      throw IoError("malformed phase csv row: " + line);
    const double x = std::stod(xf), y = std::stod(yf);
    if (ys.empty() || y != ys.back()) ys.push_back(y);
    if (ys.size() == 1) xs.push_back(x);
    labels.push_back(parse_label(lf));
    indicators.push_back(std::stod(inf));
  }
  if (xs.size() < 2 || ys.size() < 2) throw IoError("phase csv too small: " + path);
  if (labels.size() != xs.size() * ys.size())
    throw IoError("phase csv is not a full lattice: " + path);

  PhaseMap pm;
  pm.grid = GridSpec(xs.front(), xs.back(), ys.front(), ys.back(),
                     static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  pm.tol = tol;
  pm.labels = std::move(labels);
  pm.indicator = std::move(indicators);
  return pm;
}

void write_phase_ppm(const std::string& path, const PhaseMap& pm) {
  std::ofstream out = open_out(path, true);
  out << "P6\n" << pm.grid.nx << ' ' << pm.grid.ny << "\n255\n";
  for (int j = pm.grid.ny - 1; j >= 0; --j) {
    for (int i = 0; i < pm.grid.nx; ++i) {
      unsigned char rgb[3];
      switch (pm.label(i, j)) {
        case PhaseLabel::TwoDim: rgb[0] = rgb[1] = rgb[2] = 255; break;
        case PhaseLabel::OneDim: rgb[0] = rgb[1] = rgb[2] = 96; break;
        case PhaseLabel::InterfaceBand: rgb[0] = rgb[1] = rgb[2] = 0; break;
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_interface_csv(const std::string& path, const InterfaceGraph& graph) {
  std::ofstream out = open_out(path);
  out << "piece,vertex,x,y\n";
  for (int p = 0; p < static_cast<int>(graph.pieces.size()); ++p) {
    const auto& pl = graph.pieces[p];
    for (int k = 0; k < static_cast<int>(pl.vertices.size()); ++k)
      out << p << ',' << k << ',' << fmt17(pl.vertices[k].x()) << ','
          << fmt17(pl.vertices[k].y()) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::string interface_report(const InterfaceGraph& graph) {
  std::ostringstream out;
  for (const auto& j : graph.junctions)
    out << "junction " << fmt17(j.p.x()) << ' ' << fmt17(j.p.y()) << ' '
        << j.degree << '\n';
  for (const auto& c : graph.corners)
    out << "corner " << fmt17(c.p.x()) << ' ' << fmt17(c.p.y()) << ' '
        << fmt17(c.angle_deg) << '\n';
  return out.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out = open_out(path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace infharm
