#pragma once

#include "infharm/interface.hpp"
#include "infharm/phase.hpp"
#include "infharm/separated_map.hpp"

#include <string>

namespace infharm {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Field dump, one row per grid node (y-outer, x-inner):
/// x,y,u1,u2,du11,du21,du12,du22,res1,res2,rank_indicator
/// Floats use 17 significant digits so re-parsing is bit-exact.
void write_field_csv(const std::string& path, const SeparatedMap& map,
                     const GridSpec& grid, double tol);

/// Label dump x,y,label,indicator with labels two_dim/one_dim/interface.
void write_phase_csv(const std::string& path, const PhaseMap& pm);

/// Inverse of write_phase_csv; the grid is rebuilt from the node
/// coordinates, labels and indicators bit-exact.
PhaseMap read_phase_csv(const std::string& path, double tol = 1e-8);

/// Binary P6 image, one pixel per node, top row = ymax. Palette:
/// TwoDim white (255,255,255), OneDim gray (96,96,96),
/// InterfaceBand black (0,0,0).
void write_phase_ppm(const std::string& path, const PhaseMap& pm);

/// Polyline vertices: piece,vertex,x,y.
void write_interface_csv(const std::string& path, const InterfaceGraph& graph);

/// Report lines "junction <x> <y> <degree>" and "corner <x> <y> <angle_deg>".
std::string interface_report(const InterfaceGraph& graph);

void write_text(const std::string& path, const std::string& content);

}  // namespace infharm
