#include "infharm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace infharm {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

class KeyValueConfig {
 public:
  explicit KeyValueConfig(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(lineno) +
                          " is not `key = value`: " + line);
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + " has empty key");
      if (!values_.emplace(key, value).second)
        throw ConfigError("duplicate config key: " + key);
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string require(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required config key: " + key);
    consumed_.insert(it->first);
    return it->second;
  }

  std::string get(const std::string& key, const std::string& fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    consumed_.insert(it->first);
    return it->second;
  }

  double require_real(const std::string& key) { return to_real(key, require(key)); }

  double get_real(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return to_real(key, require(key));
  }

  int require_int(const std::string& key) {
    const std::string v = require(key);
    try {
      std::size_t pos = 0;
      const int n = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + " is not an integer: " + v);
    }
  }

  void reject_unknown() const {
    for (const auto& [key, value] : values_)
      if (!consumed_.count(key)) throw ConfigError("unknown config key: " + key);
  }

 private:
  double to_real(const std::string& key, const std::string& v) const {
    try {
      std::size_t pos = 0;
      const double x = std::stod(v, &pos);
      if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + " is not a finite real: " + v);
    }
  }

  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

RunConfig::ProfileSpec parse_profile(KeyValueConfig& kv, const std::string& prefix,
                                     bool required) {
  RunConfig::ProfileSpec spec;
  if (!required && !kv.has(prefix + ".kind")) {
    spec.kind = "";
    return spec;
  }
  spec.kind = kv.require(prefix + ".kind");
  if (spec.kind == "linear") {
    spec.slope = kv.require_real(prefix + ".slope");
  } else if (spec.kind == "tabulated") {
    spec.knots_file = kv.require(prefix + ".knots_file");
  } else if (spec.kind != "zero" && spec.kind != "example_a" && spec.kind != "example_b") {
    throw ConfigError("config key " + prefix + ".kind has unknown value: " + spec.kind);
  }
  return spec;
}

}  // namespace

KProfile RunConfig::make_profile(const ProfileSpec& spec) const {
  if (spec.kind == "zero") return KProfile::zero();
  if (spec.kind == "example_a") return KProfile::example_a();
  if (spec.kind == "example_b") return KProfile::example_b();
  if (spec.kind == "linear") return KProfile::linear(spec.slope);
  if (spec.kind == "tabulated") {
    try {
      return KProfile::tabulated_from_csv(spec.knots_file);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("k.knots_file: ") + e.what());
    }
  }
  throw ConfigError("unknown profile kind: " + spec.kind);
}

SeparatedMap RunConfig::make_map() const {
  // Anchor tables padded past the grid so FD stencils and jump probes
  // never leave the cached range.
  PlanarCurve::Options copts;
  copts.anchor_min = std::floor(std::min(grid.xmin, grid.ymin)) - 2.0;
  copts.anchor_max = std::ceil(std::max(grid.xmax, grid.ymax)) + 2.0;
  copts.quad_tol = tol_quadrature;

  PlanarCurve f(make_profile(fprofile), copts);
  if (sign == SeparatedMap::Sign::MinusF) return SeparatedMap::minus_f(std::move(f));
  PlanarCurve g(make_profile(has_gprofile ? gprofile : fprofile), copts);
  return SeparatedMap::plus_g(std::move(f), std::move(g));
}

RunConfig parse_config_text(const std::string& text) {
  KeyValueConfig kv(text);
  RunConfig cfg;

  cfg.fprofile = parse_profile(kv, "k", true);
  const std::string sign = kv.get("map.sign", "minus_f");
  if (sign == "minus_f") {
    cfg.sign = SeparatedMap::Sign::MinusF;
  } else if (sign == "plus_g") {
    cfg.sign = SeparatedMap::Sign::PlusG;
  } else {
    throw ConfigError("config key map.sign must be minus_f or plus_g, got: " + sign);
  }
  cfg.gprofile = parse_profile(kv, "g", false);
  cfg.has_gprofile = !cfg.gprofile.kind.empty();
  if (cfg.has_gprofile && cfg.sign != SeparatedMap::Sign::PlusG)
    throw ConfigError("config key g.kind requires map.sign = plus_g");

  const double xmin = kv.require_real("grid.xmin");
  const double xmax = kv.require_real("grid.xmax");
  const double ymin = kv.require_real("grid.ymin");
  const double ymax = kv.require_real("grid.ymax");
  const int nx = kv.require_int("grid.nx");
  const int ny = kv.require_int("grid.ny");
  if (!(xmax > xmin)) throw ConfigError("config key grid.xmax must exceed grid.xmin");
  if (!(ymax > ymin)) throw ConfigError("config key grid.ymax must exceed grid.ymin");
  if (nx < 2) throw ConfigError("config key grid.nx must be at least 2");
  if (ny < 2) throw ConfigError("config key grid.ny must be at least 2");
  cfg.grid = GridSpec(xmin, xmax, ymin, ymax, nx, ny);

  cfg.tol_rank = kv.get_real("tol.rank", 1e-8);
  cfg.tol_quadrature = kv.get_real("tol.quadrature", 1e-12);
  cfg.fd_step = kv.get_real("fd.step", 1e-3);
  if (!(cfg.tol_rank > 0)) throw ConfigError("config key tol.rank must be positive");
  if (!(cfg.tol_quadrature > 0)) throw ConfigError("config key tol.quadrature must be positive");
  if (!(cfg.fd_step > 0)) throw ConfigError("config key fd.step must be positive");

  cfg.out_dir = kv.get("out.dir", "out");
  cfg.interface_opts.corner_angle_deg = kv.get_real("interface.corner_angle_deg", 20.0);
  cfg.interface_opts.collinear_angle_deg = kv.get_real("interface.collinear_angle_deg", 1.0);

  const std::string expect = kv.get("verify.expect", "solution");
  if (expect == "solution") {
    cfg.expect_solution = true;
  } else if (expect == "non_solution") {
    cfg.expect_solution = false;
  } else {
    throw ConfigError("config key verify.expect must be solution or non_solution, got: " + expect);
  }

  kv.reject_unknown();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace infharm
