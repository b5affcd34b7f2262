#pragma once

#include "infharm/interface.hpp"
#include "infharm/kprofile.hpp"
#include "infharm/separated_map.hpp"
#include "infharm/types.hpp"

#include <stdexcept>
#include <string>

namespace infharm {

/// Config or usage problem; the CLI reports these with exit code 2. The
/// message always names the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed run configuration. The file format is flat `section.key = value`
/// lines with `#` comments.
struct RunConfig {
  struct ProfileSpec {
    std::string kind;        // zero | example_a | example_b | linear | tabulated
    double slope = 1.0;      // linear
    std::string knots_file;  // tabulated
  };

  ProfileSpec fprofile;
  ProfileSpec gprofile;     // used when sign == PlusG; defaults to fprofile
  bool has_gprofile = false;
  SeparatedMap::Sign sign = SeparatedMap::Sign::MinusF;

  GridSpec grid;
  double tol_rank = 1e-8;
  double tol_quadrature = 1e-12;
  double fd_step = 1e-3;
  std::string out_dir = "out";
  InterfaceOptions interface_opts;
  bool expect_solution = true;  // verify.expect = solution | non_solution

  KProfile make_profile(const ProfileSpec& spec) const;
  SeparatedMap make_map() const;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace infharm
