// infharm2d: construct, sample and certify explicit infinity-harmonic maps
// u(x,y) = f(x) + g(y) on the plane, with their phase decomposition and
// interface geometry.
//
//   infharm2d <field|phase|interface|verify> --config <path>
//             [--out <dir>] [--nx N] [--ny N] [--tol-rank R] [--fd-step H]
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage, config or I/O error. INFHARM2D_THREADS caps worker threads
// (0 = auto).

#include "infharm/config.hpp"
#include "infharm/infinity_laplacian.hpp"
#include "infharm/interface.hpp"
#include "infharm/io.hpp"
#include "infharm/parallel.hpp"
#include "infharm/phase.hpp"
#include "infharm/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr const char* kUsage =
    "usage: infharm2d <field|phase|interface|verify> --config <path>\n"
    "                 [--out <dir>] [--nx N] [--ny N] [--tol-rank R] [--fd-step H]\n";

struct CliArgs {
  std::string command;
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> nx, ny;
  std::optional<double> tol_rank, fd_step;
};

CliArgs parse_args(int argc, char** argv) {
  using infharm::ConfigError;
  if (argc < 2) throw ConfigError("missing subcommand");
  CliArgs args;
  args.command = argv[1];
  if (args.command != "field" && args.command != "phase" &&
      args.command != "interface" && args.command != "verify")
    throw ConfigError("unknown subcommand: " + args.command);

  auto next = [&](int& i, const char* flag) -> std::string {
    if (i + 1 >= argc) throw ConfigError(std::string("flag ") + flag + " needs a value");
    return argv[++i];
  };
  for (int i = 2; i < argc; ++i) {
    const std::string a = argv[i];
    try {
      if (a == "--config") args.config_path = next(i, "--config");
      else if (a == "--out") args.out_dir = next(i, "--out");
      else if (a == "--nx") args.nx = std::stoi(next(i, "--nx"));
      else if (a == "--ny") args.ny = std::stoi(next(i, "--ny"));
      else if (a == "--tol-rank") args.tol_rank = std::stod(next(i, "--tol-rank"));
      else if (a == "--fd-step") args.fd_step = std::stod(next(i, "--fd-step"));
      else throw ConfigError("unknown flag: " + a);
    } catch (const std::invalid_argument&) {
      throw ConfigError("flag " + a + " has a malformed value");
    }
  }
  if (args.config_path.empty()) throw ConfigError("missing required flag --config");
  return args;
}

infharm::RunConfig load_config(const CliArgs& args) {
  infharm::RunConfig cfg = infharm::parse_config_file(args.config_path);
  if (args.out_dir) cfg.out_dir = *args.out_dir;
  if (args.nx || args.ny) {
    const int nx = args.nx.value_or(cfg.grid.nx);
    const int ny = args.ny.value_or(cfg.grid.ny);
    if (nx < 2) throw infharm::ConfigError("flag --nx must be at least 2");
    if (ny < 2) throw infharm::ConfigError("flag --ny must be at least 2");
    cfg.grid = infharm::GridSpec(cfg.grid.xmin, cfg.grid.xmax, cfg.grid.ymin,
                                 cfg.grid.ymax, nx, ny);
  }
  if (args.tol_rank) {
    if (!(*args.tol_rank > 0)) throw infharm::ConfigError("flag --tol-rank must be positive");
    cfg.tol_rank = *args.tol_rank;
  }
  if (args.fd_step) {
    if (!(*args.fd_step > 0)) throw infharm::ConfigError("flag --fd-step must be positive");
    cfg.fd_step = *args.fd_step;
  }
  return cfg;
}

std::string out_path(const infharm::RunConfig& cfg, const std::string& name) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw infharm::IoError("cannot create output directory: " + cfg.out_dir);
  return (fs::path(cfg.out_dir) / name).string();
}

int thread_count_from_env() {
  const char* env = std::getenv("INFHARM2D_THREADS");
  if (env == nullptr) return infharm::resolve_thread_count(0);
  try {
    return infharm::resolve_thread_count(std::stoi(env));
  } catch (const std::exception&) {
    throw infharm::ConfigError("INFHARM2D_THREADS is not an integer");
  }
}

int run(const CliArgs& args) {
  using namespace infharm;
  const RunConfig cfg = load_config(args);
  const int threads = thread_count_from_env();

  if (args.command == "field") {
    const SeparatedMap map = cfg.make_map();
    const std::string path = out_path(cfg, "field.csv");
    write_field_csv(path, map, cfg.grid, cfg.tol_rank);
    std::cout << "wrote " << path << '\n';
    return 0;
  }
  if (args.command == "phase") {
    const SeparatedMap map = cfg.make_map();
    const PhaseMap pm = build_phase_map(map, cfg.grid, cfg.tol_rank, threads);
    const std::string ppm = out_path(cfg, "phase.ppm");
    const std::string csv = out_path(cfg, "phase.csv");
    write_phase_ppm(ppm, pm);
    write_phase_csv(csv, pm);
    std::cout << "wrote " << ppm << " and " << csv << '\n';
    return 0;
  }
  if (args.command == "interface") {
    const SeparatedMap map = cfg.make_map();
    const PhaseMap pm = build_phase_map(map, cfg.grid, cfg.tol_rank, threads);
    const InterfaceGraph graph = extract_interface(pm, cfg.interface_opts);
    const std::string csv = out_path(cfg, "interface.csv");
    const std::string rpt = out_path(cfg, "interface_report.txt");
    write_interface_csv(csv, graph);
    const std::string report = interface_report(graph);
    write_text(rpt, report);
    std::cout << report;
    std::cout << "wrote " << csv << " and " << rpt << '\n';
    return 0;
  }
  // verify
  const VerifyReport report = run_verification(cfg, threads);
  std::cout << report.to_text();
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(parse_args(argc, argv));
  } catch (const infharm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n' << kUsage;
    return 2;
  } catch (const infharm::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
