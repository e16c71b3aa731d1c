#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "beurling/grid.hpp"
#include "experiments/experiments.hpp"

namespace fs = std::filesystem;
using namespace beurling;
using namespace beurling::experiments;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int run_command(const std::string& config_path, const std::string& out_dir, std::optional<std::uint64_t> seed,
                std::optional<int> grid_n, std::optional<double> grid_l) {
  Config user;
  const ExperimentInfo* info = nullptr;
  Config resolved;
  try {
    user = Config::load(config_path);
    if (seed) user.set("seed", std::to_string(*seed));
    if (grid_n) user.set("grid.n", std::to_string(*grid_n));
    if (grid_l) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", *grid_l);
      user.set("grid.L", buf);
    }
    if (!user.has("experiment")) throw ConfigError("config must set 'experiment'");
    info = &find_experiment(user.get_string("experiment"));
    resolved = resolve(info->params, user);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  write_text(dir / "config.resolved", resolved.dump());
  const fs::path csv = dir / (info->name + ".csv");

  ExperimentResult result;
  try {
    run_resolved(*info, resolved, result);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    write_csv(result.table, csv);
    result.checks.push_back({"numerical failure", false, e.what()});
    write_text(dir / "summary.txt", summary_text(result));
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  write_csv(result.table, csv);
  const std::string summary = summary_text(result);
  write_text(dir / "summary.txt", summary);
  std::cout << summary;
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beurling transform commutator experiments"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_n;
  std::optional<double> grid_l;
  CLI::App* run = app.add_subcommand("run", "run one experiment");
  run->add_option("--config", config_path, "config file (key = value)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--seed", seed, "override the RNG seed");
  run->add_option("--grid-n", grid_n, "override the grid size");
  run->add_option("--grid-l", grid_l, "override the window half-width");

  CLI::App* list = app.add_subcommand("list", "list experiments and anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& e : catalogue()) std::cout << e.name << "\t" << e.anchor << "\n";
      return 0;
    }
    return run_command(config_path, out_dir, seed, grid_n, grid_l);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
