#pragma once

// Shared setup for experiments: grid, weight, Morrey parameters and the
// default square family, all read from a resolved Config.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beurling/grid.hpp"
#include "beurling/morrey.hpp"
#include "beurling/weights.hpp"
#include "experiments/config.hpp"
#include "experiments/experiments.hpp"

namespace beurling::experiments {

struct Setup {
  GridSpec spec;
  Weight weight;
  MorreyParams params;
  SquareFamily family;
  std::uint64_t seed;
};

/// Schema entries shared by every experiment; grid size defaults vary.
std::vector<ParamSpec> shared_params(const std::string& name, int grid_n, double grid_l);

/// Builds the setup; argument errors are reported as ConfigError.
Setup make_setup(const Config& cfg);

/// Runs f and rethrows std::invalid_argument as ConfigError.
template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void require(bool cond, const std::string& message);

std::string fmt(double v);
Check make_check(std::string name, bool pass, std::string detail);

/// max / min of positive values; +inf when some value is not positive.
double spread(const std::vector<double>& v);

}  // namespace beurling::experiments
