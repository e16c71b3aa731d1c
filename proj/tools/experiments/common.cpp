#include "experiments/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace beurling::experiments {

std::vector<ParamSpec> shared_params(const std::string& name, int grid_n, double grid_l) {
  return {
      {"experiment", name, "experiment name"},
      {"seed", "1", "base RNG seed"},
      {"grid.n", std::to_string(grid_n), "samples per axis (power of two >= 8)"},
      {"grid.L", fmt(grid_l), "window half-width"},
      {"weight.kind", "power", "constant | power"},
      {"weight.alpha", "0.5", "power-weight exponent"},
      {"weight.center_x", "0", "power-weight centre, real part"},
      {"weight.center_y", "0", "power-weight centre, imaginary part"},
      {"weight.value", "1", "constant-weight value"},
      {"weight.p", "2", "exponent p in (1, inf)"},
      {"morrey.kappa", "0.5", "exponent kappa in (0, 1)"},
      {"family.min_level", "1", "coarsest dyadic level (radius L / 2^level)"},
      {"family.max_level", "3", "finest dyadic level"},
      {"family.refine", "1", "centre lattice refinement"},
  };
}

Setup make_setup(const Config& cfg) {
  return validated([&] {
    const GridSpec spec = make_grid(cfg.get_int("grid.n"), cfg.get_double("grid.L"));
    const double p = cfg.get_double("weight.p");
    const std::string kind = cfg.get_string("weight.kind");
    std::optional<Weight> w;
    if (kind == "constant") {
      w = constant_weight(spec, cfg.get_double("weight.value"), p);
    } else if (kind == "power") {
      w = power_weight(spec, cfg.get_double("weight.alpha"),
                       complex(cfg.get_double("weight.center_x"), cfg.get_double("weight.center_y")), p);
    } else {
      throw ConfigError("weight.kind must be 'constant' or 'power', got '" + kind + "'");
    }
    const MorreyParams params(p, cfg.get_double("morrey.kappa"));
    SquareFamily family =
        dyadic_family(spec, cfg.get_int("family.min_level"), cfg.get_int("family.max_level"), cfg.get_int("family.refine"));
    return Setup{spec, std::move(*w), params, std::move(family), cfg.get_u64("seed")};
  });
}

void require(bool cond, const std::string& message) {
  if (!cond) throw ConfigError(message);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Check make_check(std::string name, bool pass, std::string detail) {
  return Check{std::move(name), pass, std::move(detail)};
}

double spread(const std::vector<double>& v) {
  if (v.empty()) return 1.0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (!(*lo > 0.0)) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

}  // namespace beurling::experiments
