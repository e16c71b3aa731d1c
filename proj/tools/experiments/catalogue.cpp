#include <sstream>

#include "experiments/common.hpp"
#include "experiments/registry.hpp"

namespace beurling::experiments {

bool ExperimentResult::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<ExperimentInfo>& catalogue() {
  static const std::vector<ExperimentInfo> all = {
      isometry_experiment(),    cauchy_experiment(),          lemma32_experiment(), lemma33_experiment(),
      ap_constant_experiment(), doubling_experiment(),        product_sets_experiment(),
      chain_experiment(),       lemma34_experiment(),         separation_experiment_info(),
      cmo_experiment(),         beltrami_experiment(),        growth_experiment(),
  };
  return all;
}

const ExperimentInfo& find_experiment(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.name == name) return e;
  std::string valid;
  for (const auto& e : catalogue()) valid += (valid.empty() ? "" : ", ") + e.name;
  throw ConfigError("unknown experiment '" + name + "'; valid names: " + valid);
}

void run_resolved(const ExperimentInfo& info, const Config& resolved, ExperimentResult& out) {
  out.name = info.name;
  out.anchor = info.anchor;
  info.run(resolved, out);
}

ExperimentResult run_experiment(const ExperimentInfo& info, const Config& user) {
  ExperimentResult r;
  run_resolved(info, resolve(info.params, user), r);
  return r;
}

std::string summary_text(const ExperimentResult& result) {
  std::ostringstream out;
  out << "experiment: " << result.name << "\n";
  out << "anchor: " << result.anchor << "\n";
  for (const auto& c : result.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  for (const auto& n : result.notes) out << "note: " << n << "\n";
  if (result.vacuous) out << "status: VACUOUS\n";
  out << "status: " << (result.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace beurling::experiments
