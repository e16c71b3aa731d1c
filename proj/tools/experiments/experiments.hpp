#pragma once

// Experiment catalogue shared by the CLI and the acceptance suite. Each
// experiment turns a resolved Config into a CSV table plus named checks.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "experiments/config.hpp"
#include "experiments/table.hpp"

namespace beurling::experiments {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentResult {
  std::string name;
  std::string anchor;
  Table table;
  std::vector<Check> checks;
  /// Named scalar outputs (fitted constants, extrema) for programmatic use.
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;
  bool vacuous = false;

  bool passed() const;
};

struct ExperimentInfo {
  std::string name;
  std::string anchor;
  std::vector<ParamSpec> params;  // includes the shared keys
  std::function<void(const Config&, ExperimentResult&)> run;
};

const std::vector<ExperimentInfo>& catalogue();

/// Throws ConfigError listing the valid names.
const ExperimentInfo& find_experiment(const std::string& name);

/// Resolves the user config against the experiment schema and runs it.
ExperimentResult run_experiment(const ExperimentInfo& info, const Config& user);
/// Runs on an already resolved config; rows added before a throw stay in out.
void run_resolved(const ExperimentInfo& info, const Config& resolved, ExperimentResult& out);

/// One block per experiment: anchor, PASS/FAIL per check, notes.
std::string summary_text(const ExperimentResult& result);

}  // namespace beurling::experiments
