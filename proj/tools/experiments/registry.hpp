#pragma once

#include "experiments/experiments.hpp"

namespace beurling::experiments {

ExperimentInfo isometry_experiment();
ExperimentInfo cauchy_experiment();
ExperimentInfo lemma32_experiment();
ExperimentInfo lemma33_experiment();
ExperimentInfo ap_constant_experiment();
ExperimentInfo doubling_experiment();
ExperimentInfo product_sets_experiment();
ExperimentInfo chain_experiment();
ExperimentInfo lemma34_experiment();
ExperimentInfo separation_experiment_info();
ExperimentInfo cmo_experiment();
ExperimentInfo beltrami_experiment();
ExperimentInfo growth_experiment();

}  // namespace beurling::experiments
