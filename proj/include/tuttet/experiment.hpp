#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tuttet/embed.hpp"
#include "tuttet/verify.hpp"

namespace tuttet {

struct DistributionSummary {
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0, mean = 0;
};

struct ExperimentResult {
  std::string mesh_id;
  long trials = 0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  long failures = 0;  // trials whose certificate is not "embedded"
  long errors = 0;    // trials aborted by solver/weight errors
  std::map<std::string, long> failure_modes;  // verdict name -> count
  DistributionSummary min_volume;             // per-trial minimum signed volume
};

// Runs `trials` Dirichlet(alpha) weight draws; trial t uses seed ^ t. Each
// trial solves and certifies; verdict tallies and the minimum signed volume
// distribution are reported. Deterministic in (mesh, trials, alpha, seed).
ExperimentResult run_random_weight_experiment(const Complex& complex,
                                              const BoundaryPlacement& placement, long trials,
                                              double alpha, std::uint64_t seed,
                                              const std::string& mesh_id = "",
                                              const CertifyOptions& certify_options = {});

}  // namespace tuttet
