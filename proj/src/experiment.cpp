#include "tuttet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tuttet {

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = static_cast<size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

ExperimentResult run_random_weight_experiment(const Complex& complex,
                                              const BoundaryPlacement& placement, long trials,
                                              double alpha, std::uint64_t seed,
                                              const std::string& mesh_id,
                                              const CertifyOptions& certify_options) {
  ExperimentResult result;
  result.mesh_id = mesh_id;
  result.trials = trials;
  result.alpha = alpha;
  result.seed = seed;

  std::vector<double> min_volumes;
  min_volumes.reserve(trials);

  for (long t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed ^ static_cast<std::uint64_t>(t);
    try {
      const WeightMatrix weights =
          assemble_weights(complex, WeightScheme::dirichlet(alpha, trial_seed));
      const RealizedMesh realized = solve_positions(complex, weights, placement);
      const EmbeddingCertificate cert = certify(realized, certify_options);
      min_volumes.push_back(cert.min_signed_volume);
      if (cert.verdict != Verdict::Embedded) {
        ++result.failures;
        ++result.failure_modes[verdict_name(cert.verdict)];
      }
    } catch (const Error&) {
      ++result.errors;
    }
  }

  if (!min_volumes.empty()) {
    std::vector<double> sorted = min_volumes;
    std::sort(sorted.begin(), sorted.end());
    result.min_volume.min = sorted.front();
    result.min_volume.max = sorted.back();
    result.min_volume.q25 = quantile(sorted, 0.25);
    result.min_volume.median = quantile(sorted, 0.5);
    result.min_volume.q75 = quantile(sorted, 0.75);
    result.min_volume.mean =
        std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  }
  return result;
}

}  // namespace tuttet
