#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tuttet {

// All randomness in the library flows through this wrapper so that results
// are bit-reproducible across platforms: mt19937_64 is fully specified by
// the standard and the variate transforms below are hand-rolled (the
// std:: distributions are implementation-defined).

std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed from (seed, salt), e.g. per weight row
// or per experiment trial.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Uniform on [0, 1).
  double uniform();
  // Uniform on (0, 1].
  double uniform_open();
  double normal();
  // Marsaglia-Tsang gamma variate, shape alpha > 0, unit scale.
  double gamma(double alpha);
  // k-dimensional Dirichlet(alpha) sample.
  std::vector<double> dirichlet(double alpha, int k);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace tuttet
