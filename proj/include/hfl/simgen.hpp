#pragma once

#include "hfl/rng.hpp"
#include "hfl/types.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace hfl {

/// Noise laws for the synthetic benchmark.  `none` is a testing aid that
/// produces y = X beta* exactly.
enum class NoiseType { gaussian, student_t, lognormal, laplace, none };

std::string noise_name(NoiseType t);
NoiseType parse_noise(const std::string& name);  // throws on unknown names

struct SimulationSpec {
  Index n = 100;
  Index p = 100;
  NoiseType noise = NoiseType::gaussian;
  std::uint64_t seed = 0;
  bool center_lognormal = false;  // opt-in: subtract the analytic mean e^2

  void validate() const {
    if (n < 1) throw std::invalid_argument("SimulationSpec: n must be >= 1");
    if (p < 5) throw std::invalid_argument("SimulationSpec: p must be >= 5");
  }
};

struct GroundTruth {
  Vec beta_star;
  std::vector<Index> support;  // 0-based indices of nonzero coefficients
};

/// Rows i.i.d. N(0, Sigma) with Sigma_{ij} = 0.5^|i-j|, generated by the
/// AR(1) recursion x_1 = e_1, x_j = 0.5 x_{j-1} + sqrt(0.75) e_j.
Mat gen_design(Index n, Index p, std::uint64_t seed);

/// Piecewise-constant truth: 1 on the second fifth of the index range,
/// -1.5 between ceil(3p/5)+1 and ceil(3p/4) (1-based), 0 elsewhere.
GroundTruth gen_beta(Index p);

/// i.i.d. draws: N(0, 0.05^2), t_{1.5}, logN(0, 2^2), or Laplace(0, 1).
Vec gen_noise(Index n, NoiseType type, std::uint64_t seed, bool center_lognormal = false);

/// y = X beta* + eps; deterministic given spec.seed.
std::pair<RegressionProblem, GroundTruth> gen_problem(const SimulationSpec& spec);

}  // namespace hfl
