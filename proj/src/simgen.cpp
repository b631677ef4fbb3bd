#include "hfl/simgen.hpp"

#include <cmath>

namespace hfl {

std::string noise_name(NoiseType t) {
  switch (t) {
    case NoiseType::gaussian: return "gaussian";
    case NoiseType::student_t: return "t";
    case NoiseType::lognormal: return "lognormal";
    case NoiseType::laplace: return "laplace";
    case NoiseType::none: return "none";
  }
  return "unknown";
}

NoiseType parse_noise(const std::string& name) {
  if (name == "gaussian") return NoiseType::gaussian;
  if (name == "t" || name == "student_t") return NoiseType::student_t;
  if (name == "lognormal") return NoiseType::lognormal;
  if (name == "laplace") return NoiseType::laplace;
  if (name == "none") return NoiseType::none;
  throw std::invalid_argument("unknown noise law: " + name);
}

Mat gen_design(Index n, Index p, std::uint64_t seed) {
  if (n < 1 || p < 1) throw std::invalid_argument("gen_design: n, p must be >= 1");
  Rng rng(seed);
  Mat X(n, p);
  const double carry = 0.5;
  const double fresh = std::sqrt(1.0 - carry * carry);
  for (Index i = 0; i < n; ++i) {
    double prev = rng.normal();
    X(i, 0) = prev;
    for (Index j = 1; j < p; ++j) {
      prev = carry * prev + fresh * rng.normal();
      X(i, j) = prev;
    }
  }
  return X;
}

namespace {
// ceil(num / den) for positive integers.
Index ceil_div(Index num, Index den) { return (num + den - 1) / den; }
}  // namespace

GroundTruth gen_beta(Index p) {
  if (p < 5) throw std::invalid_argument("gen_beta: p must be >= 5");
  GroundTruth gt;
  gt.beta_star = Vec::Zero(p);
  // 1-based block bounds from the ceiling formulas.
  const Index one_lo = ceil_div(p, 5) + 1;
  const Index one_hi = ceil_div(2 * p, 5);
  const Index neg_lo = ceil_div(3 * p, 5) + 1;
  const Index neg_hi = ceil_div(3 * p, 4);
  for (Index i = 1; i <= p; ++i) {
    if (i >= one_lo && i <= one_hi) {
      gt.beta_star[i - 1] = 1.0;
    } else if (i >= neg_lo && i <= neg_hi) {
      gt.beta_star[i - 1] = -1.5;
    }
  }
  for (Index i = 0; i < p; ++i) {
    if (gt.beta_star[i] != 0.0) gt.support.push_back(i);
  }
  return gt;
}

Vec gen_noise(Index n, NoiseType type, std::uint64_t seed, bool center_lognormal) {
  if (n < 1) throw std::invalid_argument("gen_noise: n must be >= 1");
  Rng rng(seed);
  Vec eps(n);
  switch (type) {
    case NoiseType::gaussian:
      for (Index i = 0; i < n; ++i) eps[i] = 0.05 * rng.normal();
      break;
    case NoiseType::student_t:
      for (Index i = 0; i < n; ++i) eps[i] = rng.student_t(1.5);
      break;
    case NoiseType::lognormal: {
      const double shift = center_lognormal ? std::exp(2.0) : 0.0;
      for (Index i = 0; i < n; ++i) eps[i] = rng.lognormal(0.0, 2.0) - shift;
      break;
    }
    case NoiseType::laplace:
      for (Index i = 0; i < n; ++i) eps[i] = rng.laplace(0.0, 1.0);
      break;
    case NoiseType::none:
      eps.setZero();
      break;
  }
  return eps;
}

std::pair<RegressionProblem, GroundTruth> gen_problem(const SimulationSpec& spec) {
  spec.validate();
  RegressionProblem pr;
  GroundTruth gt = gen_beta(spec.p);
  pr.X = gen_design(spec.n, spec.p, mix_seed(spec.seed, 1));
  pr.y = pr.X * gt.beta_star +
         gen_noise(spec.n, spec.noise, mix_seed(spec.seed, 2), spec.center_lognormal);
  return {std::move(pr), std::move(gt)};
}

}  // namespace hfl
