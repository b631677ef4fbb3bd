#include "hfl/simgen.hpp"

#include "hfl/metrics.hpp"
#include "hfl/solver_dual.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using hfl::Index;
using hfl::Mat;
using hfl::Vec;

TEST_CASE("gen_design covariance structure") {
  const Index n = 10000, p = 5;
  Mat X = hfl::gen_design(n, p, 42);

  for (Index j = 0; j < p; ++j) {
    const double mean = X.col(j).mean();
    const double var = (X.col(j).array() - mean).square().sum() / static_cast<double>(n - 1);
    CHECK(std::abs(var - 1.0) <= 0.05);
  }
  for (Index j = 0; j + 1 < p; ++j) {
    const double cov =
        ((X.col(j).array() - X.col(j).mean()) * (X.col(j + 1).array() - X.col(j + 1).mean()))
            .sum() /
        static_cast<double>(n - 1);
    CHECK(std::abs(cov - 0.5) <= 0.05);
  }
  // Lag-2 correlation 0.25.
  const double cov2 =
      ((X.col(0).array() - X.col(0).mean()) * (X.col(2).array() - X.col(2).mean())).sum() /
      static_cast<double>(n - 1);
  CHECK(std::abs(cov2 - 0.25) <= 0.05);
}

TEST_CASE("gen_design determinism") {
  Mat a = hfl::gen_design(50, 20, 7);
  Mat b = hfl::gen_design(50, 20, 7);
  CHECK((a - b).lpNorm<Eigen::Infinity>() == 0.0);
  Mat c = hfl::gen_design(50, 20, 8);
  CHECK((a - c).lpNorm<Eigen::Infinity>() > 0.0);
}

TEST_CASE("gen_beta block pattern") {
  auto gt20 = hfl::gen_beta(20);
  for (Index i = 1; i <= 20; ++i) {
    const double v = gt20.beta_star[i - 1];
    if (i >= 5 && i <= 8) {
      CHECK(v == 1.0);
    } else if (i >= 13 && i <= 15) {
      CHECK(v == -1.5);
    } else {
      CHECK(v == 0.0);
    }
  }

  auto gt5 = hfl::gen_beta(5);
  CHECK(gt5.beta_star[0] == 0.0);
  CHECK(gt5.beta_star[1] == 1.0);
  CHECK(gt5.beta_star[2] == 0.0);
  CHECK(gt5.beta_star[3] == -1.5);
  CHECK(gt5.beta_star[4] == 0.0);
  CHECK(gt5.support == std::vector<Index>{1, 3});

  for (Index p : {6, 17, 100, 801}) {
    auto gt = hfl::gen_beta(p);
    for (Index i = 0; i < p; ++i) {
      const double v = gt.beta_star[i];
      CHECK((v == 0.0 || v == 1.0 || v == -1.5));
    }
  }
  CHECK_THROWS_AS(hfl::gen_beta(4), std::invalid_argument);
}

TEST_CASE("gen_noise law checks") {
  const Index n = 100000;

  Vec g = hfl::gen_noise(n, hfl::NoiseType::gaussian, 1);
  const double g_sd = std::sqrt(g.squaredNorm() / static_cast<double>(n));
  CHECK(std::abs(g_sd - 0.05) <= 0.005);

  Vec l = hfl::gen_noise(n, hfl::NoiseType::laplace, 2);
  CHECK(std::abs(l.mean()) <= 0.02);
  const double l_var = (l.array() - l.mean()).square().sum() / static_cast<double>(n - 1);
  CHECK(std::abs(l_var - 2.0) <= 0.2);

  Vec ln = hfl::gen_noise(n, hfl::NoiseType::lognormal, 3);
  std::vector<double> sorted(ln.data(), ln.data() + n);
  std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
  CHECK(std::abs(sorted[static_cast<std::size_t>(n / 2)] - 1.0) <= 0.05);
  CHECK(ln.minCoeff() > 0.0);  // uncentered by default

  Vec t = hfl::gen_noise(n, hfl::NoiseType::student_t, 4);
  std::vector<double> tsorted(t.data(), t.data() + n);
  std::nth_element(tsorted.begin(), tsorted.begin() + n / 2, tsorted.end());
  CHECK(std::abs(tsorted[static_cast<std::size_t>(n / 2)]) <= 0.05);

  Vec centered = hfl::gen_noise(n, hfl::NoiseType::lognormal, 3, true);
  CHECK(std::abs(centered.mean()) <= 2.0);  // heavy tail, loose sanity band

  CHECK(hfl::gen_noise(10, hfl::NoiseType::none, 5).norm() == 0.0);
}

TEST_CASE("parse_noise and names") {
  CHECK(hfl::parse_noise("gaussian") == hfl::NoiseType::gaussian);
  CHECK(hfl::parse_noise("t") == hfl::NoiseType::student_t);
  CHECK(hfl::parse_noise("lognormal") == hfl::NoiseType::lognormal);
  CHECK(hfl::parse_noise("laplace") == hfl::NoiseType::laplace);
  CHECK_THROWS_AS(hfl::parse_noise("cauchy"), std::invalid_argument);
  CHECK(hfl::noise_name(hfl::NoiseType::student_t) == "t");
}

TEST_CASE("gen_problem composition and determinism") {
  hfl::SimulationSpec spec;
  spec.n = 30;
  spec.p = 10;
  spec.noise = hfl::NoiseType::none;
  spec.seed = 11;
  auto [pr, gt] = hfl::gen_problem(spec);
  CHECK((pr.y - pr.X * gt.beta_star).norm() == 0.0);

  spec.noise = hfl::NoiseType::laplace;
  auto a = hfl::gen_problem(spec);
  auto b = hfl::gen_problem(spec);
  CHECK((a.first.X - b.first.X).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK((a.first.y - b.first.y).lpNorm<Eigen::Infinity>() == 0.0);

  spec.p = 4;
  CHECK_THROWS_AS(hfl::gen_problem(spec), std::invalid_argument);
}

TEST_CASE("moderate simulated instance fits to the expected error scale") {
  hfl::SimulationSpec spec;
  spec.n = 200;
  spec.p = 500;
  spec.noise = hfl::NoiseType::gaussian;
  spec.seed = 99;
  auto [pr, gt] = hfl::gen_problem(spec);
  hfl::HuberFusedConfig cfg;  // tau 0.5, lambda 0.01 defaults
  hfl::SolverOptions opts;
  opts.tol = 1e-3;
  opts.max_iter = 1000;
  auto fit = hfl::solve(pr, cfg, opts);
  const double err = hfl::mae(pr, fit.beta_hat);
  CHECK(err < 1.0);
  CHECK(err > 1e-4);
}
