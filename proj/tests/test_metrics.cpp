#include "hfl/metrics.hpp"

#include "hfl/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using hfl::Index;
using hfl::Mat;
using hfl::RegressionProblem;
using hfl::Vec;

TEST_CASE("rlne") {
  Vec star(2);
  star << 1.0, 0.0;
  CHECK(hfl::rlne(star, star) == 0.0);
  CHECK(hfl::rlne(Vec::Zero(2), star) == 1.0);
  Vec hat(2);
  hat << 0.0, 1.0;
  CHECK(hfl::rlne(hat, star) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(hfl::rlne(hat, Vec::Zero(2)), std::invalid_argument);
}

TEST_CASE("mae and mse on fixed residuals") {
  // Identity design turns beta into fitted values directly.
  RegressionProblem pr;
  pr.X = Mat::Identity(3, 3);
  pr.y = Vec::Zero(3);

  Vec fit0(3);
  fit0 << 0.0, 0.0, 0.0;
  CHECK(hfl::mae(pr, fit0) == 0.0);
  CHECK(hfl::mse(pr, fit0) == 0.0);

  pr.y << 1.0, -1.0, 0.0;
  Vec hat = Vec::Zero(3);
  CHECK(hfl::mae(pr, hat) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  RegressionProblem pr2;
  pr2.X = Mat::Identity(2, 2);
  pr2.y.resize(2);
  pr2.y << 1.0, -1.0;
  CHECK(hfl::mae(pr2, Vec::Zero(2)) == 1.0);
  CHECK(hfl::mse(pr2, Vec::Zero(2)) == 1.0);

  RegressionProblem pr3;
  pr3.X = Mat::Identity(3, 3);
  pr3.y.resize(3);
  pr3.y << 3.0, 0.0, 0.0;
  CHECK(hfl::mae(pr3, Vec::Zero(3)) == 1.0);
  CHECK(hfl::mse(pr3, Vec::Zero(3)) == 3.0);
}

TEST_CASE("power-mean inequality mae^2 <= mse") {
  hfl::Rng rng(15);
  for (int rep = 0; rep < 50; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.uniform() * 30);
    RegressionProblem pr;
    pr.X = Mat::Identity(n, n);
    pr.y.resize(n);
    for (Index i = 0; i < n; ++i) pr.y[i] = 3.0 * rng.normal();
    Vec hat = Vec::Zero(n);
    const double a = hfl::mae(pr, hat);
    const double s = hfl::mse(pr, hat);
    CHECK(a * a <= s + 1e-12);
  }
}

TEST_CASE("metrics are permutation invariant") {
  hfl::Rng rng(16);
  const Index n = 12, p = 4;
  RegressionProblem pr;
  pr.X = Mat(n, p);
  pr.y = Vec(n);
  Vec beta(p);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < p; ++j) pr.X(i, j) = rng.normal();
  for (Index i = 0; i < n; ++i) pr.y[i] = rng.normal();
  for (Index j = 0; j < p; ++j) beta[j] = rng.normal();

  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), std::mt19937(3));
  RegressionProblem shuffled;
  shuffled.X = Mat(n, p);
  shuffled.y = Vec(n);
  for (Index i = 0; i < n; ++i) {
    shuffled.X.row(i) = pr.X.row(perm[static_cast<std::size_t>(i)]);
    shuffled.y[i] = pr.y[perm[static_cast<std::size_t>(i)]];
  }
  CHECK(hfl::mae(pr, beta) == doctest::Approx(hfl::mae(shuffled, beta)).epsilon(1e-14));
  CHECK(hfl::mse(pr, beta) == doctest::Approx(hfl::mse(shuffled, beta)).epsilon(1e-14));
}

TEST_CASE("classification metrics") {
  Vec truth(4), scores(4);

  truth << 1.0, 1.0, 0.0, 0.0;
  scores << 2.0, 1.5, -1.0, 0.2;
  auto perfect = hfl::classification_metrics(truth, scores, 0.5);
  CHECK(perfect.accuracy == 1.0);
  REQUIRE(perfect.recall.has_value());
  CHECK(*perfect.recall == 1.0);

  scores << 0.1, 0.2, 0.3, 0.4;  // everything predicted negative
  auto none = hfl::classification_metrics(truth, scores, 0.5);
  CHECK(none.accuracy == 0.5);
  REQUIRE(none.recall.has_value());
  CHECK(*none.recall == 0.0);

  scores << 0.9, 0.1, 0.1, 0.1;  // preds = (1,0,0,0)
  auto mixed = hfl::classification_metrics(truth, scores, 0.5);
  CHECK(mixed.accuracy == 0.75);
  REQUIRE(mixed.recall.has_value());
  CHECK(*mixed.recall == 0.5);

  Vec no_pos(3), s3(3);
  no_pos << 0.0, 0.0, 0.0;
  s3 << 0.0, 0.9, 0.0;
  auto undef = hfl::classification_metrics(no_pos, s3, 0.5);
  CHECK_FALSE(undef.recall.has_value());
  CHECK(undef.accuracy == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  Vec bad(2), s2(2);
  bad << 0.0, 2.0;
  s2 << 0.0, 0.0;
  CHECK_THROWS_AS(hfl::classification_metrics(bad, s2, 0.5), std::invalid_argument);
}

TEST_CASE("MetricsReport serialization") {
  hfl::MetricsReport report;
  report.rlne = 0.25;
  report.mae = 0.5;
  report.mse = 0.3;
  report.iterations = 42;
  report.wall_time = 1.25;
  report.rel_err_final = 1e-4;
  CHECK(hfl::MetricsReport::csv_header() == "rlne,mae,mse,iterations,wall_time,rel_err_final");
  CHECK(report.csv_row() == "0.25,0.5,0.3,42,1.250000,0.0001");
}
