#pragma once

#include "hfl/types.hpp"

#include <optional>
#include <string>

namespace hfl {

/// ||beta_hat - beta_star||_2 / ||beta_star||_2; throws on zero beta_star.
double rlne(const Vec& beta_hat, const Vec& beta_star);

/// Mean absolute prediction error (1/n) sum |y_i - x_i^T beta|.
double mae(const RegressionProblem& problem, const Vec& beta_hat);

/// Mean squared prediction error (1/n) sum (y_i - x_i^T beta)^2.
double mse(const RegressionProblem& problem, const Vec& beta_hat);

struct ClassificationMetrics {
  double accuracy = 0.0;
  std::optional<double> recall;  // empty when there are no positive samples
};

/// Thresholded classification metrics for a 0/1-coded response; label 1 is
/// the positive class.
ClassificationMetrics classification_metrics(const Vec& y_true, const Vec& scores,
                                             double threshold);

/// One benchmark measurement row; serializes in the fixed column order
/// rlne,mae,mse,iterations,wall_time,rel_err_final.
struct MetricsReport {
  double rlne = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  int iterations = 0;
  double wall_time = 0.0;
  double rel_err_final = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace hfl
