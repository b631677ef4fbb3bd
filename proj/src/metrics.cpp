#include "hfl/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace hfl {

double rlne(const Vec& beta_hat, const Vec& beta_star) {
  if (beta_hat.size() != beta_star.size())
    throw std::invalid_argument("rlne: size mismatch");
  const double denom = beta_star.norm();
  if (denom == 0.0) throw std::invalid_argument("rlne: beta_star must be nonzero");
  return (beta_hat - beta_star).norm() / denom;
}

double mae(const RegressionProblem& problem, const Vec& beta_hat) {
  return (problem.y - problem.X * beta_hat).lpNorm<1>() / static_cast<double>(problem.n());
}

double mse(const RegressionProblem& problem, const Vec& beta_hat) {
  return (problem.y - problem.X * beta_hat).squaredNorm() / static_cast<double>(problem.n());
}

ClassificationMetrics classification_metrics(const Vec& y_true, const Vec& scores,
                                             double threshold) {
  if (y_true.size() != scores.size())
    throw std::invalid_argument("classification_metrics: size mismatch");
  if (y_true.size() == 0) throw std::invalid_argument("classification_metrics: empty input");

  Index correct = 0, true_pos = 0, actual_pos = 0;
  for (Index i = 0; i < y_true.size(); ++i) {
    if (y_true[i] != 0.0 && y_true[i] != 1.0)
      throw std::invalid_argument("classification_metrics: labels must be coded 0/1");
    const bool pred = scores[i] >= threshold;
    const bool truth = y_true[i] == 1.0;
    if (pred == truth) ++correct;
    if (truth) {
      ++actual_pos;
      if (pred) ++true_pos;
    }
  }

  ClassificationMetrics out;
  out.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());
  if (actual_pos > 0)
    out.recall = static_cast<double>(true_pos) / static_cast<double>(actual_pos);
  return out;
}

std::string MetricsReport::csv_header() {
  return "rlne,mae,mse,iterations,wall_time,rel_err_final";
}

std::string MetricsReport::csv_row() const {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%d,%.6f,%.10g", rlne, mae, mse,
                iterations, wall_time, rel_err_final);
  return buf;
}

}  // namespace hfl
