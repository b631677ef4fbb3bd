#pragma once

#include "hfl/types.hpp"

namespace hfl {

struct BaselineOptions {
  double sigma = 1.0;    // penalty on the residual and difference splits
  double sigma1 = 1.0;   // penalty on the identity split (keeps the system PD)
  double tol = 1e-6;
  int max_iter = 5000;
  bool accelerate = true;  // proximal-gradient solver only
  double spectral_tol = 1e-6;

  void validate() const {
    if (!(sigma > 0.0) || !(sigma1 > 0.0))
      throw std::invalid_argument("BaselineOptions: sigma, sigma1 must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("BaselineOptions: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("BaselineOptions: max_iter must be >= 1");
    if (!(spectral_tol > 0.0))
      throw std::invalid_argument("BaselineOptions: spectral_tol must be positive");
  }
};

/// Componentwise minimizer of (t/n) h_tau(b) + (1/2)(b - x)^2.
Vec huber_prox(const Vec& x, double tau, Index n, double t);
double huber_prox_scalar(double x, double tau, Index n, double t);

/// Primal ADMM on the split form (residual, difference, identity copies),
/// with an exact coefficient step through a cached factorization of
/// sigma X^T X + sigma D^T D + sigma1 I.
FitResult primal_admm_solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                            const BaselineOptions& opts);

/// Proximal-gradient (optionally FISTA-accelerated with restart) on the
/// primal objective; run with a tight tolerance it serves as the reference
/// optimizer on small instances.
FitResult prox_gradient_solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                              const BaselineOptions& opts);

/// Gradient of the empirical Huber loss term beta -> H_tau(y - X beta).
Vec huber_loss_gradient(const RegressionProblem& problem, double tau, const Vec& beta);

}  // namespace hfl
