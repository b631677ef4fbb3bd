#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hfl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Upper end of the admissible ADMM step-length range, (1 + sqrt(5)) / 2.
inline double max_step_length() { return (1.0 + std::sqrt(5.0)) / 2.0; }

/// Model hyperparameters: Huber threshold and the two fused-lasso weights.
struct HuberFusedConfig {
  double tau = 0.5;
  double lambda1 = 0.01;
  double lambda2 = 0.01;

  void validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("HuberFusedConfig: tau must be positive");
    if (lambda1 < 0.0 || lambda2 < 0.0)
      throw std::invalid_argument("HuberFusedConfig: lambda1 and lambda2 must be nonnegative");
  }
};

/// Dense regression data: n x p design and length-n response.
struct RegressionProblem {
  Mat X;
  Vec y;

  Index n() const { return X.rows(); }
  Index p() const { return X.cols(); }

  void validate() const {
    if (X.rows() < 1 || X.cols() < 1)
      throw std::invalid_argument("RegressionProblem: X must be at least 1x1");
    if (y.size() != X.rows())
      throw std::invalid_argument("RegressionProblem: y length must equal row count of X");
    if (!X.allFinite() || !y.allFinite())
      throw std::invalid_argument("RegressionProblem: non-finite entries");
  }
};

/// Algorithm parameters for the dual semi-proximal ADMM.
struct SolverOptions {
  double sigma = 1.0;        // augmented-Lagrangian parameter
  double rho = 1.618;        // step length in (0, (1+sqrt(5))/2)
  double eta_margin = 0.0;   // extra additive safety on eta
  double tol = 1e-6;         // RelErr threshold on the beta (= w) sequence
  int max_iter = 5000;
  double spectral_tol = 1e-6;  // power-iteration stopping tolerance
  bool adaptive_sigma = false; // opt-in residual balancing (experimental)

  void validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("SolverOptions: sigma must be positive");
    if (!(rho > 0.0) || !(rho < max_step_length()))
      throw std::invalid_argument("SolverOptions: rho must lie in (0, (1+sqrt(5))/2)");
    if (eta_margin < 0.0) throw std::invalid_argument("SolverOptions: eta_margin must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("SolverOptions: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("SolverOptions: max_iter must be >= 1");
    if (!(spectral_tol > 0.0)) throw std::invalid_argument("SolverOptions: spectral_tol must be positive");
  }
};

/// One snapshot of the dual iterates (u, v, w).  w doubles as the running
/// primal coefficient estimate.
struct SolverState {
  Vec u;  // length n, dual variable
  Vec v;  // length p, split variable v = X^T u
  Vec w;  // length p, multiplier; converges to primal beta
  int iter = 0;
  double rel_err = std::numeric_limits<double>::infinity();
};

/// Result of a solve, shared by all three solvers.
struct FitResult {
  Vec beta_hat;
  int iterations = 0;
  bool converged = false;
  std::vector<double> rel_err_history;
  std::vector<double> objective_history;  // filled by the proximal-gradient
                                          // solver when acceleration is off
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double wall_time = 0.0;  // seconds around the solver loop
};

/// Optional per-iteration trace for diagnostics and tests.
struct SolveTrace {
  std::vector<double> feasibility;      // ||v^k - X^T u^k||_2
  std::vector<double> dual_objective;   // <u,y> - (n/2)||u||^2 along iterates
};

}  // namespace hfl
