#include "hfl/solver_baseline.hpp"

#include "hfl/linalg.hpp"
#include "hfl/prox.hpp"
#include "hfl/solver_dual.hpp"

#include <Eigen/Cholesky>

#include <chrono>
#include <cmath>

namespace hfl {

double huber_prox_scalar(double x, double tau, Index n, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("huber_prox: t must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("huber_prox: tau must be positive");
  const double nd = static_cast<double>(n);
  const double quad = nd * x / (nd + t);
  if (std::abs(quad) <= tau) return quad;
  return x - (t * tau / nd) * (x > 0.0 ? 1.0 : -1.0);
}

Vec huber_prox(const Vec& x, double tau, Index n, double t) {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = huber_prox_scalar(x[i], tau, n, t);
  return out;
}

Vec huber_loss_gradient(const RegressionProblem& problem, double tau, const Vec& beta) {
  Vec residual = problem.y - problem.X * beta;
  Vec clipped = residual.cwiseMax(-tau).cwiseMin(tau);
  return -(problem.X.transpose() * clipped) / static_cast<double>(problem.n());
}

FitResult primal_admm_solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                            const BaselineOptions& opts) {
  problem.validate();
  cfg.validate();
  opts.validate();

  const Index n = problem.n();
  const Index p = problem.p();
  const Mat& X = problem.X;
  const Vec& y = problem.y;
  const double sigma = opts.sigma;
  const double sigma1 = opts.sigma1;
  const DifferenceOperator D{p};

  FitResult result;
  const auto start = std::chrono::steady_clock::now();

  // Normal matrix sigma X^T X + sigma D^T D + sigma1 I, factored once.
  Mat M = sigma * (X.transpose() * X);
  for (Index j = 0; j < p; ++j) M(j, j) += sigma1;
  for (Index j = 0; j + 1 < p; ++j) {
    M(j, j) += sigma;
    M(j + 1, j + 1) += sigma;
    M(j, j + 1) -= sigma;
    M(j + 1, j) -= sigma;
  }
  Eigen::LLT<Mat> llt(M);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("primal_admm_solve: factorization failed");

  Vec beta = Vec::Zero(p);
  Vec z = Vec::Zero(n);           // residual copy, z = y - X beta
  Vec tvar = Vec::Zero(p - 1 >= 0 ? p - 1 : 0);  // difference copy, t = D beta
  Vec s = Vec::Zero(p);           // identity copy, s = beta
  Vec a = Vec::Zero(n), b = Vec::Zero(tvar.size()), c = Vec::Zero(p);  // scaled multipliers
  Vec rhs(p), beta_prev(p), xbeta(n), dbeta(tvar.size());

  int iter = 0;
  bool converged = false;
  result.rel_err_history.reserve(static_cast<std::size_t>(opts.max_iter));

  while (iter < opts.max_iter) {
    ++iter;

    // Exact beta step.
    rhs.noalias() = sigma * (X.transpose() * (y - z - a));
    rhs.noalias() += sigma * D.apply_transpose(tvar - b);
    rhs.noalias() += sigma1 * (s - c);
    beta_prev = beta;
    beta = llt.solve(rhs);

    xbeta.noalias() = X * beta;
    dbeta = D.apply(beta);

    // Split-variable proxes; all three are independent given beta.
    z = huber_prox(y - xbeta - a, cfg.tau, n, 1.0 / sigma);
    tvar = soft_threshold(dbeta + b, cfg.lambda2 / sigma);
    s = soft_threshold(beta + c, cfg.lambda1 / sigma1);

    a += xbeta + z - y;
    b += dbeta - tvar;
    c += beta - s;

    const double rel_err = (beta - beta_prev).norm() / (1.0 + beta_prev.norm());
    result.rel_err_history.push_back(rel_err);
    if (rel_err < opts.tol) {
      converged = true;
      break;
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  result.wall_time = std::chrono::duration<double>(stop - start).count();
  result.beta_hat = beta;
  result.iterations = iter;
  result.converged = converged;
  result.primal_objective = primal_objective(problem, cfg, beta);
  // Dual point recovered from the residual gradient; feasible by clamping.
  Vec u = (problem.y - X * beta).cwiseMax(-cfg.tau).cwiseMin(cfg.tau) / static_cast<double>(n);
  result.dual_objective = dual_objective(problem, cfg, u);
  return result;
}

FitResult prox_gradient_solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                              const BaselineOptions& opts) {
  problem.validate();
  cfg.validate();
  opts.validate();

  const Index p = problem.p();
  const double nd = static_cast<double>(problem.n());

  FitResult result;
  const auto start = std::chrono::steady_clock::now();

  const double lip = spectral_norm_sq_bound(problem.X, opts.spectral_tol) / nd;
  if (lip == 0.0) {
    // Zero design: the loss term is constant and the penalty is minimized at 0.
    result.beta_hat = Vec::Zero(p);
    result.iterations = 0;
    result.converged = true;
    result.primal_objective = primal_objective(problem, cfg, result.beta_hat);
    result.dual_objective = 0.0;
    const auto stop = std::chrono::steady_clock::now();
    result.wall_time = std::chrono::duration<double>(stop - start).count();
    return result;
  }
  const double step = 1.0 / lip;

  Vec beta = Vec::Zero(p);
  Vec beta_prev = beta;
  Vec extrap = beta;
  double t_momentum = 1.0;

  int iter = 0;
  bool converged = false;

  while (iter < opts.max_iter) {
    ++iter;
    Vec grad = huber_loss_gradient(problem, cfg.tau, extrap);
    Vec beta_next = fused_prox(extrap - step * grad, cfg, step);

    const double rel_err = (beta_next - beta).norm() / (1.0 + beta.norm());

    if (opts.accelerate) {
      // FISTA momentum with gradient-based restart.
      if ((extrap - beta_next).dot(beta_next - beta) > 0.0) {
        t_momentum = 1.0;
        extrap = beta_next;
      } else {
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
        extrap = beta_next + ((t_momentum - 1.0) / t_next) * (beta_next - beta);
        t_momentum = t_next;
      }
    } else {
      extrap = beta_next;
      result.objective_history.push_back(primal_objective(problem, cfg, beta_next));
    }

    beta_prev = beta;
    beta = beta_next;
    result.rel_err_history.push_back(rel_err);
    if (rel_err < opts.tol) {
      converged = true;
      break;
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  result.wall_time = std::chrono::duration<double>(stop - start).count();
  result.beta_hat = beta;
  result.iterations = iter;
  result.converged = converged;
  result.primal_objective = primal_objective(problem, cfg, beta);
  Vec u = (problem.y - problem.X * beta).cwiseMax(-cfg.tau).cwiseMin(cfg.tau) / nd;
  result.dual_objective = dual_objective(problem, cfg, u);
  return result;
}

}  // namespace hfl
