#include "hfl/solver_dual.hpp"

#include "hfl/linalg.hpp"
#include "hfl/prox.hpp"

#include <chrono>
#include <cmath>

namespace hfl {

double estimate_eta(const Mat& X, double sigma, Index n, double margin, double spectral_tol) {
  if (!(sigma > 0.0)) throw std::invalid_argument("estimate_eta: sigma must be positive");
  if (margin < 0.0) throw std::invalid_argument("estimate_eta: margin must be nonnegative");
  if (n != X.rows()) throw std::invalid_argument("estimate_eta: n must equal rows of X");
  return static_cast<double>(n) + sigma * spectral_norm_sq_bound(X, spectral_tol) + margin;
}

Vec dual_u_step(const SolverState& state, const RegressionProblem& problem,
                const HuberFusedConfig& cfg, const SolverOptions& opts, double eta) {
  const double n = static_cast<double>(problem.n());
  // S u = (eta - n) u - sigma X (X^T u), never forming X X^T.
  Vec xtu = problem.X.transpose() * state.u;
  Vec combined = state.w - opts.sigma * state.v + opts.sigma * xtu;
  Vec candidate = (problem.y + (eta - n) * state.u - problem.X * combined) / eta;
  return project_inf_ball(candidate, cfg.tau / n);
}

Vec dual_v_step(const SolverState& state, const RegressionProblem& problem,
                const HuberFusedConfig& cfg, const SolverOptions& opts) {
  const double sigma = opts.sigma;
  Vec xtu = problem.X.transpose() * state.u;
  Vec prox_in = sigma * xtu + state.w;
  return xtu + state.w / sigma - fused_prox(prox_in, cfg, sigma) / sigma;
}

Vec dual_w_step(const SolverState& state, double sigma, double rho,
                const RegressionProblem& problem) {
  return state.w - sigma * rho * (state.v - problem.X.transpose() * state.u);
}

FitResult solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                const SolverOptions& opts, SolveTrace* trace) {
  problem.validate();
  cfg.validate();
  opts.validate();

  const Index n = problem.n();
  const Index p = problem.p();
  const double nd = static_cast<double>(n);
  const Mat& X = problem.X;
  const Vec& y = problem.y;

  FitResult result;
  const auto start = std::chrono::steady_clock::now();

  const double spec_bound = spectral_norm_sq_bound(X, opts.spectral_tol);
  double sigma = opts.sigma;
  double eta = nd + sigma * spec_bound + opts.eta_margin;
  const double radius = cfg.tau / nd;

  Vec u = Vec::Zero(n);
  Vec v = Vec::Zero(p);
  Vec w = Vec::Zero(p);
  Vec xtu = Vec::Zero(p);  // X^T u, kept in sync with u
  Vec combined(p), w_prev(p), prox_in(p), v_prev(p);

  int iter = 0;
  bool converged = false;
  result.rel_err_history.reserve(static_cast<std::size_t>(opts.max_iter));

  while (iter < opts.max_iter) {
    ++iter;

    // Step 1: u <- Pi_{||.||_inf <= tau/n}(eta^{-1}(y - X w + sigma X v + S u)).
    combined.noalias() = w - sigma * v + sigma * xtu;
    u = ((eta - nd) * u - (X * combined - y)) / eta;
    u = u.cwiseMax(-radius).cwiseMin(radius);
    xtu.noalias() = X.transpose() * u;

    // Step 2: v <- X^T u + w/sigma - Prox_{sigma p}(sigma X^T u + w)/sigma.
    v_prev.swap(v);
    prox_in.noalias() = sigma * xtu + w;
    v = xtu + (w - fused_prox(prox_in, cfg, sigma)) / sigma;

    // Step 3: multiplier update; w is the running coefficient estimate.
    w_prev = w;
    w.noalias() -= sigma * opts.rho * (v - xtu);

    const double rel_err = (w - w_prev).norm() / (1.0 + w_prev.norm());
    result.rel_err_history.push_back(rel_err);

    if (trace) {
      trace->feasibility.push_back((v - xtu).norm());
      trace->dual_objective.push_back(u.dot(y) - 0.5 * nd * u.squaredNorm());
    }

    if (rel_err < opts.tol) {
      converged = true;
      break;
    }

    // Optional residual balancing (experimental; off by default because the
    // convergence guarantee assumes fixed sigma).
    if (opts.adaptive_sigma && iter % 50 == 0) {
      const double r_primal = (v - xtu).norm();
      const double r_dual = sigma * (X * (v - v_prev)).norm();
      if (r_primal > 10.0 * r_dual) {
        sigma *= 2.0;
        eta = nd + sigma * spec_bound + opts.eta_margin;
      } else if (r_dual > 10.0 * r_primal) {
        sigma *= 0.5;
        eta = nd + sigma * spec_bound + opts.eta_margin;
      }
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  result.wall_time = std::chrono::duration<double>(stop - start).count();
  result.beta_hat = w;
  result.iterations = iter;
  result.converged = converged;
  result.primal_objective = primal_objective(problem, cfg, w);
  result.dual_objective = dual_objective(problem, cfg, u);
  return result;
}

double primal_objective(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                        const Vec& beta) {
  Vec residual = problem.y - problem.X * beta;
  return empirical_huber(residual, cfg.tau) + fused_penalty_value(beta, cfg);
}

double dual_objective(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                      const Vec& u) {
  const double nd = static_cast<double>(problem.n());
  const double radius = cfg.tau / nd;
  if (u.lpNorm<Eigen::Infinity>() > radius * (1.0 + 1e-12) + 1e-300)
    throw std::domain_error("dual_objective: u outside the ball ||u||_inf <= tau/n");
  return u.dot(problem.y) - 0.5 * nd * u.squaredNorm();
}

}  // namespace hfl
