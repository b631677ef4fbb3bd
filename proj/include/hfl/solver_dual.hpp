#pragma once

#include "hfl/types.hpp"

namespace hfl {

/// eta = n + sigma * (inflated upper estimate of ||X||_2^2) + margin, so that
/// S = (eta - n) I - sigma X X^T is positive semi-definite.
double estimate_eta(const Mat& X, double sigma, Index n, double margin,
                    double spectral_tol = 1e-6);

/// Single u-update: projection of eta^{-1}(y - X w + sigma X v + S u) onto the
/// ball ||u||_inf <= tau/n, with S applied matrix-free.
Vec dual_u_step(const SolverState& state, const RegressionProblem& problem,
                const HuberFusedConfig& cfg, const SolverOptions& opts, double eta);

/// Single v-update via Moreau's identity; state.u must already hold u^{k+1}.
Vec dual_v_step(const SolverState& state, const RegressionProblem& problem,
                const HuberFusedConfig& cfg, const SolverOptions& opts);

/// Multiplier update w - sigma * rho * (v - X^T u); state holds u^{k+1}, v^{k+1}.
Vec dual_w_step(const SolverState& state, double sigma, double rho,
                const RegressionProblem& problem);

/// Semi-proximal ADMM on the dual problem from the zero start.  The returned
/// coefficient estimate is the final multiplier w.
FitResult solve(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                const SolverOptions& opts, SolveTrace* trace = nullptr);

/// H_tau(y - X beta) + lambda1 ||beta||_1 + lambda2 ||D beta||_1.
double primal_objective(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                        const Vec& beta);

/// <u, y> - (n/2)||u||^2 for feasible u (||u||_inf <= tau/n); throws on
/// infeasible input.
double dual_objective(const RegressionProblem& problem, const HuberFusedConfig& cfg,
                      const Vec& u);

}  // namespace hfl
