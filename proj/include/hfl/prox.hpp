#pragma once

#include "hfl/types.hpp"

namespace hfl {

/// First-difference operator D in R^{(p-1) x p}, applied matrix-free in O(p).
struct DifferenceOperator {
  Index p;

  /// (D b)_j = b_{j+1} - b_j, j = 0..p-2.
  Vec apply(const Vec& beta) const;

  /// D^T s for s of length p-1.
  Vec apply_transpose(const Vec& s) const;
};

/// Scalar Huber loss: x^2/2 on |x| <= tau, tau|x| - tau^2/2 beyond.
double huber_value(double x, double tau);

/// Empirical Huber loss (1/n) sum_i h_tau(z_i).
double empirical_huber(const Vec& z, double tau);

/// Conjugate of the empirical Huber loss: (n/2)||u||^2 on the ball
/// ||u||_inf <= tau/n, +infinity outside.
double huber_conjugate(const Vec& u, double tau);

/// Componentwise sign(x) * max(|x| - mu, 0).
Vec soft_threshold(const Vec& x, double mu);

/// Componentwise clamp to [-radius, radius].
Vec project_inf_ball(const Vec& x, double radius);

/// Exact minimizer of (1/2)||b - y||^2 + lam * sum_j |b_{j+1} - b_j|,
/// computed by the direct dynamic-programming scan in O(p) typical time.
Vec tv1d_prox(const Vec& y, double lam);

/// Prox of t * (lambda1 ||.||_1 + lambda2 ||D .||_1): the total-variation
/// prox followed by soft thresholding.
Vec fused_prox(const Vec& x, const HuberFusedConfig& cfg, double t);

/// Prox of mu * g* via Moreau's identity; lands in the fused-lasso dual
/// polytope dom g*.
Vec fused_conjugate_prox(const Vec& x, const HuberFusedConfig& cfg, double mu);

/// lambda1 ||beta||_1 + lambda2 ||D beta||_1.
double fused_penalty_value(const Vec& beta, const HuberFusedConfig& cfg);

}  // namespace hfl
