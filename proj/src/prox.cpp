#include "hfl/prox.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hfl {

Vec DifferenceOperator::apply(const Vec& beta) const {
  if (beta.size() != p) throw std::invalid_argument("DifferenceOperator: size mismatch");
  if (p <= 1) return Vec(0);
  return beta.tail(p - 1) - beta.head(p - 1);
}

Vec DifferenceOperator::apply_transpose(const Vec& s) const {
  if (s.size() != p - 1) throw std::invalid_argument("DifferenceOperator: size mismatch");
  Vec out = Vec::Zero(p);
  if (p <= 1) return out;
  out.head(p - 1) -= s;
  out.tail(p - 1) += s;
  return out;
}

double huber_value(double x, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("huber_value: tau must be positive");
  const double a = std::abs(x);
  if (a <= tau) return 0.5 * x * x;
  return tau * a - 0.5 * tau * tau;
}

double empirical_huber(const Vec& z, double tau) {
  if (z.size() < 1) throw std::invalid_argument("empirical_huber: empty vector");
  double acc = 0.0;
  for (Index i = 0; i < z.size(); ++i) acc += huber_value(z[i], tau);
  return acc / static_cast<double>(z.size());
}

double huber_conjugate(const Vec& u, double tau) {
  if (u.size() < 1) throw std::invalid_argument("huber_conjugate: empty vector");
  if (!(tau > 0.0)) throw std::invalid_argument("huber_conjugate: tau must be positive");
  const double n = static_cast<double>(u.size());
  const double radius = tau / n;
  if (u.lpNorm<Eigen::Infinity>() > radius) return std::numeric_limits<double>::infinity();
  return 0.5 * n * u.squaredNorm();
}

Vec soft_threshold(const Vec& x, double mu) {
  if (mu < 0.0) throw std::invalid_argument("soft_threshold: mu must be nonnegative");
  if (mu == 0.0) return x;
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]) - mu;
    out[i] = a > 0.0 ? (x[i] > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

Vec project_inf_ball(const Vec& x, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("project_inf_ball: radius must be positive");
  return x.cwiseMax(-radius).cwiseMin(radius);
}

// Direct 1-D total-variation denoiser.  Maintains the derivative of the
// optimal-cost-to-go as a piecewise-linear function over a window of knots;
// each new sample either extends the window or clips it at the +/-lam
// bounds, recording the clip values as back-pointers tm/tp.  A final
// backward pass reads the solution off the back-pointers.
Vec tv1d_prox(const Vec& y, double lam) {
  if (lam < 0.0) throw std::invalid_argument("tv1d_prox: lam must be nonnegative");
  const Index n = y.size();
  if (n <= 1 || lam == 0.0) return y;

  Vec theta(n);
  std::vector<double> knot(2 * n), slope(2 * n), icpt(2 * n);
  std::vector<double> tm(n - 1), tp(n - 1);

  // First sample: derivative is (b - y0) restricted to [tm, tp].
  tm[0] = y[0] - lam;
  tp[0] = y[0] + lam;
  Index l = n - 1;
  Index r = n;
  knot[l] = tm[0];
  knot[r] = tp[0];
  slope[l] = 1.0;
  icpt[l] = -y[0] + lam;
  slope[r] = -1.0;
  icpt[r] = y[0] + lam;
  double slope_lo0 = 1.0, icpt_lo0 = -y[1] - lam;
  double slope_hi0 = -1.0, icpt_hi0 = y[1] - lam;

  for (Index k = 1; k < n - 1; ++k) {
    // Walk up from the left until the derivative exceeds -lam.
    double slope_lo = slope_lo0, icpt_lo = icpt_lo0;
    Index lo = l;
    for (; lo <= r; ++lo) {
      if (slope_lo * knot[lo] + icpt_lo > -lam) break;
      slope_lo += slope[lo];
      icpt_lo += icpt[lo];
    }

    // Walk down from the right until the derivative drops below lam.
    double slope_hi = slope_hi0, icpt_hi = icpt_hi0;
    Index hi = r;
    for (; hi >= lo; --hi) {
      if (-slope_hi * knot[hi] - icpt_hi < lam) break;
      slope_hi += slope[hi];
      icpt_hi += icpt[hi];
    }

    tm[k] = (-lam - icpt_lo) / slope_lo;
    l = lo - 1;
    knot[l] = tm[k];

    tp[k] = (lam + icpt_hi) / (-slope_hi);
    r = hi + 1;
    knot[r] = tp[k];

    slope[l] = slope_lo;
    icpt[l] = icpt_lo + lam;
    slope[r] = slope_hi;
    icpt[r] = icpt_hi + lam;
    slope_lo0 = 1.0;
    icpt_lo0 = -y[k + 1] - lam;
    slope_hi0 = -1.0;
    icpt_hi0 = y[k + 1] - lam;
  }

  // Last coefficient: zero of the accumulated derivative.
  double slope_lo = slope_lo0, icpt_lo = icpt_lo0;
  Index lo = l;
  for (; lo <= r; ++lo) {
    if (slope_lo * knot[lo] + icpt_lo > 0.0) break;
    slope_lo += slope[lo];
    icpt_lo += icpt[lo];
  }
  theta[n - 1] = -icpt_lo / slope_lo;

  for (Index k = n - 2; k >= 0; --k) {
    if (theta[k + 1] > tp[k]) {
      theta[k] = tp[k];
    } else if (theta[k + 1] < tm[k]) {
      theta[k] = tm[k];
    } else {
      theta[k] = theta[k + 1];
    }
  }
  return theta;
}

Vec fused_prox(const Vec& x, const HuberFusedConfig& cfg, double t) {
  cfg.validate();
  if (!(t > 0.0)) throw std::invalid_argument("fused_prox: t must be positive");
  return soft_threshold(tv1d_prox(x, t * cfg.lambda2), t * cfg.lambda1);
}

Vec fused_conjugate_prox(const Vec& x, const HuberFusedConfig& cfg, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("fused_conjugate_prox: mu must be positive");
  return x - mu * fused_prox(x / mu, cfg, 1.0 / mu);
}

double fused_penalty_value(const Vec& beta, const HuberFusedConfig& cfg) {
  double tv = 0.0;
  for (Index j = 1; j < beta.size(); ++j) tv += std::abs(beta[j] - beta[j - 1]);
  return cfg.lambda1 * beta.lpNorm<1>() + cfg.lambda2 * tv;
}

}  // namespace hfl
