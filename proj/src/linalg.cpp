#include "hfl/linalg.hpp"

#include <cmath>
#include <random>

namespace hfl {

double spectral_norm_sq_bound(const Mat& X, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_norm_sq_bound: tol must be positive");
  const Index n = X.rows();
  const Index p = X.cols();
  if (n == 0 || p == 0) return 0.0;
  if (X.lpNorm<Eigen::Infinity>() == 0.0) return 0.0;

  // Iterate in the smaller dimension; both products stay matrix-free in X.
  const bool use_rows = n <= p;
  const Index m = use_rows ? n : p;

  std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vec v(m);
  for (Index i = 0; i < m; ++i) v[i] = unif(gen);
  v.normalize();

  double lambda = 0.0;
  Vec av(m);
  for (int it = 0; it < max_iter; ++it) {
    if (use_rows) {
      av.noalias() = X * (X.transpose() * v);
    } else {
      av.noalias() = X.transpose() * (X * v);
    }
    const double norm = av.norm();
    if (norm == 0.0) break;  // v fell in the null space; estimate stays 0
    const double lambda_new = v.dot(av);
    v = av / norm;
    if (std::abs(lambda_new - lambda) <= tol * std::max(1.0, std::abs(lambda_new))) {
      lambda = lambda_new;
      break;
    }
    lambda = lambda_new;
  }
  return 1.05 * lambda;
}

}  // namespace hfl
