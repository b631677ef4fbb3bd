#pragma once

#include "hfl/types.hpp"

namespace hfl {

/// Upper estimate of ||X||_2^2 (largest eigenvalue of X^T X) by power
/// iteration on the smaller Gram matrix, inflated by 5% so downstream
/// bounds stay on the safe side.  Returns 0 for the zero matrix.
/// Deterministic: the start vector comes from a fixed-seed generator.
double spectral_norm_sq_bound(const Mat& X, double tol, int max_iter = 500);

}  // namespace hfl
