#pragma once

#include <cstdint>
#include <random>

namespace hfl {

/// splitmix64 step, used to derive independent sub-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seedable generator with portable transforms on top of mt19937_64.
/// The raw engine output is fixed by the standard and every distribution
/// below is an explicit transform of it, so seeded draws replay exactly
/// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double normal();

  /// Student-t with real df > 0, polar construction (two uniforms, no
  /// rejection): R = sqrt(df * (U1^(-2/df) - 1)), t = R * cos(2*pi*U2).
  double student_t(double df);

  /// Laplace(loc, scale) by inverse CDF.
  double laplace(double loc, double scale);

  /// exp(mu + sigma * Z).
  double lognormal(double mu, double sigma);

 private:
  std::mt19937_64 gen_;
};

}  // namespace hfl
