#include "hfl/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hfl {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  // 53-bit mantissa shifted into (0,1); never returns an endpoint.
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::student_t(double df) {
  if (!(df > 0.0)) throw std::invalid_argument("Rng::student_t: df must be positive");
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(df * (std::pow(u1, -2.0 / df) - 1.0));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::laplace(double loc, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("Rng::laplace: scale must be positive");
  const double u = uniform() - 0.5;
  return loc - scale * (u < 0.0 ? -1.0 : 1.0) * std::log1p(-2.0 * std::abs(u));
}

double Rng::lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

}  // namespace hfl
