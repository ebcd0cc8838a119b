#ifndef KZDYN_SAMPLING_HPP
#define KZDYN_SAMPLING_HPP

#include <functional>
#include <random>

#include "kzdyn/root_system.hpp"

namespace kzdyn {

/// Deterministic source of small exact rationals for sample points.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Rational with numerator in [-50, 50] and denominator in [1, 8].
  Rational small_rational();
  /// Nonzero variant of the same.
  Rational nonzero_rational();
  /// Positive rational in (0, 10] with denominator in [1, 8].
  Rational positive_rational();

  /// lambda = sum_i c_i omega_i with random rational coefficients.
  Vec weight(const RootSystem& rs);
  /// Pairwise distinct positive base points t_1..t_n (z_k = t_k^N later).
  std::vector<Rational> base_points(std::size_t n);
  /// Nonzero kappa.
  Rational kappa();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `attempt` with freshly sampled inputs, retrying (up to 10 times)
/// when it throws PoleError or ResonantLambdaError at a non-generic sample;
/// rethrows after the retry budget is exhausted.
bool with_resampling(Sampler& sampler, const std::function<bool(Sampler&)>& attempt);

}  // namespace kzdyn

#endif
