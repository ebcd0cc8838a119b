#include "kzdyn/sampling.hpp"

#include <algorithm>

#include "kzdyn/errors.hpp"

namespace kzdyn {

Rational Sampler::small_rational() {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 8);
  return Rational(num(rng_), den(rng_));
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational q = small_rational();
    if (q != 0) return q;
  }
}

Rational Sampler::positive_rational() {
  std::uniform_int_distribution<int> den(1, 8);
  for (;;) {
    const int d = den(rng_);
    std::uniform_int_distribution<int> num(1, 10 * d);
    Rational q(num(rng_), d);
    if (q > 0 && q <= 10) return q;
  }
}

Vec Sampler::weight(const RootSystem& rs) {
  Vec lambda(rs.ambient_dim(), Rational(0));
  for (int i = 1; i <= rs.rank(); ++i)
    lambda = lambda + nonzero_rational() * rs.fundamental_weight(i);
  return lambda;
}

std::vector<Rational> Sampler::base_points(std::size_t n) {
  std::vector<Rational> t;
  while (t.size() < n) {
    Rational q = positive_rational();
    if (std::find(t.begin(), t.end(), q) == t.end()) t.push_back(q);
  }
  return t;
}

Rational Sampler::kappa() { return nonzero_rational(); }

bool with_resampling(Sampler& sampler, const std::function<bool(Sampler&)>& attempt) {
  for (int tries = 0; tries < 10; ++tries) {
    try {
      return attempt(sampler);
    } catch (const PoleError&) {
      // non-generic sample: draw again
    } catch (const ResonantLambdaError&) {
      // same
    }
  }
  return attempt(sampler);  // let the final failure propagate
}

}  // namespace kzdyn
