#include "kzdyn/verma.hpp"

#include <cstdlib>
#include <vector>

#include "kzdyn/errors.hpp"
#include "kzdyn/operators.hpp"
#include "kzdyn/weight_module.hpp"

namespace kzdyn {

namespace {

/// Identify sl_2 weights with their pairing against alpha_1^vee. The weight
/// set of L_m is then {-m, -m+2, ..., m}.
bool in_weight_set(long long value, int m) {
  return std::llabs(value) <= m && (value - m) % 2 == 0;
}

/// Condition II: w.lambda - w'.(lambda-nu) must avoid P(L_m) for w != w'.
/// With scalars, 1.l = l and s_1.l = -l-2.
void check_genericity(int m, long long l) {
  for (int k = 0; k <= m; ++k) {
    const long long lp = l - (m - 2 * k);  // (lambda - nu, alpha_1^vee)
    const long long cross[2] = {l - (-lp - 2), -l - 2 - lp};
    for (long long value : cross)
      if (in_weight_set(value, m))
        throw NonGenericWeightError("verma oracle: w.lambda - w'.(lambda-nu) = " +
                                    std::to_string(value) + " lies in P(L_" +
                                    std::to_string(m) + ")");
  }
}

}  // namespace

RationalMatrix verma_intertwiner_a(int m, long long l, std::size_t depth) {
  if (m < 0 || l < 1) throw Error("verma oracle: need m >= 0 and l >= 1");
  if (depth < static_cast<std::size_t>(l + m + 1))
    throw TruncationTooShallowError("verma oracle: depth " + std::to_string(depth) +
                                    " < l + m + 1 = " + std::to_string(l + m + 1));
  check_genericity(m, l);

  const std::size_t dim = static_cast<std::size_t>(m) + 1;
  RationalMatrix A(dim, dim);
  for (int k = 0; k <= m; ++k) {
    const long long lp = l - (m - 2 * k);  // highest weight of the target Verma

    // Phi(v_lambda) = sum_s c_s F^s v_{lambda-nu} (x) v^m_{k-s}, c_0 = 1,
    // fixed by E Phi(v_lambda) = 0 with E F^s v = s(l'-s+1) F^{s-1} v.
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[0] = 1;
    for (int s = 0; s < k; ++s) {
      const Rational denom = Rational(s + 1) * Rational(lp - s);
      if (denom == 0)
        throw NonGenericWeightError("verma oracle: intertwiner for k = " + std::to_string(k) +
                                    " does not exist at l = " + std::to_string(l));
      c[static_cast<std::size_t>(s) + 1] = -c[static_cast<std::size_t>(s)] *
                                           Rational(m - k + s + 1) / denom;
    }

    // phi[t][j] = coefficient of F^t v_{lambda-nu} (x) v^m_j in the image.
    std::vector<std::vector<Rational>> phi(depth + 1, std::vector<Rational>(dim, Rational(0)));
    for (int s = 0; s <= k; ++s) phi[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - s)] = c[static_cast<std::size_t>(s)];

    // Apply Delta(F) = F(x)1 + 1(x)F a total of l+1 times, then divide by
    // (l+1)! to land on the singular vector F^{l+1} v_lambda / (l+1)!.
    for (long long step = 0; step < l + 1; ++step) {
      std::vector<std::vector<Rational>> next(depth + 1, std::vector<Rational>(dim, Rational(0)));
      for (std::size_t t = 0; t <= depth; ++t)
        for (std::size_t j = 0; j < dim; ++j) {
          const Rational& v = phi[t][j];
          if (v == 0) continue;
          if (t + 1 > depth)
            throw TruncationTooShallowError("verma oracle: image escaped the truncation");
          next[t + 1][j] += v;
          if (j + 1 < dim) next[t][j + 1] += Rational(static_cast<long long>(j) + 1) * v;
        }
      phi = std::move(next);
    }

    // Coefficient at the singular vector F^{l'+1} v_{lambda-nu} / (l'+1)!.
    const std::size_t t_star = static_cast<std::size_t>(lp + 1);
    const Rational scale(factorial(static_cast<int>(lp) + 1), factorial(static_cast<int>(l) + 1));
    for (std::size_t i = 0; i < dim; ++i) A.at(i, static_cast<std::size_t>(k)) = scale * phi[t_star][i];
  }
  return A;
}

bool sl2_verma_oracle_matches(int m, long long l) {
  const WeightModule Lm = WeightModule::sl2_module(m);
  const RationalMatrix E = Lm.e(1, 2);
  const RationalMatrix F = Lm.e(2, 1);
  const RationalMatrix H = Lm.cartan({Rational(1), Rational(-1)});
  const RationalMatrix x = exp_nilpotent(-E) * exp_nilpotent(F) * exp_nilpotent(-E);
  const RationalMatrix closed = x * p_series(Rational(l), H, E, F);
  const RationalMatrix oracle = verma_intertwiner_a(m, l, static_cast<std::size_t>(l + m + 1));
  return oracle == closed;
}

}  // namespace kzdyn
