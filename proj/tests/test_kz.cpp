#include <doctest.h>

#include "kzdyn/errors.hpp"
#include "kzdyn/kz.hpp"

namespace {

using namespace kzdyn;

WeightModule three_vectors(int N) {
  const WeightModule V = WeightModule::vector_rep(N);
  return WeightModule::tensor({V, V, V});
}

TEST_CASE("kz matrix sums r-matrices and the cartan term") {
  const WeightModule T = three_vectors(2);
  const std::vector<Rational> z = {Rational(1, 2), Rational(3), Rational(7, 5)};
  const Vec lambda = {Rational(5, 4), Rational(-5, 4)};
  const RationalMatrix m = kz_matrix(T, 1, z, lambda);
  const RationalMatrix expected = r_matrix(T, 1, 0, z[1] / z[0]) +
                                  r_matrix(T, 1, 2, z[1] / z[2]) + lambda_in_factor(T, 1, lambda);
  CHECK(m == expected);
  CHECK_THROWS_AS((void)kz_matrix(T, 0, {Rational(2), Rational(2), Rational(1)}, lambda),
                  CoincidingPointsError);
}

TEST_CASE("closed-form derivative matches a quotient-rule oracle per entry") {
  // Each cross term of M_j is (P z_j + Q z_k)/(z_j - z_k) entrywise with
  // P, Q the casimir halves; differentiate that expression directly.
  const WeightModule T = three_vectors(3);
  const std::vector<Rational> z = {Rational(2, 3), Rational(5), Rational(9, 4)};
  const std::size_t j = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    const RationalMatrix claimed = kz_derivative(T, j, i, z);
    RationalMatrix expected(T.dim(), T.dim());
    if (i != j) {
      const RationalMatrix P = omega_plus(T, j, i);
      const RationalMatrix Q = omega_minus(T, j, i);
      const Rational den = (z[j] - z[i]) * (z[j] - z[i]);
      // z_i d/dz_i [(P z_j + Q z_i)/(z_j - z_i)]
      //   = z_i [Q (z_j - z_i) + (P z_j + Q z_i)] / (z_j - z_i)^2.
      expected = (Q * (z[j] - z[i]) + P * z[j] + Q * z[i]) * (z[i] / den);
    } else {
      for (std::size_t k = 0; k < 3; ++k) {
        if (k == j) continue;
        const RationalMatrix P = omega_plus(T, j, k);
        const RationalMatrix Q = omega_minus(T, j, k);
        const Rational den = (z[j] - z[k]) * (z[j] - z[k]);
        // z_j d/dz_j of the same expression.
        expected = expected + (P * (z[j] - z[k]) - (P * z[j] + Q * z[k])) * (z[j] / den);
      }
    }
    CHECK(claimed == expected);
  }
}

TEST_CASE("the connection is flat on a three-point tensor module") {
  const WeightModule T = three_vectors(3);
  const std::vector<Rational> z = {Rational(1), Rational(4, 3), Rational(11, 2)};
  const Vec lambda = {Rational(7, 6), Rational(1, 3), Rational(-3, 2)};
  const Rational kappa(5, 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k) CHECK(kz_flat(T, i, k, z, lambda, kappa));
}

TEST_CASE("kz coefficient matrices commute pairwise") {
  const WeightModule T = three_vectors(2);
  const std::vector<Rational> z = {Rational(1, 5), Rational(2), Rational(13, 3)};
  const Vec lambda = {Rational(8, 3), Rational(-8, 3)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k)
      CHECK(commutator(kz_matrix(T, i, z, lambda), kz_matrix(T, k, z, lambda)).is_zero());
}

}  // namespace
