#include <doctest.h>

#include "kzdyn/errors.hpp"
#include "kzdyn/fusion.hpp"

namespace {

using namespace kzdyn;

WeightModule two_vectors(int N) {
  return WeightModule::tensor({WeightModule::vector_rep(N), WeightModule::vector_rep(N)});
}

TEST_CASE("shifted fusion solve matches the one-step hand solution on sl2") {
  const WeightModule T = two_vectors(2);
  const Vec mu = {Rational(7, 3), Rational(-7, 3)};
  const RationalMatrix K = fusion_shifted(T, mu);
  // Basis order: v1v1, v1v2, v2v1, v2v2. The only off-diagonal entry solves
  // c (mu, e1 - e2) = -1 by equating coefficients in the defining relation.
  const Rational c = Rational(-1) / (mu[0] - mu[1]);
  for (std::size_t i = 0; i < 4; ++i) CHECK(K.at(i, i) == 1);
  CHECK(K.at(2, 1) == c);
  CHECK(K.at(1, 2) == 0);
  CHECK(K.at(0, 3) == 0);
  CHECK(K.at(3, 0) == 0);
}

TEST_CASE("shifted fusion solve reports resonance") {
  const WeightModule T = two_vectors(2);
  const Vec mu = {Rational(0), Rational(0)};
  CHECK_THROWS_AS((void)fusion_shifted(T, mu), ResonantLambdaError);
}

TEST_CASE("fusion matrix is unipotent lower triangular") {
  for (int N : {2, 3}) {
    const WeightModule T = two_vectors(N);
    Vec lambda(N, Rational(0));
    for (int i = 0; i < N; ++i) lambda[i] = Rational(2 * N - 5 * i, 3);
    const RationalMatrix J = fusion_J(T, lambda);
    CHECK(is_unipotent_lower_triangular(T, J));
    for (std::size_t b = 0; b < T.dim(); ++b) CHECK(J.at(b, b) == 1);
  }
}

TEST_CASE("rho of sl_N is the half sum of positive roots") {
  CHECK(rho_slN(2) == Vec({Rational(1, 2), Rational(-1, 2)}));
  CHECK(rho_slN(3) == Vec({Rational(1), Rational(0), Rational(-1)}));
  const RootSystem rs('A', 3);
  Vec half(4, Rational(0));
  for (const Vec& a : rs.positive_roots()) half = half + Rational(1, 2) * a;
  CHECK(rho_slN(4) == half);
}

TEST_CASE("weyl factorization of the tensor operator holds") {
  const RootSystem rs('A', 2);
  const WeightModule T = two_vectors(3);
  const Vec lambda = {Rational(13, 4), Rational(-1, 4), Rational(-3)};
  CHECK(tensor_factorization_holds(T, rs.simple_reflection(1), lambda));
  CHECK(tensor_factorization_holds(T, rs.longest_element(), lambda));
}

TEST_CASE("tensor operator exchanges the casimir pieces") {
  const RootSystem rs('A', 2);
  const WeightModule T =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::wedge_rep(3, 2)});
  const Vec lambda = {Rational(9, 2), Rational(-5, 4), Rational(-13, 4)};
  CHECK(casimir_exchange_holds(T, rs.simple_reflection(2), lambda));
  CHECK(casimir_exchange_holds(T, rs.longest_element(), lambda));
}

TEST_CASE("bishifted product respects the block weights") {
  const RootSystem rs('A', 1);
  const WeightModule T = two_vectors(2);
  const Vec lambda = {Rational(11, 5), Rational(-11, 5)};
  const RationalMatrix b = bb_bishifted(T, rs.simple_reflection(1), lambda);
  // Block-diagonal in the pair of factor weights: entries may only connect
  // basis vectors with equal factor weights (the operator preserves each).
  for (std::size_t r = 0; r < T.dim(); ++r)
    for (std::size_t c = 0; c < T.dim(); ++c)
      if (b.at(r, c) != 0) {
        CHECK(T.factor_weight(0, r) == T.factor_weight(0, c));
        CHECK(T.factor_weight(1, r) == T.factor_weight(1, c));
      }
}

}  // namespace
