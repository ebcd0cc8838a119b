#include <doctest.h>

#include "kzdyn/errors.hpp"
#include "kzdyn/operators.hpp"

namespace {

using namespace kzdyn;

const Vec kAlpha2 = {Rational(1), Rational(-1)};

TEST_CASE("p-series on the two-dimensional module in closed form") {
  const WeightModule L = WeightModule::sl2_module(1);
  const RationalMatrix H = L.h_root(kAlpha2);
  const RationalMatrix E = L.e_root(kAlpha2);
  const RationalMatrix F = L.f_root(kAlpha2);
  const Rational t(5, 3);
  // p(t) v_0 = v_0 and p(t) v_1 = (t+2)/(t+1) v_1, by summing the series.
  const RationalMatrix p = p_series(t, H, E, F);
  CHECK(p.at(0, 0) == 1);
  CHECK(p.at(1, 1) == (t + 2) / (t + 1));
  CHECK(p.at(0, 1) == 0);
  CHECK(p.at(1, 0) == 0);
  CHECK_THROWS_AS((void)p_series(Rational(-1), H, E, F), PoleError);
}

TEST_CASE("p-series ignores poles on columns the series has already left") {
  // On v_0 the series terminates at k = 0, so a pole in the k = 1 factor
  // must not matter; on L_1 only t = -1 is a true pole.
  const WeightModule L = WeightModule::sl2_module(1);
  const RationalMatrix p = p_series(Rational(1), L.h_root(kAlpha2), L.e_root(kAlpha2),
                                    L.f_root(kAlpha2));
  CHECK(p.at(0, 0) == 1);
}

TEST_CASE("weight-operator eigenvalues follow the factorial ratio formula") {
  const int m = 2;
  const WeightModule L = WeightModule::sl2_module(m);
  const Rational a(7, 2);
  const Vec lambda = {a / 2, -a / 2};
  const RationalMatrix b = bb_alpha(L, kAlpha2, lambda);
  Rational expected = 1;
  for (int k = 0; k <= m; ++k) {
    CHECK(b.at(k, k) == expected);
    for (std::size_t c = 0; c < L.dim(); ++c)
      if (c != static_cast<std::size_t>(k)) CHECK(b.at(k, c) == 0);
    if (k < m) expected *= (a + Rational(m, 2) - k) / (a - Rational(m, 2) + k);
  }
}

TEST_CASE("negative-root operator inverts up to the weight scalar") {
  const WeightModule L = WeightModule::sl2_module(3);
  const Rational a(9, 4);
  const Vec lambda = {a / 2, -a / 2};
  const Vec minus = {Rational(-1), Rational(1)};
  const RationalMatrix prod = bb_alpha(L, kAlpha2, lambda) * bb_alpha(L, minus, lambda);
  for (std::size_t k = 0; k < L.dim(); ++k) {
    const Rational nu_pairing = L.weight(k)[0] - L.weight(k)[1];
    CHECK(prod.at(k, k) == (a - nu_pairing / 2) / (a + nu_pairing / 2));
  }
}

TEST_CASE("casimir halves act as the flip minus the trace correction") {
  const WeightModule V = WeightModule::vector_rep(2);
  const WeightModule T = WeightModule::tensor({V, V});
  const RationalMatrix om = omega(T, 0, 1);
  // Omega (v_a (x) v_b) = v_b (x) v_a - (1/2) v_a (x) v_b for sl_2.
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t col = a * 2 + b;
      const std::size_t flip = b * 2 + a;
      for (std::size_t row = 0; row < 4; ++row) {
        Rational expected = 0;
        if (row == flip) expected += 1;
        if (row == col) expected -= Rational(1, 2);
        CHECK(om.at(row, col) == expected);
      }
    }
  CHECK(omega_plus(T, 0, 1) + omega_minus(T, 0, 1) == om);
}

TEST_CASE("r-matrix sums the casimir halves and rejects z = 1") {
  const WeightModule T =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::vector_rep(3)});
  const Rational z(4, 7);
  const RationalMatrix r = r_matrix(T, 0, 1, z);
  CHECK(r * (z - 1) == omega_plus(T, 0, 1) * z + omega_minus(T, 0, 1));
  CHECK_THROWS_AS((void)r_matrix(T, 0, 1, Rational(1)), PoleAtOneError);
}

TEST_CASE("lambda_in_factor is diagonal with factor-weight pairings") {
  const WeightModule T =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::wedge_rep(3, 2)});
  const Vec lambda = {Rational(2), Rational(-1, 2), Rational(-3, 2)};
  const RationalMatrix m = lambda_in_factor(T, 1, lambda);
  for (std::size_t b = 0; b < T.dim(); ++b)
    CHECK(m.at(b, b) == dot(T.factor_weight(1, b), lambda));
}

}  // namespace
