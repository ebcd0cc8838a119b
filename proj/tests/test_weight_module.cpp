#include <doctest.h>

#include "kzdyn/weight_module.hpp"

namespace {

using namespace kzdyn;

Vec traceless_e(int N, int i) {
  Vec v(N, Rational(-1, N));
  v[i - 1] += 1;
  return v;
}

TEST_CASE("vector representation carries the traceless coordinate weights") {
  const WeightModule V = WeightModule::vector_rep(3);
  REQUIRE(V.dim() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(V.weight(i - 1) == traceless_e(3, i));
  // e_{12} moves v_2 to v_1.
  CHECK(V.e(1, 2).at(0, 1) == 1);
  CHECK(V.e(1, 2).at(0, 0) == 0);
}

TEST_CASE("wedge powers have binomial dimension and subset weights") {
  const WeightModule W = WeightModule::wedge_rep(4, 2);
  REQUIRE(W.dim() == 6);
  bool found = false;
  for (std::size_t b = 0; b < W.dim(); ++b)
    if (W.weight(b) == traceless_e(4, 1) + traceless_e(4, 3)) found = true;
  CHECK(found);
  CHECK(WeightModule::wedge_rep(4, 4).dim() == 1);
}

TEST_CASE("generators satisfy the gl commutation relations") {
  const WeightModule W = WeightModule::wedge_rep(3, 2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          if (a == b || c == d) continue;  // cartan entries are trace-projected
          RationalMatrix expected(W.dim(), W.dim());
          if (b == c) expected = expected + W.e(a, d);
          if (d == a) expected = expected - W.e(c, b);
          if (a == d && b == c) {
            // [e_ab, e_ba] = e_aa - e_bb holds for the projected cartans too.
            expected = W.e(a, a) - W.e(b, b);
          }
          CHECK(commutator(W.e(a, b), W.e(c, d)) == expected);
        }
}

TEST_CASE("sl2 module realizes the standard triple") {
  const WeightModule L = WeightModule::sl2_module(3);
  const Vec alpha = {Rational(1), Rational(-1)};
  const RationalMatrix E = L.e_root(alpha);
  const RationalMatrix F = L.f_root(alpha);
  const RationalMatrix H = L.h_root(alpha);
  CHECK(commutator(E, F) == H);
  CHECK(commutator(H, E) == E * Rational(2));
  CHECK(commutator(H, F) == F * Rational(-2));
  CHECK(H.at(0, 0) == 3);
  CHECK(H.at(3, 3) == -3);
}

TEST_CASE("tensor module acts by the coproduct") {
  const WeightModule V = WeightModule::vector_rep(3);
  const WeightModule T = WeightModule::tensor({V, V});
  REQUIRE(T.dim() == 9);
  REQUIRE(T.factor_count() == 2);
  const RationalMatrix sum = T.op_in_factor(0, V.e(1, 2)) + T.op_in_factor(1, V.e(1, 2));
  CHECK(T.e(1, 2) == sum);
  for (std::size_t b = 0; b < T.dim(); ++b)
    CHECK(T.weight(b) == T.factor_weight(0, b) + T.factor_weight(1, b));
}

TEST_CASE("weight spaces partition the basis") {
  const WeightModule T =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::wedge_rep(3, 2)});
  std::size_t total = 0;
  for (const Vec& mu : T.weight_support()) total += T.weight_space(mu).size();
  CHECK(total == T.dim());
  CHECK(T.weight_space(Vec{Rational(17), Rational(0), Rational(-17)}).empty());
}

TEST_CASE("group lift conjugation realizes the Weyl action on cartans") {
  const RootSystem rs('A', 2);
  const WeightModule T =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::vector_rep(3)});
  const Vec h = {Rational(5, 2), Rational(-1), Rational(-3, 2)};
  for (int i = 1; i <= 2; ++i) {
    const WeylElement s = rs.simple_reflection(i);
    CHECK(T.weyl_conjugate(s, T.cartan(h)) == T.cartan(s.apply(h)));
  }
  const WeylElement w0 = rs.longest_element();
  CHECK(T.weyl_conjugate(w0, T.cartan(h)) == T.cartan(w0.apply(h)));
  // x_w maps V[mu] to V[w(mu)].
  const RationalMatrix x = T.group_lift(w0);
  for (std::size_t b = 0; b < T.dim(); ++b)
    for (std::size_t c = 0; c < T.dim(); ++c)
      if (x.at(c, b) != 0) CHECK(T.weight(c) == w0.apply(T.weight(b)));
}

TEST_CASE("descriptor names the factors") {
  CHECK(WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::wedge_rep(3, 2)})
            .descriptor() == "sl3:1*2");
}

}  // namespace
