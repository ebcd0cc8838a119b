#include <doctest.h>

#include "kzdyn/errors.hpp"
#include "kzdyn/operators.hpp"
#include "kzdyn/verma.hpp"

namespace {

using namespace kzdyn;

TEST_CASE("intertwiner extraction matches the closed form on small modules") {
  CHECK(sl2_verma_oracle_matches(1, 3));
  CHECK(sl2_verma_oracle_matches(2, 4));
  CHECK(sl2_verma_oracle_matches(3, 7));
}

TEST_CASE("truncation depth must cover the singular vector") {
  CHECK_THROWS_AS((void)verma_intertwiner_a(2, 6, 3), TruncationTooShallowError);
}

TEST_CASE("extracted operator is weight preserving and scales the top vector") {
  const int m = 2;
  const long long l = 6;
  const RationalMatrix a = verma_intertwiner_a(m, l, static_cast<std::size_t>(l + m + 1));
  const WeightModule L = WeightModule::sl2_module(m);
  REQUIRE(a.rows() == L.dim());
  // The closed form is x * p(l; H, E, F); x flips v_k to (-1)^k v_{m-k}, so
  // the column of v_0 has its only entry at row m with value +/- p-eigenvalue.
  const Vec alpha = {Rational(1), Rational(-1)};
  const RationalMatrix p = p_series(Rational(l), L.h_root(alpha), L.e_root(alpha),
                                    L.f_root(alpha));
  CHECK(a.at(m, 0) == p.at(0, 0));
  for (int r = 0; r < m; ++r) CHECK(a.at(r, 0) == 0);
}

}  // namespace
