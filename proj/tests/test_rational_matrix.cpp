#include <doctest.h>

#include "kzdyn/errors.hpp"
#include "kzdyn/rational_matrix.hpp"

namespace {

using namespace kzdyn;

/// Independent determinant oracle: Laplace expansion along the first row.
Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Rational term = m.at(0, j) * cofactor_det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

RationalMatrix test_matrix(std::size_t n, int salt) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rational(static_cast<long long>((i * 7 + j * 3 + salt) % 11) - 5,
                            static_cast<long long>((i + 2 * j + salt) % 4 + 1));
  return m;
}

TEST_CASE("determinant matches a cofactor-expansion oracle") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int salt = 0; salt < 5; ++salt) {
      const RationalMatrix m = test_matrix(n, salt);
      CHECK(m.det() == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
  const RationalMatrix a = test_matrix(4, 1);
  const RationalMatrix b = test_matrix(4, 2);
  CHECK((a * b).det() == a.det() * b.det());
}

TEST_CASE("inverse round-trips and detects singularity") {
  const RationalMatrix a = test_matrix(4, 3);
  REQUIRE(a.det() != 0);
  CHECK(a * a.inverse() == RationalMatrix::identity(4));
  CHECK(a.inverse() * a == RationalMatrix::identity(4));

  RationalMatrix s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK_THROWS_AS((void)s.inverse(), SingularMatrixError);
  CHECK(s.det() == 0);
}

TEST_CASE("kronecker product has block structure") {
  RationalMatrix a(2, 2), b(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  b.at(0, 0) = Rational(1, 2);
  b.at(1, 1) = 5;
  const RationalMatrix k = a.kron(b);
  REQUIRE(k.rows() == 4);
  CHECK(k.at(0, 0) == Rational(1, 2));
  CHECK(k.at(1, 1) == 5);
  CHECK(k.at(0, 2) == 1);          // a(0,1)*b(0,0)
  CHECK(k.at(3, 1) == 15);         // a(1,0)*b(1,1)
  CHECK(k.det() == a.det() * a.det() * b.det() * b.det());
}

TEST_CASE("exp of a nilpotent matrix is the finite series") {
  RationalMatrix n(3, 3);
  n.at(0, 1) = 1;
  n.at(1, 2) = 2;
  const RationalMatrix e = exp_nilpotent(n);
  CHECK(e.at(0, 1) == 1);
  CHECK(e.at(1, 2) == 2);
  CHECK(e.at(0, 2) == 1);  // (n^2/2)(0,2) = 1
  CHECK(e * exp_nilpotent(-n) == RationalMatrix::identity(3));
}

TEST_CASE("commutator is antisymmetric and vanishes on commuting pairs") {
  const RationalMatrix a = test_matrix(3, 4);
  const RationalMatrix b = test_matrix(3, 5);
  CHECK(commutator(a, b) == -commutator(b, a));
  CHECK(commutator(a, a * a).is_zero());
}

TEST_CASE("restrict_to picks the expected submatrix") {
  const RationalMatrix a = test_matrix(4, 6);
  const RationalMatrix s = a.restrict_to({1, 3});
  REQUIRE(s.rows() == 2);
  CHECK(s.at(0, 0) == a.at(1, 1));
  CHECK(s.at(0, 1) == a.at(1, 3));
  CHECK(s.at(1, 0) == a.at(3, 1));
  CHECK(s.at(1, 1) == a.at(3, 3));
}

}  // namespace
