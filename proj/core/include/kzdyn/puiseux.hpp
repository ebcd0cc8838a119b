#ifndef KZDYN_PUISEUX_HPP
#define KZDYN_PUISEUX_HPP

#include <map>
#include <vector>

#include "kzdyn/rational_matrix.hpp"

namespace kzdyn {

/// Exponent vector of a monomial prod_k z_k^{q_k}, q_k rational.
/// Componentwise addition is the monomial product.
using ExponentVector = std::vector<Rational>;

/// One matrix entry: a finite sum of monomials with rational coefficients.
/// Zero coefficients are never stored.
using MonomialSum = std::map<ExponentVector, Rational>;

/// Matrix whose entries are finite rational-coefficient sums of monomials
/// in z_1..z_n with rational exponents.
class PuiseuxMatrix {
 public:
  PuiseuxMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PuiseuxMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols) {}

  /// Constant (z-free) matrix.
  static PuiseuxMatrix constant(const RationalMatrix& m, std::size_t nvars);
  static PuiseuxMatrix identity(std::size_t n, std::size_t nvars);

  /// Diagonal matrix of monomials prod_k z_k^{exps[i][k]}.
  static PuiseuxMatrix monomial_diagonal(const std::vector<ExponentVector>& exps);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  const MonomialSum& entry(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void add_term(std::size_t i, std::size_t j, const ExponentVector& e, const Rational& c);

  PuiseuxMatrix operator+(const PuiseuxMatrix& o) const;
  PuiseuxMatrix operator-(const PuiseuxMatrix& o) const;
  PuiseuxMatrix operator*(const PuiseuxMatrix& o) const;
  PuiseuxMatrix operator*(const Rational& c) const;
  bool operator==(const PuiseuxMatrix& o) const;
  bool operator!=(const PuiseuxMatrix& o) const { return !(*this == o); }

  bool is_constant() const;
  /// The constant part as a RationalMatrix; requires is_constant().
  RationalMatrix constant_part() const;

  /// Substitute z_k = t_k^d, multiplying every exponent by d. Throws
  /// NonClearingDenominatorError if some d*q is not an integer.
  PuiseuxMatrix substitute_power(long long d) const;

  /// Exact evaluation at z (all exponents must be integers by now).
  RationalMatrix eval(const std::vector<Rational>& z) const;

  /// True if no stored coefficient is zero (tests assert this invariant).
  bool is_normalized() const;

 private:
  std::size_t rows_, cols_, nvars_;
  std::vector<MonomialSum> entries_;
};

/// Integer power of a rational, negative exponents allowed (z != 0).
Rational rational_pow(const Rational& z, const Integer& e);

}  // namespace kzdyn

#endif
