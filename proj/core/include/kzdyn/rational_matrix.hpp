#ifndef KZDYN_RATIONAL_MATRIX_HPP
#define KZDYN_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "kzdyn/rational.hpp"

namespace kzdyn {

/// Dense matrix over exact rationals. Closed under +, *, det and inverse;
/// no rounding anywhere.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& c) const;
  RationalMatrix operator-() const;
  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  Rational trace() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// Fraction-free determinant: denominators are cleared row by row and the
  /// integer core is eliminated Bareiss-style to control expression swell.
  Rational det() const;

  /// Exact inverse by Gauss-Jordan elimination with nonzero pivoting.
  /// Throws SingularMatrixError when det = 0.
  RationalMatrix inverse() const;

  RationalMatrix kron(const RationalMatrix& o) const;

  /// Submatrix on the given row/column index set (in the given order).
  RationalMatrix restrict_to(const std::vector<std::size_t>& idx) const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline RationalMatrix operator*(const Rational& c, const RationalMatrix& m) { return m * c; }

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// exp of a nilpotent matrix as a finite exact sum; throws if the power
/// series has not terminated after max_terms.
RationalMatrix exp_nilpotent(const RationalMatrix& m, std::size_t max_terms = 256);

}  // namespace kzdyn

#endif
