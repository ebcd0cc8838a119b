#include "kzdyn/puiseux.hpp"

#include "kzdyn/errors.hpp"

namespace kzdyn {

Rational rational_pow(const Rational& z, const Integer& e) {
  if (e == 0) return 1;
  if (z == 0) throw Error("rational_pow: 0 to a nonpositive power");
  Integer n = e < 0 ? Integer(-e) : e;
  Rational base = e < 0 ? Rational(1) / z : z;
  Rational r = 1;
  while (n > 0) {
    if ((n & 1) != 0) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

PuiseuxMatrix PuiseuxMatrix::constant(const RationalMatrix& m, std::size_t nvars) {
  PuiseuxMatrix p(m.rows(), m.cols(), nvars);
  const ExponentVector zero(nvars, Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) p.entries_[i * p.cols_ + j][zero] = m.at(i, j);
  return p;
}

PuiseuxMatrix PuiseuxMatrix::identity(std::size_t n, std::size_t nvars) {
  return constant(RationalMatrix::identity(n), nvars);
}

PuiseuxMatrix PuiseuxMatrix::monomial_diagonal(const std::vector<ExponentVector>& exps) {
  const std::size_t n = exps.size();
  const std::size_t nvars = n ? exps[0].size() : 0;
  PuiseuxMatrix p(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) p.entries_[i * n + i][exps[i]] = 1;
  return p;
}

void PuiseuxMatrix::add_term(std::size_t i, std::size_t j, const ExponentVector& e,
                             const Rational& c) {
  if (c == 0) return;
  MonomialSum& s = entries_[i * cols_ + j];
  auto it = s.find(e);
  if (it == s.end()) {
    s.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

PuiseuxMatrix PuiseuxMatrix::operator+(const PuiseuxMatrix& o) const {
  PuiseuxMatrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [e, c] : o.entry(i, j)) r.add_term(i, j, e, c);
  return r;
}

PuiseuxMatrix PuiseuxMatrix::operator-(const PuiseuxMatrix& o) const {
  PuiseuxMatrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [e, c] : o.entry(i, j)) r.add_term(i, j, e, -c);
  return r;
}

PuiseuxMatrix PuiseuxMatrix::operator*(const PuiseuxMatrix& o) const {
  PuiseuxMatrix r(rows_, o.cols_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MonomialSum& a = entry(i, k);
      if (a.empty()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const MonomialSum& b = o.entry(k, j);
        for (const auto& [ea, ca] : a)
          for (const auto& [eb, cb] : b) {
            ExponentVector e(nvars_);
            for (std::size_t v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(i, j, e, ca * cb);
          }
      }
    }
  return r;
}

PuiseuxMatrix PuiseuxMatrix::operator*(const Rational& c) const {
  PuiseuxMatrix r(rows_, cols_, nvars_);
  if (c == 0) return r;
  r = *this;
  for (auto& s : r.entries_)
    for (auto& [e, coef] : s) coef *= c;
  return r;
}

bool PuiseuxMatrix::operator==(const PuiseuxMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && nvars_ == o.nvars_ && entries_ == o.entries_;
}

bool PuiseuxMatrix::is_constant() const {
  for (const auto& s : entries_)
    for (const auto& [e, c] : s)
      for (const auto& q : e)
        if (q != 0) return false;
  return true;
}

RationalMatrix PuiseuxMatrix::constant_part() const {
  if (!is_constant()) throw Error("constant_part: matrix depends on z");
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const MonomialSum& s = entry(i, j);
      if (!s.empty()) m.at(i, j) = s.begin()->second;
    }
  return m;
}

PuiseuxMatrix PuiseuxMatrix::substitute_power(long long d) const {
  PuiseuxMatrix r(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [e, c] : entry(i, j)) {
        ExponentVector scaled(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) {
          scaled[v] = e[v] * d;
          if (!is_integer(scaled[v]))
            throw NonClearingDenominatorError("substitute_power: " + e[v].str() + " * " +
                                              std::to_string(d) + " is not an integer");
        }
        r.add_term(i, j, scaled, c);
      }
  return r;
}

RationalMatrix PuiseuxMatrix::eval(const std::vector<Rational>& z) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [e, c] : entry(i, j)) {
        Rational term = c;
        for (std::size_t v = 0; v < nvars_; ++v) {
          if (e[v] == 0) continue;
          if (!is_integer(e[v]))
            throw FractionalExponentError("eval: fractional exponent " + e[v].str());
          term *= rational_pow(z[v], numerator_of(e[v]));
        }
        m.at(i, j) += term;
      }
  return m;
}

bool PuiseuxMatrix::is_normalized() const {
  for (const auto& s : entries_)
    for (const auto& [e, c] : s)
      if (c == 0) return false;
  return true;
}

}  // namespace kzdyn
