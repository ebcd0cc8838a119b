#ifndef KZDYN_RATIONAL_HPP
#define KZDYN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace kzdyn {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator (boost keeps the canonical form for us).
using Rational = boost::multiprecision::cpp_rational;

/// Vector in the ambient Cartan space, exact rational coordinates.
using Vec = std::vector<Rational>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const Rational& q) { return q.str(); }

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& a);
bool is_zero_vec(const Vec& a);

/// Plain coordinatewise dot product (the invariant form is a scaled dot
/// product in every realization we use).
Rational dot(const Vec& a, const Vec& b);

Integer factorial(int n);

std::string vec_to_string(const Vec& v);

}  // namespace kzdyn

#endif
