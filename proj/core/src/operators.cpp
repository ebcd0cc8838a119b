#include "kzdyn/operators.hpp"

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

bool is_diagonal(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return true;
}

/// One column of p(t; H,E,F) applied to the basis vector b, whose
/// H-eigenvalue is h. All diagonal factors act on v before any E, so
/// they contribute the scalar prod_j 1/(t - h - j).
Vec p_column(const Rational& t, const Rational& h, const RationalMatrix& E,
             const RationalMatrix& F, std::size_t b) {
  const std::size_t n = E.rows();
  Vec u(n, Rational(0));  // E^k v_b
  u[b] = 1;
  Vec result(n, Rational(0));
  result[b] = 1;  // k = 0 term
  Rational coef = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    u = E.apply(u);
    if (is_zero_vec(u)) return result;
    Rational denom = (t - h - Rational(static_cast<long long>(k) - 1)) *
                     Rational(static_cast<long long>(k));
    if (denom == 0)
      throw PoleError("p_series: pole at t - H - j = 0 with t = " + to_string(t) +
                      ", H-eigenvalue " + to_string(h) + ", j = " + std::to_string(k - 1));
    coef /= denom;
    Vec w = u;
    for (std::size_t j = 0; j < k; ++j) w = F.apply(w);
    for (std::size_t i = 0; i < n; ++i) result[i] += coef * w[i];
  }
  throw Error("p_series: E is not nilpotent within the module dimension");
}

}  // namespace

RationalMatrix p_series(const Rational& t, const RationalMatrix& H, const RationalMatrix& E,
                        const RationalMatrix& F) {
  if (!is_diagonal(H)) throw Error("p_series: H must be diagonal in the weight basis");
  const std::size_t n = H.rows();
  RationalMatrix m(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec col = p_column(t, H.at(b, b), E, F, b);
    for (std::size_t i = 0; i < n; ++i) m.at(i, b) = col[i];
  }
  return m;
}

RationalMatrix bb_alpha(const WeightModule& V, const Vec& alpha, const Vec& lambda) {
  const RationalMatrix H = V.h_root(alpha);
  const RationalMatrix E = V.e_root(alpha);
  const RationalMatrix F = V.f_root(alpha);
  // For sl_N every root is long: alpha^vee = alpha and (,) is the dot product.
  RationalMatrix m(V.dim(), V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b) {
    const Vec& nu = V.weight(b);
    Rational t = dot(lambda, alpha) + dot(nu, alpha) / 2 - 1;
    Vec col = p_column(t, H.at(b, b), E, F, b);
    for (std::size_t i = 0; i < V.dim(); ++i) m.at(i, b) = col[i];
  }
  return m;
}

RationalMatrix bb_w(const WeightModule& V, const WeylElement& w, const Vec& lambda) {
  RationalMatrix m = RationalMatrix::identity(V.dim());
  for (const Vec& alpha : w.inversion_sequence()) m = bb_alpha(V, alpha, lambda) * m;
  return m;
}

RationalMatrix omega0(const WeightModule& V, std::size_t i, std::size_t j) {
  std::vector<Rational> d(V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b)
    d[b] = dot(V.factor_weight(i, b), V.factor_weight(j, b)) / 2;
  return RationalMatrix::diagonal(d);
}

namespace {

RationalMatrix omega_offdiag(const WeightModule& V, std::size_t i, std::size_t j, bool plus) {
  const int N = V.N();
  RationalMatrix sum(V.dim(), V.dim());
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      const RationalMatrix raise = V.op_in_factor(i, V.factor(i).e(a, b));
      const RationalMatrix lower = V.op_in_factor(j, V.factor(j).e(b, a));
      const RationalMatrix fall = V.op_in_factor(i, V.factor(i).e(b, a));
      const RationalMatrix lift = V.op_in_factor(j, V.factor(j).e(a, b));
      sum = sum + (plus ? raise * lower : fall * lift);
    }
  return sum;
}

}  // namespace

RationalMatrix omega_plus(const WeightModule& V, std::size_t i, std::size_t j) {
  return omega0(V, i, j) + omega_offdiag(V, i, j, true);
}

RationalMatrix omega_minus(const WeightModule& V, std::size_t i, std::size_t j) {
  return omega0(V, i, j) + omega_offdiag(V, i, j, false);
}

RationalMatrix omega(const WeightModule& V, std::size_t i, std::size_t j) {
  return omega_plus(V, i, j) + omega_minus(V, i, j);
}

RationalMatrix lambda_in_factor(const WeightModule& V, std::size_t j, const Vec& lambda) {
  return V.op_in_factor(j, V.factor(j).cartan(lambda));
}

RationalMatrix r_matrix(const WeightModule& V, std::size_t i, std::size_t j, const Rational& z) {
  if (z == 1) throw PoleAtOneError();
  return (omega_plus(V, i, j) * z + omega_minus(V, i, j)) * (Rational(1) / (z - 1));
}

}  // namespace kzdyn
