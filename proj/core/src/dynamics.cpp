#include "kzdyn/dynamics.hpp"

#include <algorithm>

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

long long to_ll(const Rational& q) {
  if (!is_integer(q)) throw Error("expected an integer, got " + to_string(q));
  return numerator_of(q).convert_to<long long>();
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and writes u, v with ua + vb = g.
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = (a >= 0) ? 1 : -1;
    v = 0;
    return std::llabs(a);
  }
  long long u1, v1;
  long long g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

PuiseuxMatrix as_puiseux(const RationalMatrix& m, std::size_t nvars) {
  return PuiseuxMatrix::constant(m, nvars);
}

std::vector<Rational> powers(const std::vector<Rational>& t, long long d) {
  std::vector<Rational> z(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) z[k] = rational_pow(t[k], d);
  return z;
}

/// sum_{l != j} of w^{-1}(r(z_j/z_l))^{(j,l)}, where w^{-1} acts by
/// conjugation with the inverse group lift.
RationalMatrix rotated_r_sum(const WeightModule& V, const WeylElement& w, std::size_t j,
                             const std::vector<Rational>& z) {
  const RationalMatrix X = V.group_lift(w);
  const RationalMatrix Xi = X.inverse();
  RationalMatrix sum(V.dim(), V.dim());
  for (std::size_t l = 0; l < z.size(); ++l)
    if (l != j) sum = sum + Xi * r_matrix(V, j, l, z[j] / z[l]) * X;
  return sum;
}

RationalMatrix plain_r_sum(const WeightModule& V, std::size_t j, const std::vector<Rational>& z) {
  RationalMatrix sum(V.dim(), V.dim());
  for (std::size_t l = 0; l < z.size(); ++l)
    if (l != j) sum = sum + r_matrix(V, j, l, z[j] / z[l]);
  return sum;
}

}  // namespace

PuiseuxMatrix z_weight_diagonal(const WeightModule& V, const Vec& omega, int sign) {
  std::vector<ExponentVector> exps(V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b) {
    ExponentVector e(V.factor_count());
    for (std::size_t k = 0; k < V.factor_count(); ++k)
      e[k] = Rational(sign) * dot(V.factor_weight(k, b), omega);
    exps[b] = std::move(e);
  }
  return PuiseuxMatrix::monomial_diagonal(exps);
}

PuiseuxMatrix dyn_operator_slN(const WeightModule& V, const RootSystem& rs, int i,
                               const Vec& lambda) {
  const Vec& omega = rs.dual_fundamental_weight(i);
  return z_weight_diagonal(V, omega) *
         as_puiseux(bb_w(V, rs.w_bracket(i), lambda), V.factor_count());
}

Vec cocycle_shift_weight(const RootSystem& rs, const AffineRoot& root) {
  const std::vector<Rational> coeff = rs.simple_coefficients(root.alpha);
  long long g = 0;
  std::vector<long long> m(coeff.size(), 0);
  for (std::size_t l = 0; l < coeff.size(); ++l) {
    const long long c = to_ll(coeff[l]);
    if (c == 0) continue;
    if (g == 0) {
      g = std::llabs(c);
      m[l] = (c >= 0) ? 1 : -1;
    } else {
      long long u, v;
      const long long g2 = ext_gcd(g, c, u, v);
      for (long long& x : m) x *= u;
      m[l] += v;
      g = g2;
    }
  }
  if (g == 0 || root.level % g != 0)
    throw NoIntegerSolutionError("no omega in P^vee with (omega, alpha) = " +
                                 std::to_string(-root.level));
  const long long scale = -root.level / g;
  Vec omega(rs.ambient_dim(), Rational(0));
  for (std::size_t l = 0; l < m.size(); ++l)
    if (m[l] != 0)
      omega = omega + Rational(scale * m[l]) * rs.dual_fundamental_weight(static_cast<int>(l) + 1);
  return omega;
}

Vec cocycle_shift_weight_alt(const RootSystem& rs, const AffineRoot& root) {
  Vec omega = cocycle_shift_weight(rs, root);
  if (rs.rank() < 2) return omega;
  const std::vector<Rational> coeff = rs.simple_coefficients(root.alpha);
  for (std::size_t l = 0; l < coeff.size(); ++l)
    if (coeff[l] == 0) return omega + rs.dual_fundamental_weight(static_cast<int>(l) + 1);
  // All coefficients nonzero: c_2 omega_1^vee - c_1 omega_2^vee pairs to 0.
  return omega + coeff[1] * rs.dual_fundamental_weight(1) -
         coeff[0] * rs.dual_fundamental_weight(2);
}

PuiseuxMatrix g_tilde_root_with_shift(const WeightModule& V, const AffineRoot& root,
                                      const Vec& omega, const Vec& lambda,
                                      const Rational& kappa) {
  if (dot(omega, root.alpha) != Rational(-root.level))
    throw Error("g_tilde_root: shift weight does not pair to -level");
  const Vec shifted = lambda - kappa * omega;
  return z_weight_diagonal(V, omega) *
         as_puiseux(bb_alpha(V, root.alpha, shifted), V.factor_count()) *
         z_weight_diagonal(V, omega, -1);
}

PuiseuxMatrix g_tilde_root(const WeightModule& V, const RootSystem& rs, const AffineRoot& root,
                           const Vec& lambda, const Rational& kappa) {
  return g_tilde_root_with_shift(V, root, cocycle_shift_weight(rs, root), lambda, kappa);
}

bool g_tilde_well_defined(const WeightModule& V, const RootSystem& rs, const AffineRoot& root,
                          const Vec& lambda, const Rational& kappa) {
  const Vec omega = cocycle_shift_weight(rs, root);
  const Vec alt = cocycle_shift_weight_alt(rs, root);
  return g_tilde_root_with_shift(V, root, omega, lambda, kappa) ==
         g_tilde_root_with_shift(V, root, alt, lambda, kappa);
}

PuiseuxMatrix cocycle_value(const WeightModule& V, const RootSystem& rs,
                            const AffineWeylElement& el, const Vec& lambda,
                            const Rational& kappa) {
  PuiseuxMatrix g = PuiseuxMatrix::identity(V.dim(), V.factor_count());
  for (const AffineRoot& root : el.a_tilde_sequence())
    g = g_tilde_root(V, rs, root, lambda, kappa) * g;
  return g;
}

OperatorFamily twisted_action(const WeightModule& V, const AffineWeylElement& el,
                              OperatorFamily f, const Rational& kappa) {
  const WeylElement w = el.finite_part();
  const Vec omega = el.translation_part();
  const std::size_t nvars = V.factor_count();
  const PuiseuxMatrix X = as_puiseux(V.group_lift(w), nvars);
  const PuiseuxMatrix Xi = as_puiseux(V.group_lift(w).inverse(), nvars);
  const PuiseuxMatrix Zp = z_weight_diagonal(V, omega);
  const PuiseuxMatrix Zm = z_weight_diagonal(V, omega, -1);
  const WeylElement winv = w.inverse();
  return [=](const Vec& la) {
    return X * Zp * f(winv.apply(la) - kappa * omega) * Zm * Xi;
  };
}

bool cocycle_identity_holds(const WeightModule& V, const RootSystem& rs,
                            const AffineWeylElement& x, const AffineWeylElement& y,
                            const Vec& lambda, const Rational& kappa) {
  if ((x * y).length() != x.length() + y.length())
    throw Error("cocycle identity requires an additive-length pair");
  const PuiseuxMatrix lhs = cocycle_value(V, rs, x * y, lambda, kappa);
  OperatorFamily gx = [&](const Vec& la) { return cocycle_value(V, rs, x, la, kappa); };
  const PuiseuxMatrix rhs =
      twisted_action(V, y.inverse(), gx, kappa)(lambda) * cocycle_value(V, rs, y, lambda, kappa);
  return lhs == rhs;
}

bool kz_dyn_compat_holds(const WeightModule& V, const RootSystem& rs, int i, std::size_t j,
                         const std::vector<Rational>& t, const Vec& lambda,
                         const Rational& kappa) {
  const Vec& omega = rs.dual_fundamental_weight(i);
  const std::vector<Rational> z = powers(t, V.N());
  const RationalMatrix K =
      dyn_operator_slN(V, rs, i, lambda).substitute_power(V.N()).eval(t);
  const RationalMatrix shifted = kz_matrix(V, j, z, lambda + kappa * omega);
  const RationalMatrix plain = kz_matrix(V, j, z, lambda);
  return shifted * K - K * plain == kappa * (lambda_in_factor(V, j, omega) * K);
}

bool dyn_dyn_compat_holds(const WeightModule& V, const RootSystem& rs, int i, int j,
                          const Vec& lambda, const Rational& kappa) {
  const Vec& omega_i = rs.dual_fundamental_weight(i);
  const Vec& omega_j = rs.dual_fundamental_weight(j);
  const PuiseuxMatrix lhs = dyn_operator_slN(V, rs, i, lambda + kappa * omega_j) *
                            dyn_operator_slN(V, rs, j, lambda);
  const PuiseuxMatrix rhs = dyn_operator_slN(V, rs, j, lambda + kappa * omega_i) *
                            dyn_operator_slN(V, rs, i, lambda);
  return lhs == rhs;
}

bool pi_invariance_holds(const WeightModule& V, const RootSystem& rs, int i, std::size_t j,
                         const std::vector<Rational>& t) {
  const std::vector<Rational> z = powers(t, V.N());
  const RationalMatrix Z =
      z_weight_diagonal(V, rs.dual_fundamental_weight(i)).substitute_power(V.N()).eval(t);
  const RationalMatrix rotated = rotated_r_sum(V, rs.w_bracket(i), j, z);
  return Z * rotated * Z.inverse() == plain_r_sum(V, j, z);
}

bool kz_conjugation_holds(const WeightModule& V, const WeylElement& w, std::size_t j,
                      const std::vector<Rational>& z, const Vec& lambda) {
  const RationalMatrix B = bb_w(V, w, lambda);
  const RationalMatrix lam_j = lambda_in_factor(V, j, lambda);
  return B * (plain_r_sum(V, j, z) + lam_j) == (rotated_r_sum(V, w, j, z) + lam_j) * B;
}

bool bb_commutes_with_casimir(const WeightModule& V, const WeylElement& w, const Vec& lambda,
                              std::size_t j, std::size_t k) {
  return commutator(bb_w(V, w, lambda), omega(V, j, k)).is_zero();
}

RationalMatrix bb_alpha_inverse(const WeightModule& V, const Vec& alpha, const Vec& lambda) {
  std::vector<Rational> d(V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b) {
    const Rational num = dot(lambda, alpha) + dot(V.weight(b), alpha) / 2;
    const Rational den = dot(lambda, alpha) - dot(V.weight(b), alpha) / 2;
    if (den == 0)
      throw PoleError("bb_alpha_inverse: (lambda - nu/2, alpha) = 0 on a weight space");
    d[b] = num / den;
  }
  return bb_alpha(V, Rational(-1) * alpha, lambda) * RationalMatrix::diagonal(d);
}

namespace {

/// epsilon_a - epsilon_b (1-based) as a root vector of A_{N-1} in R^N.
Vec eps_diff(int N, int a, int b) {
  Vec v(N, Rational(0));
  v[a - 1] = 1;
  v[b - 1] = -1;
  return v;
}

Vec delta_weight(const RootSystem& rs, int i) {
  const int N = rs.rank() + 1;
  Vec d(rs.ambient_dim(), Rational(0));
  if (i <= N - 1) d = d + rs.dual_fundamental_weight(i);
  if (i - 1 >= 1) d = d - rs.dual_fundamental_weight(i - 1);
  return d;
}

}  // namespace

PuiseuxMatrix delta_step_explicit(const WeightModule& V, const RootSystem& rs, int i,
                                  const Vec& lambda, const Rational& kappa) {
  const int N = V.N();
  const Vec delta = delta_weight(rs, i);
  const Vec shifted = lambda + kappa * delta;
  RationalMatrix left = RationalMatrix::identity(V.dim());
  for (int k = i - 1; k >= 1; --k) left = left * bb_alpha_inverse(V, eps_diff(N, k, i), shifted);
  RationalMatrix right = RationalMatrix::identity(V.dim());
  for (int l = N; l >= i + 1; --l) right = right * bb_alpha(V, eps_diff(N, i, l), lambda);
  return as_puiseux(left, V.factor_count()) * z_weight_diagonal(V, delta) *
         as_puiseux(right, V.factor_count());
}

PuiseuxMatrix delta_step_implied(const WeightModule& V, const RootSystem& rs, int i,
                                 const Vec& lambda, const Rational& kappa) {
  const int N = V.N();
  const Vec delta = delta_weight(rs, i);
  RationalMatrix head = RationalMatrix::identity(V.dim());
  if (i - 1 >= 1) head = bb_w(V, rs.w_bracket(i - 1), lambda + kappa * delta).inverse();
  RationalMatrix tail = RationalMatrix::identity(V.dim());
  if (i <= N - 1) tail = bb_w(V, rs.w_bracket(i), lambda);
  return as_puiseux(head, V.factor_count()) * z_weight_diagonal(V, delta) *
         as_puiseux(tail, V.factor_count());
}

bool equivalent_form_holds(const WeightModule& V, const RootSystem& rs, int i, const Vec& lambda,
                           const Rational& kappa) {
  return delta_step_explicit(V, rs, i, lambda, kappa) ==
         delta_step_implied(V, rs, i, lambda, kappa);
}

bool product_over_positive_roots_holds(const WeightModule& V, const RootSystem& rs, int i,
                                       const Vec& lambda) {
  const WeylElement w = rs.w_bracket(i);
  std::vector<Vec> inversions = w.inversion_sequence();
  std::vector<Vec> expected;
  for (const Vec& alpha : rs.positive_roots())
    if (rs.form(rs.dual_fundamental_weight(i), alpha) > 0) expected.push_back(alpha);
  std::sort(inversions.begin(), inversions.end());
  std::sort(expected.begin(), expected.end());
  if (inversions != expected) return false;

  // Recompute the product along the reduced word coming from w^{-1}.
  std::vector<int> word = w.inverse().reduced_word();
  std::reverse(word.begin(), word.end());
  WeylElement prefix = rs.identity();
  RationalMatrix product = RationalMatrix::identity(V.dim());
  for (int letter : word) {
    product = bb_alpha(V, prefix.apply(rs.simple_root(letter)), lambda) * product;
    prefix = prefix * rs.simple_reflection(letter);
  }
  return product == bb_w(V, w, lambda);
}

}  // namespace kzdyn
