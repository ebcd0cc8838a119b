#include "kzdyn/fusion.hpp"

#include <algorithm>
#include <map>

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

/// Height of delta in the simple-root basis of A_{N-1} (sum of simple-root
/// coefficients, which are the partial sums of the coordinates); returns
/// -1 when delta is not a nonzero element of Q^+.
long long q_plus_height(const Vec& delta) {
  Rational partial = 0;
  Rational height = 0;
  for (std::size_t k = 0; k + 1 < delta.size(); ++k) {
    partial += delta[k];
    if (partial < 0 || !is_integer(partial)) return -1;
    height += partial;
  }
  if (partial + delta.back() != 0) return -1;
  if (height == 0) return -1;
  return static_cast<long long>(numerator_of(height));
}

RationalMatrix lowering_operator(const WeightModule& WV) {
  // N = sum_{alpha > 0} e_{-alpha}^(1) e_alpha^(2)
  const int N = WV.N();
  RationalMatrix sum(WV.dim(), WV.dim());
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b)
      sum = sum + WV.op_in_factor(0, WV.factor(0).e(b, a)) *
                      WV.op_in_factor(1, WV.factor(1).e(a, b));
  return sum;
}

}  // namespace

Vec rho_slN(int N) {
  Vec rho(N);
  for (int i = 0; i < N; ++i) rho[i] = Rational(N - 1 - 2 * i, 2);
  return rho;
}

RationalMatrix fusion_shifted(const WeightModule& WV, const Vec& mu) {
  if (WV.factor_count() != 2) throw Error("fusion_shifted: a two-factor module is required");
  const std::size_t d = WV.dim();
  std::vector<Rational> a(d);
  for (std::size_t x = 0; x < d; ++x)
    a[x] = dot(mu, WV.factor_weight(1, x)) + dot(WV.factor_weight(0, x), WV.factor_weight(1, x)) / 2;

  const RationalMatrix low = lowering_operator(WV);
  RationalMatrix K = RationalMatrix::identity(d);

  // Entries K[y,x] live where tau_x - tau_y in Q^+ and the total weights
  // match; fill them in increasing height drop so (low*K)[y,x] only reads
  // entries already known.
  struct Entry {
    long long drop;
    std::size_t y, x;
  };
  std::vector<Entry> entries;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (y == x || WV.weight(y) != WV.weight(x)) continue;
      long long drop = q_plus_height(WV.factor_weight(0, x) - WV.factor_weight(0, y));
      if (drop > 0) entries.push_back({drop, y, x});
    }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& p, const Entry& q) { return p.drop < q.drop; });

  for (const Entry& en : entries) {
    Rational num = 0;
    for (std::size_t u = 0; u < d; ++u)
      if (low.at(en.y, u) != 0 && K.at(u, en.x) != 0) num += low.at(en.y, u) * K.at(u, en.x);
    if (a[en.x] == a[en.y])
      throw ResonantLambdaError("fusion: resonant argument, equal diagonal values " +
                                to_string(a[en.x]) + " in one block");
    K.at(en.y, en.x) = num / (a[en.x] - a[en.y]);
  }

  // The defining relation must hold exactly.
  const RationalMatrix mu2_om0 = lambda_in_factor(WV, 1, mu) + omega0(WV, 0, 1);
  const RationalMatrix mu2_omm = lambda_in_factor(WV, 1, mu) + omega_minus(WV, 0, 1);
  if (!(K * mu2_om0 - mu2_omm * K).is_zero())
    throw Error("fusion_shifted: residual of the defining relation is nonzero");
  return K;
}

RationalMatrix fusion_J(const WeightModule& WV, const Vec& lambda) {
  const Vec rho = rho_slN(WV.N());
  RationalMatrix J = RationalMatrix::identity(WV.dim());
  std::map<Vec, RationalMatrix> block_solutions;
  for (const Vec& chi : WV.weight_support()) {
    Vec mu = lambda + rho - Rational(1, 2) * chi;
    RationalMatrix K = fusion_shifted(WV, mu);
    for (std::size_t x : WV.weight_space(chi))
      for (std::size_t y : WV.weight_space(chi)) J.at(y, x) = K.at(y, x);
  }
  return J;
}

bool is_unipotent_lower_triangular(const WeightModule& WV, const RationalMatrix& J) {
  for (std::size_t x = 0; x < WV.dim(); ++x)
    for (std::size_t y = 0; y < WV.dim(); ++y) {
      const Rational& v = J.at(y, x);
      if (y == x) {
        if (v != 1) return false;
      } else if (v != 0) {
        if (q_plus_height(WV.factor_weight(0, x) - WV.factor_weight(0, y)) <= 0) return false;
        if (q_plus_height(WV.factor_weight(1, y) - WV.factor_weight(1, x)) <= 0) return false;
      }
    }
  return true;
}

RationalMatrix bb_bishifted(const WeightModule& WV, const WeylElement& w, const Vec& lambda) {
  const WeightModule& W = WV.factor(0);
  const WeightModule& V = WV.factor(1);
  std::map<std::pair<Vec, Vec>, RationalMatrix> cache;
  RationalMatrix out(WV.dim(), WV.dim());
  for (std::size_t x = 0; x < WV.dim(); ++x) {
    const Vec& tau = WV.factor_weight(0, x);
    const Vec& sigma = WV.factor_weight(1, x);
    auto it = cache.find({tau, sigma});
    if (it == cache.end()) {
      RationalMatrix m = bb_w(W, w, lambda - Rational(1, 2) * sigma)
                             .kron(bb_w(V, w, lambda + Rational(1, 2) * tau));
      it = cache.emplace(std::make_pair(tau, sigma), std::move(m)).first;
    }
    for (std::size_t y = 0; y < WV.dim(); ++y) out.at(y, x) = it->second.at(y, x);
  }
  return out;
}

bool tensor_factorization_holds(const WeightModule& WV, const WeylElement& w, const Vec& lambda) {
  const RationalMatrix lhs = bb_w(WV, w, lambda);
  const RationalMatrix x = WV.group_lift(w);
  const RationalMatrix j_rot = fusion_shifted(WV, w.apply(lambda));
  const RationalMatrix j_here = fusion_shifted(WV, lambda);
  const RationalMatrix rhs =
      x.inverse() * j_rot * x * bb_bishifted(WV, w, lambda) * j_here.inverse();
  return lhs == rhs;
}

bool casimir_exchange_holds(const WeightModule& WV, const WeylElement& w, const Vec& lambda) {
  const RationalMatrix B = bb_w(WV, w, lambda);
  if (!commutator(omega(WV, 0, 1), B).is_zero()) return false;
  const RationalMatrix om_minus = omega_minus(WV, 0, 1);
  const RationalMatrix lam2 = lambda_in_factor(WV, 1, lambda);
  const RationalMatrix x = WV.group_lift(w);
  const RationalMatrix rotated = x.inverse() * om_minus * x;  // w^{-1}(Omega^-)
  return (rotated + lam2) * B == B * (om_minus + lam2);
}

}  // namespace kzdyn
