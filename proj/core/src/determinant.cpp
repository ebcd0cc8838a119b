#include "kzdyn/determinant.hpp"

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

std::vector<std::size_t> block_indices(const WeightModule& V, const Vec& nu) {
  std::vector<std::size_t> idx = V.weight_space(nu);
  if (idx.empty()) throw EmptyWeightSpaceError("V[nu] = 0 for nu = " + vec_to_string(nu));
  return idx;
}

}  // namespace

DetData det_data(const WeightModule& V, const Vec& nu, const Vec& lambda) {
  const std::vector<std::size_t> idx = block_indices(V, nu);
  const std::size_t n = V.factor_count();
  DetData d;
  d.lambda_traces.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b : idx) d.lambda_traces[k] += dot(V.factor_weight(k, b), lambda);
  d.casimir_traces.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const RationalMatrix om = omega(V, k, l);
      Rational tr = 0;
      for (std::size_t b : idx) tr += om.at(b, b);
      d.casimir_traces[k][l] = d.casimir_traces[l][k] = tr;
    }
  d.gamma.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) d.gamma[k] += d.casimir_traces[k][l];
  return d;
}

long long isotypic_multiplicity(const WeightModule& V, const Vec& nu, const Vec& alpha,
                                long long k) {
  if (k < 0) return 0;
  const Rational h0 = dot(nu, alpha);
  // The piece L_{(nu+k*alpha, alpha)} meets V[nu] only when its highest
  // weight is at least |(nu, alpha)|.
  if (h0 + 2 * k < abs_value(h0)) return 0;
  Vec up = nu;
  for (long long s = 0; s < k; ++s) up = up + alpha;
  const long long dim_k = static_cast<long long>(V.weight_space(up).size());
  const long long dim_k1 = static_cast<long long>(V.weight_space(up + alpha).size());
  return dim_k - dim_k1;
}

std::vector<Rational> det_z_exponents(const WeightModule& V, const Vec& nu, const Vec& omega) {
  const std::vector<std::size_t> idx = block_indices(V, nu);
  std::vector<Rational> exps(V.factor_count(), Rational(0));
  for (std::size_t k = 0; k < V.factor_count(); ++k)
    for (std::size_t b : idx) exps[k] += dot(V.factor_weight(k, b), omega);
  return exps;
}

Rational det_ratio_scalar(const WeightModule& V, const RootSystem& rs, const Vec& nu, int i,
                          const Vec& lambda) {
  block_indices(V, nu);
  const Vec& omega_i = rs.dual_fundamental_weight(i);
  Rational ratio = 1;
  for (const Vec& alpha : rs.positive_roots()) {
    if (rs.form(omega_i, alpha) != 1) continue;
    for (long long k = 1;; ++k) {
      Vec up = nu;
      for (long long s = 0; s < k; ++s) up = up + alpha;
      if (V.weight_space(up).empty()) break;
      const long long d = isotypic_multiplicity(V, nu, alpha, k);
      if (d == 0) continue;
      Rational factor = 1;
      Vec step = nu;
      for (long long j = 1; j <= k; ++j) {
        step = step + alpha;
        const Rational num = dot(lambda, alpha) + dot(step, alpha) / 2;
        const Rational den = dot(lambda, alpha) - dot(step, alpha) / 2;
        if (den == 0) throw PoleError("det ratio: (lambda - (nu+j*alpha)/2, alpha) = 0");
        factor *= num / den;
      }
      for (long long s = 0; s < d; ++s) ratio *= factor;
    }
  }
  return ratio;
}

bool det_formula_holds(const WeightModule& V, const RootSystem& rs, const Vec& nu, int i,
                       const Vec& lambda, const Rational& kappa) {
  const std::vector<std::size_t> idx = block_indices(V, nu);
  const Vec& omega_i = rs.dual_fundamental_weight(i);
  const RationalMatrix B = bb_w(V, rs.w_bracket(i), lambda);
  if (B.restrict_to(idx).det() != det_ratio_scalar(V, rs, nu, i, lambda)) return false;

  // The z-exponents of det K_i must equal the Lambda_k increments of the
  // D-ratio: (Lambda_k(lambda + kappa*omega) - Lambda_k(lambda)) / kappa.
  const std::vector<Rational> exps = det_z_exponents(V, nu, omega_i);
  const DetData at_lambda = det_data(V, nu, lambda);
  const DetData at_shift = det_data(V, nu, lambda + kappa * omega_i);
  for (std::size_t k = 0; k < exps.size(); ++k)
    if ((at_shift.lambda_traces[k] - at_lambda.lambda_traces[k]) / kappa != exps[k]) return false;
  return true;
}

}  // namespace kzdyn
