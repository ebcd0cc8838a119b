#ifndef KZDYN_DETERMINANT_HPP
#define KZDYN_DETERMINANT_HPP

#include "kzdyn/dynamics.hpp"

namespace kzdyn {

/// Trace data of the weight block V[nu] entering the determinant formula.
struct DetData {
  std::vector<Rational> lambda_traces;  // Lambda_k(lambda) = tr_{V[nu]} lambda^{(k)}
  std::vector<std::vector<Rational>> casimir_traces;  // eps_{k,l} = tr_{V[nu]} Omega^{(k,l)}
  std::vector<Rational> gamma;                        // gamma_k = sum_{l != k} eps_{k,l}
};

DetData det_data(const WeightModule& V, const Vec& nu, const Vec& lambda);

/// Multiplicity d^alpha_k of the irreducible sl_2 piece with highest weight
/// (nu + k*alpha, alpha^vee) inside the sl_2-submodule generated by V[nu],
/// computed from weight-space dimensions along the alpha-string.
long long isotypic_multiplicity(const WeightModule& V, const Vec& nu, const Vec& alpha,
                                long long k);

/// z_k-exponent of det K_i on the block V[nu]: tr_{V[nu]} (omega_i^vee)^{(k)}.
std::vector<Rational> det_z_exponents(const WeightModule& V, const Vec& nu, const Vec& omega);

/// The lambda-dependent part of the ratio D_{V[nu]}(lambda + kappa*omega_i^vee)
/// / D_{V[nu]}(lambda): the Gamma factors telescope to
/// prod_{alpha > 0, (omega,alpha)=1} prod_k [prod_{j=1}^k
/// (lambda + (nu+j*alpha)/2, alpha) / (lambda - (nu+j*alpha)/2, alpha)]^{d^alpha_k}.
Rational det_ratio_scalar(const WeightModule& V, const RootSystem& rs, const Vec& nu, int i,
                          const Vec& lambda);

/// det K_i restricted to V[nu] equals prod_k z_k^{tr (omega_i^vee)^{(k)}}
/// times det_ratio_scalar: checks the scalar part exactly (and that the
/// z-part matches the Lambda_k increments).
bool det_formula_holds(const WeightModule& V, const RootSystem& rs, const Vec& nu, int i,
                       const Vec& lambda, const Rational& kappa);

}  // namespace kzdyn

#endif
