#ifndef KZDYN_DYNAMICS_HPP
#define KZDYN_DYNAMICS_HPP

#include <functional>

#include "kzdyn/affine_weyl.hpp"
#include "kzdyn/kz.hpp"
#include "kzdyn/puiseux.hpp"

namespace kzdyn {

/// A lambda-indexed family of z-dependent operators; the twisted Weyl and
/// translation actions below act on such families.
using OperatorFamily = std::function<PuiseuxMatrix(const Vec&)>;

/// Diagonal operator prod_k z_k^{sign * (mu^(k), omega)} on the tensor
/// module, exponents read off the factor weights.
PuiseuxMatrix z_weight_diagonal(const WeightModule& V, const Vec& omega, int sign = 1);

/// The difference-step operator K_i(z, lambda) =
/// prod_k z_k^{(omega_i^vee)^(k)} * BB_{w_[i], V}(lambda), i = 1..N-1,
/// as an exact Puiseux matrix; rs must be the A_{N-1} system.
PuiseuxMatrix dyn_operator_slN(const WeightModule& V, const RootSystem& rs, int i,
                               const Vec& lambda);

/// Some omega in P^vee with (omega, alpha) = -level, built by extended gcd
/// over the simple-root coefficients of alpha. The _alt variant returns a
/// second valid choice differing by a vector orthogonal to alpha whenever
/// the rank permits one (rank 1 has a unique choice).
Vec cocycle_shift_weight(const RootSystem& rs, const AffineRoot& root);
Vec cocycle_shift_weight_alt(const RootSystem& rs, const AffineRoot& root);

/// One affine R-matrix factor with an explicit shift weight omega:
/// prod z_k^{omega^(k)} * BB^alpha_V(lambda - kappa*omega) * prod z_k^{-omega^(k)}.
PuiseuxMatrix g_tilde_root_with_shift(const WeightModule& V, const AffineRoot& root,
                                      const Vec& omega, const Vec& lambda,
                                      const Rational& kappa);
/// Same with omega = cocycle_shift_weight(rs, root).
PuiseuxMatrix g_tilde_root(const WeightModule& V, const RootSystem& rs, const AffineRoot& root,
                           const Vec& lambda, const Rational& kappa);

/// True iff the factor for `root` is identical under the primary and the
/// alternative shift weight.
bool g_tilde_well_defined(const WeightModule& V, const RootSystem& rs, const AffineRoot& root,
                          const Vec& lambda, const Rational& kappa);

/// Cocycle element G~_el: ordered product of g_tilde_root factors along the
/// inversion sequence A~(el); G~_id = 1.
PuiseuxMatrix cocycle_value(const WeightModule& V, const RootSystem& rs,
                            const AffineWeylElement& el, const Vec& lambda,
                            const Rational& kappa);

/// Twisted action of el = (w, omega) on an operator family:
/// ({}^el f)(lambda) = X_w Z_omega f(w^{-1}(lambda) - kappa*omega)
/// Z_omega^{-1} X_w^{-1}, with X_w the group lift on the tensor module.
OperatorFamily twisted_action(const WeightModule& V, const AffineWeylElement& el,
                              OperatorFamily f, const Rational& kappa);

/// 1-cocycle property G~_{xy} = {}^{y^{-1}}G~_x * G~_y; requires
/// l(xy) = l(x) + l(y) (throws Error otherwise).
bool cocycle_identity_holds(const WeightModule& V, const RootSystem& rs,
                            const AffineWeylElement& x, const AffineWeylElement& y,
                            const Vec& lambda, const Rational& kappa);

/// KZ <-> dynamical compatibility in derivative-free form, evaluated at
/// z_k = t_k^N: M_j(z, lambda + kappa*omega_i^vee) K_i - K_i M_j(z, lambda)
/// = kappa (omega_i^vee)^(j) K_i.
bool kz_dyn_compat_holds(const WeightModule& V, const RootSystem& rs, int i, std::size_t j,
                         const std::vector<Rational>& t, const Vec& lambda,
                         const Rational& kappa);

/// Pairwise compatibility of the difference steps, compared directly as
/// Puiseux matrices: K_i(lambda + kappa*omega_j^vee) K_j(lambda) =
/// K_j(lambda + kappa*omega_i^vee) K_i(lambda).
bool dyn_dyn_compat_holds(const WeightModule& V, const RootSystem& rs, int i, int j,
                          const Vec& lambda, const Rational& kappa);

/// z-conjugation invariance of the KZ matrix for a minuscule i, evaluated
/// at z_k = t_k^N: Z sum_{l != j} w_[i]^{-1}(r)^{(j,l)} Z^{-1} =
/// sum_{l != j} r^{(j,l)} with Z = prod z_k^{(omega_i^vee)^(k)}.
bool pi_invariance_holds(const WeightModule& V, const RootSystem& rs, int i, std::size_t j,
                         const std::vector<Rational>& t);

/// BB_{w,V}(lambda) (sum_k r^{(j,k)} + lambda^{(j)}) =
/// (sum_k w^{-1}(r)^{(j,k)} + lambda^{(j)}) BB_{w,V}(lambda).
bool kz_conjugation_holds(const WeightModule& V, const WeylElement& w, std::size_t j,
                      const std::vector<Rational>& z, const Vec& lambda);

/// Residue form of the same identity: [BB_{w,V}(lambda), Omega^{(j,k)}] = 0.
bool bb_commutes_with_casimir(const WeightModule& V, const WeylElement& w, const Vec& lambda,
                              std::size_t j, std::size_t k);

/// Inverse of BB^alpha_V(lambda) without matrix inversion, via
/// BB^alpha BB^{-alpha} = (lambda - nu/2, alpha)/(lambda + nu/2, alpha)
/// on V[nu].
RationalMatrix bb_alpha_inverse(const WeightModule& V, const Vec& alpha, const Vec& lambda);

/// The delta_i-step operator written with explicit BB factors
/// (i = 1..N, delta_i = omega_i^vee - omega_{i-1}^vee, omega_0 = omega_N = 0):
/// inverse factors for roots e_k - e_i (k < i) at lambda + kappa*delta_i,
/// the z-prefactor for delta_i, then factors e_i - e_l (l > i) at lambda.
PuiseuxMatrix delta_step_explicit(const WeightModule& V, const RootSystem& rs, int i,
                                  const Vec& lambda, const Rational& kappa);

/// The same operator implied by the K-system:
/// K_{i-1}(lambda + kappa*delta_i)^{-1} K_i(lambda).
PuiseuxMatrix delta_step_implied(const WeightModule& V, const RootSystem& rs, int i,
                                 const Vec& lambda, const Rational& kappa);

bool equivalent_form_holds(const WeightModule& V, const RootSystem& rs, int i, const Vec& lambda,
                           const Rational& kappa);

/// BB_{w_[i],V}(lambda) is a product of all BB^alpha_V(lambda) with
/// alpha > 0 and (omega_i^vee, alpha) > 0: checks the inversion multiset
/// and recomputes the product along a second reduced word.
bool product_over_positive_roots_holds(const WeightModule& V, const RootSystem& rs, int i,
                                       const Vec& lambda);

}  // namespace kzdyn

#endif
