#ifndef KZDYN_FUSION_HPP
#define KZDYN_FUSION_HPP

#include "kzdyn/operators.hpp"

namespace kzdyn {

/// The matrix of J(mu - rho + (h^(1)+h^(2))/2) on W (x) V: the unipotent
/// solution K of K (mu^(2) + Omega^0) = (mu^(2) + Omega^-) K, solved
/// blockwise per total weight in decreasing first-factor-weight order.
/// Throws ResonantLambdaError when a solve denominator vanishes.
RationalMatrix fusion_shifted(const WeightModule& WV, const Vec& mu);

/// Fusion matrix J_{WV}(lambda) on the tensor module WV = W (x) V: on the
/// total-weight-chi block it equals fusion_shifted at mu = lambda + rho_N
/// - chi/2, where rho_N is the trace-zero half-sum of positive sl_N roots.
RationalMatrix fusion_J(const WeightModule& WV, const Vec& lambda);

/// True iff J - 1 strictly lowers the first-factor weight (and raises the
/// second) in the root-lattice order.
bool is_unipotent_lower_triangular(const WeightModule& WV, const RationalMatrix& J);

/// Half-sum of positive roots of sl_N as a trace-zero vector in R^N.
Vec rho_slN(int N);

/// The operator BB_{w,W}(lambda - h^(2)/2) (x) BB_{w,V}(lambda + h^(1)/2)
/// on W (x) V: on the factor-weight-(tau, sigma) block it acts as
/// BB_{w,W}(lambda - sigma/2) (x) BB_{w,V}(lambda + tau/2).
RationalMatrix bb_bishifted(const WeightModule& WV, const WeylElement& w, const Vec& lambda);

/// BB_{w, W(x)V}(lambda) = x_w^{-1} J(w(lambda) shifted) x_w *
/// bb_bishifted * J(lambda shifted)^{-1}, exactly.
bool tensor_factorization_holds(const WeightModule& WV, const WeylElement& w, const Vec& lambda);

/// Omega BB = BB Omega and (w^{-1}(Omega^-) + lambda^(2)) BB =
/// BB (Omega^- + lambda^(2)) on a two-factor module.
bool casimir_exchange_holds(const WeightModule& WV, const WeylElement& w, const Vec& lambda);

}  // namespace kzdyn

#endif
