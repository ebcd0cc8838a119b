#ifndef KZDYN_OPERATORS_HPP
#define KZDYN_OPERATORS_HPP

#include "kzdyn/weight_module.hpp"

namespace kzdyn {

/// A rational evaluation point: the Cartan argument lambda (trace-zero
/// vector in R^N) and the difference step kappa.
struct EvalContext {
  Vec lambda;
  Rational kappa = 1;
};

/// p(t; H,E,F) = sum_k F^k E^k (1/k!) prod_{j=0}^{k-1} (t-H-j)^{-1} as an
/// exact matrix; H must be diagonal. The series for each column stops as
/// soon as E^k kills it; a vanishing denominator on a surviving column
/// raises PoleError.
RationalMatrix p_series(const Rational& t, const RationalMatrix& H, const RationalMatrix& E,
                        const RationalMatrix& F);

/// Operator with eigenargument per weight: on V[nu] it acts as
/// p((lambda + nu/2, alpha^vee) - 1; H_alpha, E_alpha, F_alpha).
/// alpha may be any (positive or negative) root of sl_N.
RationalMatrix bb_alpha(const WeightModule& V, const Vec& alpha, const Vec& lambda);

/// Product of bb_alpha factors along the inversion sequence of w, all at
/// the same lambda (the leftmost factor belongs to the last inversion).
RationalMatrix bb_w(const WeightModule& V, const WeylElement& w, const Vec& lambda);

/// Cartan part of the Casimir acting in factors (i,j):
/// diagonal with entries (mu^(i), mu^(j))/2.
RationalMatrix omega0(const WeightModule& V, std::size_t i, std::size_t j);
/// Omega^+ = Omega^0 + sum_{a<b} e_{ab}^(i) e_{ba}^(j); Omega^- mirrors it.
RationalMatrix omega_plus(const WeightModule& V, std::size_t i, std::size_t j);
RationalMatrix omega_minus(const WeightModule& V, std::size_t i, std::size_t j);
RationalMatrix omega(const WeightModule& V, std::size_t i, std::size_t j);

/// lambda acting in factor j of the tensor module.
RationalMatrix lambda_in_factor(const WeightModule& V, std::size_t j, const Vec& lambda);

/// Trigonometric R-matrix r(z) = (Omega^+ z + Omega^-)/(z - 1) in factors
/// (i,j); throws PoleAtOneError at z = 1.
RationalMatrix r_matrix(const WeightModule& V, std::size_t i, std::size_t j, const Rational& z);

}  // namespace kzdyn

#endif
