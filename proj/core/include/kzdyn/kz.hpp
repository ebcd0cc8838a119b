#ifndef KZDYN_KZ_HPP
#define KZDYN_KZ_HPP

#include "kzdyn/operators.hpp"

namespace kzdyn {

/// Coefficient matrix of the j-th trigonometric KZ operator on an n-factor
/// tensor module: M_j = sum_{k != j} r(z_j/z_k)^{(j,k)} + lambda^{(j)}.
/// z holds the n evaluation points; throws CoincidingPointsError when two
/// of them coincide (and PoleAtOneError is subsumed by that check).
RationalMatrix kz_matrix(const WeightModule& V, std::size_t j, const std::vector<Rational>& z,
                         const Vec& lambda);

/// z_i d/dz_i of M_j in closed form: with u = z_j/z_i the cross term is
/// u Omega^{(j,i)} / (u-1)^2 for i != j, and the diagonal term is
/// -sum_{k != j} u Omega^{(j,k)} / (u-1)^2 with u = z_j/z_k.
RationalMatrix kz_derivative(const WeightModule& V, std::size_t j, std::size_t i,
                             const std::vector<Rational>& z);

/// Flatness of the connection kappa z_i d_i - M_i: checks
/// kappa (z_i d_i M_j - z_j d_j M_i) = [M_i, M_j] exactly.
bool kz_flat(const WeightModule& V, std::size_t i, std::size_t j, const std::vector<Rational>& z,
             const Vec& lambda, const Rational& kappa);

}  // namespace kzdyn

#endif
