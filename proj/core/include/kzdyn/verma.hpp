#ifndef KZDYN_VERMA_HPP
#define KZDYN_VERMA_HPP

#include "kzdyn/rational_matrix.hpp"

namespace kzdyn {

/// The operator A_{s_1, L_m}(lambda) on L_m for sl_2 and lambda = l*omega_1,
/// computed the slow way: build the intertwiner Phi^{v^m_k}: M_lambda ->
/// M_{lambda-nu} (x) L_m on a depth-truncated Verma module, apply it to the
/// singular vector F^{l+1} v_lambda / (l+1)!, and read off the coefficient
/// of the singular vector of M_{lambda-nu}.
///
/// Throws TruncationTooShallowError when depth < l + m + 1, and
/// NonGenericWeightError when lambda fails the genericity conditions
/// (a vanishing recursion denominator, or some w.lambda - w'.(lambda-nu)
/// landing in the weight set of L_m).
RationalMatrix verma_intertwiner_a(int m, long long l, std::size_t depth);

/// True iff verma_intertwiner_a(m, l, l+m+1) equals x * p(l; H, E, F) on
/// L_m, the closed form it is supposed to match.
bool sl2_verma_oracle_matches(int m, long long l);

}  // namespace kzdyn

#endif
