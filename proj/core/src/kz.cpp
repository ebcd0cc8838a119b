#include "kzdyn/kz.hpp"

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

void check_points(const std::vector<Rational>& z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j])
        throw CoincidingPointsError("kz: z_" + std::to_string(i + 1) + " = z_" +
                                    std::to_string(j + 1) + " = " + to_string(z[i]));
}

}  // namespace

RationalMatrix kz_matrix(const WeightModule& V, std::size_t j, const std::vector<Rational>& z,
                         const Vec& lambda) {
  if (z.size() != V.factor_count()) throw Error("kz_matrix: one point per tensor factor");
  check_points(z);
  RationalMatrix m = lambda_in_factor(V, j, lambda);
  for (std::size_t k = 0; k < z.size(); ++k)
    if (k != j) m = m + r_matrix(V, j, k, z[j] / z[k]);
  return m;
}

RationalMatrix kz_derivative(const WeightModule& V, std::size_t j, std::size_t i,
                             const std::vector<Rational>& z) {
  check_points(z);
  RationalMatrix m(V.dim(), V.dim());
  if (i != j) {
    const Rational u = z[j] / z[i];
    m = m + omega(V, j, i) * (u / ((u - 1) * (u - 1)));
  } else {
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (k == j) continue;
      const Rational u = z[j] / z[k];
      m = m - omega(V, j, k) * (u / ((u - 1) * (u - 1)));
    }
  }
  return m;
}

bool kz_flat(const WeightModule& V, std::size_t i, std::size_t j, const std::vector<Rational>& z,
             const Vec& lambda, const Rational& kappa) {
  const RationalMatrix lhs = (kz_derivative(V, j, i, z) - kz_derivative(V, i, j, z)) * kappa;
  const RationalMatrix rhs = commutator(kz_matrix(V, i, z, lambda), kz_matrix(V, j, z, lambda));
  return lhs == rhs;
}

}  // namespace kzdyn
