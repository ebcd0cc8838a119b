#ifndef KZDYN_WEIGHT_MODULE_HPP
#define KZDYN_WEIGHT_MODULE_HPP

#include <string>
#include <vector>

#include "kzdyn/rational_matrix.hpp"
#include "kzdyn/root_system.hpp"

namespace kzdyn {

/// Finite-dimensional weight-graded gl_N/sl_N module with exact action
/// matrices for every generator e_{i,j}. Weights are stored as trace-zero
/// vectors in R^N, matching the ambient space of the A_{N-1} root system.
class WeightModule {
 public:
  static WeightModule vector_rep(int N);
  /// k-th exterior power of the vector representation (highest weight
  /// omega_k), realized on sorted k-subsets with the derivation action.
  static WeightModule wedge_rep(int N, int k);
  /// The (m+1)-dimensional irreducible sl_2 module L_m in the basis with
  /// H v_k = (m-2k) v_k, F v_k = (k+1) v_{k+1}, E v_k = (m-k+1) v_{k-1}.
  static WeightModule sl2_module(int m);
  static WeightModule tensor(const std::vector<WeightModule>& factors);

  int N() const { return N_; }
  std::size_t dim() const { return dim_; }
  const std::string& label(std::size_t b) const { return labels_[b]; }
  const Vec& weight(std::size_t b) const { return weights_[b]; }
  const std::vector<Vec>& weights() const { return weights_; }

  /// Action matrix of e_{i,j}, 1-based indices; e_{i,i} is diagonal.
  const RationalMatrix& e(int i, int j) const { return eij_[(i - 1) * N_ + (j - 1)]; }

  /// Action of the Cartan element with coordinates h (diagonal matrix of
  /// pairings (weight, h)); exact for trace-zero h.
  RationalMatrix cartan(const Vec& h) const;

  /// Triple (E_alpha, F_alpha, H_alpha) data for a root alpha = eps_i - eps_j.
  RationalMatrix e_root(const Vec& alpha) const;
  RationalMatrix f_root(const Vec& alpha) const;
  RationalMatrix h_root(const Vec& alpha) const;

  /// Basis indices of the weight space V[mu] (mu trace-zero).
  std::vector<std::size_t> weight_space(const Vec& mu) const;
  /// Set of distinct weights of V.
  std::vector<Vec> weight_support() const;

  std::size_t factor_count() const { return factor_dims_.empty() ? 1 : factor_dims_.size(); }
  std::size_t factor_dim(std::size_t k) const {
    return factor_dims_.empty() ? dim_ : factor_dims_[k];
  }
  /// The k-th tensor factor as a module (the module itself if not a tensor).
  const WeightModule& factor(std::size_t k) const {
    return factors_.empty() ? *this : factors_[k];
  }
  /// Index of basis vector b within factor k (row-major tensor indexing).
  std::size_t factor_index(std::size_t k, std::size_t b) const;
  /// Weight carried by basis vector b in factor k.
  const Vec& factor_weight(std::size_t k, std::size_t b) const;
  /// Embed an operator on factor k as id x ... x m x ... x id.
  RationalMatrix op_in_factor(std::size_t k, const RationalMatrix& m) const;

  /// Lift x_w = x_{i_k}...x_{i_1} with x_i = exp(-E_i) exp(F_i) exp(-E_i).
  RationalMatrix group_lift(const WeylElement& w) const;
  /// x_w m x_w^{-1}; realizes the Weyl action on weight-zero operators.
  RationalMatrix weyl_conjugate(const WeylElement& w, const RationalMatrix& m) const;

  /// Short text form, e.g. "sl3:1*2" for C^3 (x) Wedge^2 C^3.
  const std::string& descriptor() const { return desc_; }

 private:
  WeightModule() = default;

  int N_ = 0;
  std::size_t dim_ = 0;
  std::string desc_;
  std::vector<std::string> labels_;
  std::vector<Vec> weights_;
  std::vector<RationalMatrix> eij_;  // N*N matrices, row-major (i,j)
  std::vector<WeightModule> factors_;
  std::vector<std::size_t> factor_dims_;
};

}  // namespace kzdyn

#endif
