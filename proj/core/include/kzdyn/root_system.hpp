#ifndef KZDYN_ROOT_SYSTEM_HPP
#define KZDYN_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "kzdyn/rational_matrix.hpp"

namespace kzdyn {

class RootSystem;

/// Element of the finite Weyl group, stored as its exact orthogonal action
/// on the ambient Cartan space.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const RootSystem* rs, RationalMatrix action);

  const RationalMatrix& matrix() const { return mat_; }
  const RootSystem& root_system() const { return *rs_; }

  Vec apply(const Vec& v) const { return mat_.apply(v); }
  WeylElement operator*(const WeylElement& o) const;  // (w1*w2)(v) = w1(w2(v))
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool is_identity() const { return mat_.is_identity(); }

  /// l(w) = #{alpha in Sigma_+ : w(alpha) in Sigma_-}.
  int length() const;

  /// Reduced word [i_1,...,i_k] with w = s_{i_k} ... s_{i_1} (i_1 applied
  /// first), produced by greedy descent on the smallest simple index.
  std::vector<int> reduced_word() const;

  /// The ordered inversion sequence alpha^1 = alpha_{i_1},
  /// alpha^m = s_{i_1}...s_{i_{m-1}}(alpha_{i_m}) along reduced_word().
  std::vector<Vec> inversion_sequence() const;

 private:
  const RootSystem* rs_ = nullptr;
  RationalMatrix mat_;
};

/// Cartan/root data for a simple type A-G: simple roots in a standard
/// orthogonal realization, the invariant form normalized so long roots have
/// squared length 2, positive roots, (dual) fundamental weights, rho.
class RootSystem {
 public:
  RootSystem(char type_letter, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  /// Invariant bilinear form (a scaled dot product).
  Rational form(const Vec& a, const Vec& b) const { return scale_ * dot(a, b); }
  Vec coroot(const Vec& root) const;  // 2 alpha / (alpha, alpha)

  const Vec& simple_root(int i) const { return simple_roots_.at(i - 1); }     // i = 1..rank
  const Vec& fundamental_weight(int i) const { return fund_weights_.at(i - 1); }
  const Vec& dual_fundamental_weight(int i) const { return dual_fund_weights_.at(i - 1); }
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  const Vec& highest_root() const { return theta_; }
  const Vec& rho() const { return rho_; }

  bool is_root(const Vec& v) const;
  bool is_positive_root(const Vec& v) const;

  /// Integer coefficients of a root in the simple-root basis.
  std::vector<Rational> simple_coefficients(const Vec& v) const;

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;  // i = 1..rank
  WeylElement reflection(const Vec& root) const;
  WeylElement from_word(const std::vector<int>& word) const;  // w = s_{i_k}...s_{i_1}

  WeylElement longest_element() const;
  /// Longest element of the parabolic generated by the s_j fixing omega_i^vee
  /// (i.e. all j != i).
  WeylElement longest_element_fixing(int i) const;

  /// (omega_i^vee, alpha) in {0,1} for every positive root alpha.
  bool is_minuscule(int i) const;
  /// Indices of the minuscule dual fundamental weights (the set O*).
  std::vector<int> o_star() const;

  /// w_{[i]} = w_0 w_0^i; requires i minuscule.
  WeylElement w_bracket(int i) const;

  /// w . lambda = w(lambda + rho) - rho.
  Vec dot_action(const WeylElement& w, const Vec& lambda) const;

 private:
  void build();

  char type_;
  int rank_;
  std::size_t ambient_dim_ = 0;
  Rational scale_ = 1;
  std::vector<Vec> simple_roots_;
  std::vector<Vec> all_roots_;
  std::vector<Vec> positive_roots_;
  std::vector<Vec> fund_weights_;
  std::vector<Vec> dual_fund_weights_;
  Vec theta_;
  Vec rho_;
  RationalMatrix gram_inv_;  // inverse Gram matrix of the simple roots
};

}  // namespace kzdyn

#endif
