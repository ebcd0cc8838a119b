#ifndef KZDYN_AFFINE_WEYL_HPP
#define KZDYN_AFFINE_WEYL_HPP

#include <vector>

#include "kzdyn/root_system.hpp"

namespace kzdyn {

/// Affine root [alpha, j]: a finite root alpha at level j.
struct AffineRoot {
  Vec alpha;
  long long level = 0;

  bool operator==(const AffineRoot& o) const { return level == o.level && alpha == o.alpha; }
  bool operator<(const AffineRoot& o) const {
    return level != o.level ? level < o.level : alpha < o.alpha;
  }
};

struct AffineWord {
  int pi_index = 0;              // 0 means the identity element of Pi
  std::vector<int> letters;      // w = pi_i s_{j_l} ... s_{j_1}, letters = [j_1,...,j_l]
};

/// Element of the extended affine Weyl group W^b = W x P^vee, stored as a
/// finite part w and a translation part omega; the action on [z, xi] is
/// [w(z), xi - (z, omega)].
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(const RootSystem* rs, WeylElement w, Vec omega);

  static AffineWeylElement identity(const RootSystem& rs);
  static AffineWeylElement translation(const RootSystem& rs, const Vec& omega);
  /// s_l for l = 0..rank; s_0 is the reflection in [-theta, 1].
  static AffineWeylElement simple(const RootSystem& rs, int l);
  /// pi_i = t_{omega_i^vee} w_{[i]}^{-1} for i in O*; pi_0 is the identity.
  static AffineWeylElement pi(const RootSystem& rs, int i);

  const RootSystem& root_system() const { return *rs_; }
  const WeylElement& finite_part() const { return w_; }
  const Vec& translation_part() const { return omega_; }

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  bool operator==(const AffineWeylElement& o) const;
  bool is_identity() const;

  AffineRoot apply(const AffineRoot& root) const;

  /// Affine simple root alpha_l, l = 0..rank.
  AffineRoot simple_affine_root(int l) const;
  bool is_positive(const AffineRoot& root) const;

  /// Extended length: #{affine positive roots mapped to negative ones}.
  long long length() const;

  /// Reduced word via greedy descent; the leftover length-zero element is
  /// matched against Pi.
  AffineWord reduced_word() const;

  /// Ordered inversion sequence alpha~^1 = alpha_{j_1},
  /// alpha~^m = s_{j_1}...s_{j_{m-1}}(alpha_{j_m}); its unordered multiset
  /// is the set A~(w).
  std::vector<AffineRoot> a_tilde_sequence() const;
  std::vector<AffineRoot> a_tilde_multiset() const;  // sorted

 private:
  const RootSystem* rs_ = nullptr;
  WeylElement w_;
  Vec omega_;
};

/// The permutation l -> k of {0..rank} with pi_i(alpha_l) = alpha_k.
/// Throws NotInOStarError if i is not minuscule.
std::vector<int> pi_action_on_simple(const RootSystem& rs, int i);

/// The multiset of Eq-useful form {[alpha, j] : alpha > 0, (omega_i^vee, alpha) > j >= 0}.
std::vector<AffineRoot> translation_inversion_set(const RootSystem& rs, int i);

}  // namespace kzdyn

#endif
