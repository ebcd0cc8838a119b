#include "kzdyn/affine_weyl.hpp"

#include <algorithm>

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

long long to_ll(const Rational& q, const char* what) {
  if (!is_integer(q)) throw Error(std::string(what) + ": non-integer pairing " + q.str());
  return static_cast<long long>(numerator_of(q));
}

}  // namespace

AffineWeylElement::AffineWeylElement(const RootSystem* rs, WeylElement w, Vec omega)
    : rs_(rs), w_(std::move(w)), omega_(std::move(omega)) {}

AffineWeylElement AffineWeylElement::identity(const RootSystem& rs) {
  return AffineWeylElement(&rs, rs.identity(), Vec(rs.ambient_dim(), Rational(0)));
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& rs, const Vec& omega) {
  return AffineWeylElement(&rs, rs.identity(), omega);
}

AffineWeylElement AffineWeylElement::simple(const RootSystem& rs, int l) {
  if (l == 0) {
    const Vec& theta = rs.highest_root();
    Vec minus_theta_vee = Rational(-1) * rs.coroot(theta);
    return AffineWeylElement(&rs, rs.reflection(theta), minus_theta_vee);
  }
  return AffineWeylElement(&rs, rs.simple_reflection(l), Vec(rs.ambient_dim(), Rational(0)));
}

AffineWeylElement AffineWeylElement::pi(const RootSystem& rs, int i) {
  if (i == 0) return identity(rs);
  WeylElement wb = rs.w_bracket(i);  // throws NotMinusculeError when i is not in O*
  return AffineWeylElement(&rs, wb.inverse(), wb.apply(rs.dual_fundamental_weight(i)));
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  return AffineWeylElement(rs_, w_ * o.w_, o.omega_ + o.w_.inverse().apply(omega_));
}

AffineWeylElement AffineWeylElement::inverse() const {
  return AffineWeylElement(rs_, w_.inverse(), Rational(-1) * w_.apply(omega_));
}

bool AffineWeylElement::operator==(const AffineWeylElement& o) const {
  return w_ == o.w_ && omega_ == o.omega_;
}

bool AffineWeylElement::is_identity() const { return w_.is_identity() && is_zero_vec(omega_); }

AffineRoot AffineWeylElement::apply(const AffineRoot& root) const {
  return AffineRoot{w_.apply(root.alpha),
                    root.level - to_ll(rs_->form(root.alpha, omega_), "affine action")};
}

AffineRoot AffineWeylElement::simple_affine_root(int l) const {
  if (l == 0) return AffineRoot{Rational(-1) * rs_->highest_root(), 1};
  return AffineRoot{rs_->simple_root(l), 0};
}

bool AffineWeylElement::is_positive(const AffineRoot& root) const {
  if (root.level != 0) return root.level > 0;
  return rs_->is_positive_root(root.alpha);
}

long long AffineWeylElement::length() const {
  long long l = 0;
  for (const Vec& a : rs_->positive_roots()) {
    const long long p = to_ll(rs_->form(a, omega_), "length");
    // [a, j], j >= 0: level goes negative for 0 <= j < p, and j = p can
    // still land in [w(a), 0] with w(a) negative.
    l += std::max(0LL, p);
    if (p >= 0 && !rs_->is_positive_root(w_.apply(a))) ++l;
    // [-a, j], j >= 1: with q = (-a, omega), the level goes negative for
    // 1 <= j < q, and j = q can land in [w(-a), 0] with w(-a) negative.
    const long long q = -p;
    l += std::max(0LL, q - 1);
    if (q >= 1 && !rs_->is_positive_root(w_.apply(Rational(-1) * a))) ++l;
  }
  return l;
}

AffineWord AffineWeylElement::reduced_word() const {
  AffineWord out;
  AffineWeylElement g = *this;
  long long len = g.length();
  while (len > 0) {
    int descent = -1;
    for (int l = 0; l <= rs_->rank(); ++l) {
      if (!is_positive(g.apply(simple_affine_root(l)))) {
        descent = l;
        break;
      }
    }
    if (descent < 0) throw Error("affine reduced_word: no descent at positive length");
    out.letters.push_back(descent);
    g = g * simple(*rs_, descent);
    --len;
  }
  // The length-zero leftover is an element of Pi.
  if (g.is_identity()) {
    out.pi_index = 0;
  } else {
    out.pi_index = -1;
    for (int i : rs_->o_star()) {
      if (g == pi(*rs_, i)) {
        out.pi_index = i;
        break;
      }
    }
    if (out.pi_index < 0) throw Error("affine reduced_word: length-zero part is not in Pi");
  }
  return out;
}

std::vector<AffineRoot> AffineWeylElement::a_tilde_sequence() const {
  const AffineWord word = reduced_word();
  std::vector<AffineRoot> seq;
  AffineWeylElement prefix = identity(*rs_);  // s_{j_1} ... s_{j_{m-1}}
  for (std::size_t m = 0; m < word.letters.size(); ++m) {
    seq.push_back(prefix.apply(simple_affine_root(word.letters[m])));
    prefix = prefix * simple(*rs_, word.letters[m]);
  }
  return seq;
}

std::vector<AffineRoot> AffineWeylElement::a_tilde_multiset() const {
  std::vector<AffineRoot> seq = a_tilde_sequence();
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<int> pi_action_on_simple(const RootSystem& rs, int i) {
  if (i != 0 && !rs.is_minuscule(i))
    throw NotInOStarError("pi_action_on_simple: index " + std::to_string(i) + " is not in O*");
  AffineWeylElement p = AffineWeylElement::pi(rs, i);
  std::vector<int> perm(rs.rank() + 1, -1);
  for (int l = 0; l <= rs.rank(); ++l) {
    AffineRoot img = p.apply(p.simple_affine_root(l));
    int k = -1;
    for (int m = 0; m <= rs.rank(); ++m)
      if (img == p.simple_affine_root(m)) {
        k = m;
        break;
      }
    if (k < 0) throw Error("pi_action_on_simple: image of a simple root is not simple");
    perm[l] = k;
  }
  return perm;
}

std::vector<AffineRoot> translation_inversion_set(const RootSystem& rs, int i) {
  std::vector<AffineRoot> out;
  const Vec& wv = rs.dual_fundamental_weight(i);
  for (const Vec& a : rs.positive_roots()) {
    Rational p = rs.form(wv, a);
    if (!is_integer(p)) throw Error("translation_inversion_set: non-integer pairing");
    const long long n = static_cast<long long>(numerator_of(p));
    for (long long j = 0; j < n; ++j) out.push_back(AffineRoot{a, j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kzdyn
