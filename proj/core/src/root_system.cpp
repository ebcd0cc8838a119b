#include "kzdyn/root_system.hpp"

#include <algorithm>
#include <set>

#include "kzdyn/errors.hpp"

namespace kzdyn {

WeylElement::WeylElement(const RootSystem* rs, RationalMatrix action)
    : rs_(rs), mat_(std::move(action)) {}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(rs_, mat_ * o.mat_);
}

WeylElement WeylElement::inverse() const { return WeylElement(rs_, mat_.inverse()); }

int WeylElement::length() const {
  int l = 0;
  for (const Vec& a : rs_->positive_roots())
    if (!rs_->is_positive_root(apply(a))) ++l;
  return l;
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> word;
  WeylElement w = *this;
  while (!w.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (!rs_->is_positive_root(w.apply(rs_->simple_root(i)))) {
        descent = i;
        break;
      }
    }
    if (descent == 0) throw Error("reduced_word: no descent found for non-identity element");
    word.push_back(descent);
    w = w * rs_->simple_reflection(descent);
  }
  return word;  // w = s_{word[k-1]} ... s_{word[0]}
}

std::vector<Vec> WeylElement::inversion_sequence() const {
  const std::vector<int> word = reduced_word();
  std::vector<Vec> seq;
  WeylElement prefix = rs_->identity();  // s_{i_1}...s_{i_{m-1}}
  for (std::size_t m = 0; m < word.size(); ++m) {
    seq.push_back(prefix.apply(rs_->simple_root(word[m])));
    prefix = prefix * rs_->simple_reflection(word[m]);
  }
  return seq;
}

RootSystem::RootSystem(char type_letter, int rank) : type_(type_letter), rank_(rank) { build(); }

namespace {

Vec unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  Vec v(dim, Rational(0));
  v[i] = c;
  return v;
}

}  // namespace

void RootSystem::build() {
  const int r = rank_;
  switch (type_) {
    case 'A': {
      if (r < 1) throw InvalidCartanTypeError("A requires rank >= 1");
      ambient_dim_ = r + 1;
      for (int i = 0; i < r; ++i) {
        Vec a(ambient_dim_, Rational(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple_roots_.push_back(a);
      }
      scale_ = 1;
      break;
    }
    case 'B': {
      if (r < 2) throw InvalidCartanTypeError("B requires rank >= 2");
      ambient_dim_ = r;
      for (int i = 0; i + 1 < r; ++i) {
        Vec a(ambient_dim_, Rational(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple_roots_.push_back(a);
      }
      simple_roots_.push_back(unit(ambient_dim_, r - 1));
      scale_ = 1;
      break;
    }
    case 'C': {
      if (r < 2) throw InvalidCartanTypeError("C requires rank >= 2");
      ambient_dim_ = r;
      for (int i = 0; i + 1 < r; ++i) {
        Vec a(ambient_dim_, Rational(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple_roots_.push_back(a);
      }
      simple_roots_.push_back(unit(ambient_dim_, r - 1, 2));
      scale_ = Rational(1, 2);
      break;
    }
    case 'D': {
      if (r < 3) throw InvalidCartanTypeError("D requires rank >= 3");
      ambient_dim_ = r;
      for (int i = 0; i + 1 < r; ++i) {
        Vec a(ambient_dim_, Rational(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple_roots_.push_back(a);
      }
      Vec a(ambient_dim_, Rational(0));
      a[r - 2] = 1;
      a[r - 1] = 1;
      simple_roots_.push_back(a);
      scale_ = 1;
      break;
    }
    case 'E': {
      if (r < 6 || r > 8) throw InvalidCartanTypeError("E requires rank 6..8");
      ambient_dim_ = 8;
      // Bourbaki numbering inside E8.
      Vec a1(8, Rational(1, 2));
      for (int j = 1; j <= 6; ++j) a1[j] = Rational(-1, 2);
      simple_roots_.push_back(a1);
      Vec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      simple_roots_.push_back(a2);
      for (int i = 3; i <= r; ++i) {
        Vec a(8, Rational(0));
        a[i - 3] = -1;
        a[i - 2] = 1;
        simple_roots_.push_back(a);
      }
      scale_ = 1;
      break;
    }
    case 'F': {
      if (r != 4) throw InvalidCartanTypeError("F requires rank 4");
      ambient_dim_ = 4;
      simple_roots_ = {
          {Rational(0), Rational(1), Rational(-1), Rational(0)},
          {Rational(0), Rational(0), Rational(1), Rational(-1)},
          {Rational(0), Rational(0), Rational(0), Rational(1)},
          {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)},
      };
      scale_ = 1;
      break;
    }
    case 'G': {
      if (r != 2) throw InvalidCartanTypeError("G requires rank 2");
      ambient_dim_ = 3;
      simple_roots_ = {
          {Rational(1), Rational(-1), Rational(0)},
          {Rational(-2), Rational(1), Rational(1)},
      };
      scale_ = Rational(1, 3);
      break;
    }
    default:
      throw InvalidCartanTypeError(std::string("unknown type ") + type_);
  }

  // Gram matrix of the simple roots and its inverse.
  RationalMatrix gram(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram.at(i, j) = form(simple_roots_[i], simple_roots_[j]);
  gram_inv_ = gram.inverse();

  // All roots: closure of the simple roots under simple reflections.
  std::set<Vec> roots(simple_roots_.begin(), simple_roots_.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current(roots.begin(), roots.end());
    for (const Vec& v : current)
      for (int i = 1; i <= rank_; ++i) {
        const Vec& a = simple_roots_[i - 1];
        Vec image = v - form(coroot(a), v) * a;
        if (roots.insert(image).second) grew = true;
      }
  }
  all_roots_.assign(roots.begin(), roots.end());
  for (const Vec& v : all_roots_) {
    auto c = simple_coefficients(v);
    bool pos = true;
    for (const auto& x : c)
      if (x < 0) pos = false;
    if (pos) positive_roots_.push_back(v);
  }

  // Highest root: coefficientwise maximal among positive roots.
  for (const Vec& v : positive_roots_) {
    auto cv = simple_coefficients(v);
    bool maximal = true;
    for (const Vec& u : positive_roots_) {
      auto cu = simple_coefficients(u);
      for (int i = 0; i < rank_; ++i)
        if (cu[i] > cv[i]) {
          maximal = false;
          break;
        }
      if (!maximal) break;
    }
    if (maximal) {
      theta_ = v;
      break;
    }
  }
  if (theta_.empty()) throw Error("root system has no maximal root");

  // omega_i: (omega_i, alpha_j^vee) = delta_ij; omega_i^vee: (omega_i^vee, alpha_j) = delta_ij.
  RationalMatrix cart(rank_, rank_);  // (alpha_j, alpha_k^vee)
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) cart.at(j, k) = form(simple_roots_[j], coroot(simple_roots_[k]));
  RationalMatrix cart_inv = cart.inverse();
  for (int i = 0; i < rank_; ++i) {
    Vec wi(ambient_dim_, Rational(0));
    Vec wvi(ambient_dim_, Rational(0));
    for (int j = 0; j < rank_; ++j) {
      // omega_i = sum_j (cart^{-1})_{ij} alpha_j  since sum_j c_j (alpha_j, alpha_k^vee) = delta_ik
      wi = wi + cart_inv.at(i, j) * simple_roots_[j];
      wvi = wvi + gram_inv_.at(i, j) * simple_roots_[j];
    }
    fund_weights_.push_back(wi);
    dual_fund_weights_.push_back(wvi);
  }

  rho_ = Vec(ambient_dim_, Rational(0));
  for (int i = 0; i < rank_; ++i) rho_ = rho_ + fund_weights_[i];
}

Vec RootSystem::coroot(const Vec& root) const {
  Rational len2 = form(root, root);
  return Rational(2) / len2 * root;
}

bool RootSystem::is_root(const Vec& v) const {
  return std::find(all_roots_.begin(), all_roots_.end(), v) != all_roots_.end();
}

bool RootSystem::is_positive_root(const Vec& v) const {
  return std::find(positive_roots_.begin(), positive_roots_.end(), v) != positive_roots_.end();
}

std::vector<Rational> RootSystem::simple_coefficients(const Vec& v) const {
  // c = Gram^{-1} (alpha_j, v), valid for v in the span of the simple roots.
  std::vector<Rational> rhs(rank_);
  for (int j = 0; j < rank_; ++j) rhs[j] = form(simple_roots_[j], v);
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += gram_inv_.at(i, j) * rhs[j];
  return c;
}

WeylElement RootSystem::identity() const {
  return WeylElement(this, RationalMatrix::identity(ambient_dim_));
}

WeylElement RootSystem::reflection(const Vec& root) const {
  const Vec av = coroot(root);
  RationalMatrix m(ambient_dim_, ambient_dim_);
  for (std::size_t j = 0; j < ambient_dim_; ++j) {
    Vec ej = unit(ambient_dim_, j);
    Vec img = ej - form(av, ej) * root;
    for (std::size_t i = 0; i < ambient_dim_; ++i) m.at(i, j) = img[i];
  }
  return WeylElement(this, m);
}

WeylElement RootSystem::simple_reflection(int i) const { return reflection(simple_root(i)); }

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = simple_reflection(i) * w;  // rightmost letter applied first
  return w;
}

WeylElement RootSystem::longest_element() const {
  WeylElement w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rank_; ++i) {
      // l(w s_i) > l(w) iff w(alpha_i) > 0
      if (is_positive_root(w.apply(simple_root(i)))) {
        w = w * simple_reflection(i);
        grew = true;
      }
    }
  }
  return w;
}

WeylElement RootSystem::longest_element_fixing(int i) const {
  WeylElement w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 1; j <= rank_; ++j) {
      if (j == i) continue;
      if (is_positive_root(w.apply(simple_root(j)))) {
        w = w * simple_reflection(j);
        grew = true;
      }
    }
  }
  return w;
}

bool RootSystem::is_minuscule(int i) const {
  const Vec& wv = dual_fundamental_weight(i);
  for (const Vec& a : positive_roots_) {
    Rational c = form(wv, a);
    if (c != 0 && c != 1) return false;
  }
  return true;
}

std::vector<int> RootSystem::o_star() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i)
    if (is_minuscule(i)) out.push_back(i);
  return out;
}

WeylElement RootSystem::w_bracket(int i) const {
  if (!is_minuscule(i)) throw NotMinusculeError("w_bracket: omega_" + std::to_string(i) +
                                                "^vee is not minuscule");
  return longest_element() * longest_element_fixing(i);
}

Vec RootSystem::dot_action(const WeylElement& w, const Vec& lambda) const {
  return w.apply(lambda + rho_) - rho_;
}

}  // namespace kzdyn
