#include "kzdyn/weight_module.hpp"

#include <algorithm>

#include "kzdyn/errors.hpp"

namespace kzdyn {

namespace {

/// Trace-zero projection of a vector in R^N.
Vec project(Vec v) {
  Rational mean = 0;
  for (const Rational& c : v) mean += c;
  mean /= Rational(static_cast<int>(v.size()));
  for (Rational& c : v) c -= mean;
  return v;
}

std::vector<std::vector<int>> k_subsets(int N, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration of sorted k-subsets of {1..N}
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= N; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

WeightModule WeightModule::vector_rep(int N) { return wedge_rep(N, 1); }

WeightModule WeightModule::wedge_rep(int N, int k) {
  if (N < 2 || k < 1 || k > N) throw Error("wedge_rep: invalid N or k");
  WeightModule V;
  V.N_ = N;
  V.desc_ = "sl" + std::to_string(N) + ":" + std::to_string(k);
  const auto subsets = k_subsets(N, k);
  V.dim_ = subsets.size();
  for (const auto& s : subsets) {
    std::string lab = "e";
    Vec w(N, Rational(0));
    for (int v : s) {
      lab += (v == s.front() ? "" : "^e") + std::to_string(v);
      w[v - 1] += 1;
    }
    V.labels_.push_back(lab);
    V.weights_.push_back(project(w));
  }
  V.eij_.assign(static_cast<std::size_t>(N) * N, RationalMatrix(V.dim_, V.dim_));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      RationalMatrix& m = V.eij_[(i - 1) * N + (j - 1)];
      // e_{i,j} replaces j by i inside the wedge, with the sign of resorting.
      for (std::size_t b = 0; b < V.dim_; ++b) {
        const auto& s = subsets[b];
        if (!std::binary_search(s.begin(), s.end(), j)) continue;
        if (std::binary_search(s.begin(), s.end(), i)) continue;
        std::vector<int> t;
        for (int v : s)
          if (v != j) t.push_back(v);
        auto pos = std::lower_bound(t.begin(), t.end(), i) - t.begin();
        auto old_pos = std::find(s.begin(), s.end(), j) - s.begin();
        t.insert(t.begin() + pos, i);
        int sign = ((old_pos - pos) % 2 == 0) ? 1 : -1;
        auto target = std::lower_bound(subsets.begin(), subsets.end(), t) - subsets.begin();
        m.at(static_cast<std::size_t>(target), b) = sign;
      }
    }
  for (int i = 1; i <= N; ++i) {
    Vec eps(N, Rational(0));
    eps[i - 1] = 1;
    V.eij_[(i - 1) * N + (i - 1)] = V.cartan(eps);
  }
  return V;
}

WeightModule WeightModule::sl2_module(int m) {
  if (m < 0) throw Error("sl2_module: m must be nonnegative");
  WeightModule V;
  V.N_ = 2;
  V.desc_ = "sl2:L" + std::to_string(m);
  V.dim_ = static_cast<std::size_t>(m) + 1;
  for (int k = 0; k <= m; ++k) {
    V.labels_.push_back("v" + std::to_string(k));
    V.weights_.push_back({Rational(m - 2 * k, 2), Rational(2 * k - m, 2)});
  }
  RationalMatrix E(V.dim_, V.dim_), F(V.dim_, V.dim_);
  for (int k = 0; k <= m; ++k) {
    if (k + 1 <= m) F.at(k + 1, k) = k + 1;
    if (k - 1 >= 0) E.at(k - 1, k) = m - k + 1;
  }
  V.eij_.assign(4, RationalMatrix(V.dim_, V.dim_));
  V.eij_[0 * 2 + 1] = E;
  V.eij_[1 * 2 + 0] = F;
  V.eij_[0 * 2 + 0] = V.cartan({Rational(1), Rational(0)});
  V.eij_[1 * 2 + 1] = V.cartan({Rational(0), Rational(1)});
  return V;
}

WeightModule WeightModule::tensor(const std::vector<WeightModule>& factors) {
  if (factors.empty()) throw Error("tensor: empty factor list");
  if (factors.size() == 1) return factors[0];
  WeightModule V;
  V.N_ = factors[0].N_;
  V.dim_ = 1;
  for (const WeightModule& f : factors) {
    if (f.N_ != V.N_) throw MixedRankError("tensor: factors over different sl_N");
    V.dim_ *= f.dim_;
    V.factor_dims_.push_back(f.dim_);
    V.desc_ += (V.desc_.empty() ? f.desc_ : "*" + f.desc_.substr(f.desc_.find(':') + 1));
  }
  V.factors_ = factors;
  for (std::size_t b = 0; b < V.dim_; ++b) {
    std::string lab;
    Vec w(V.N_, Rational(0));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t idx = V.factor_index(k, b);
      lab += (k ? "(x)" : "") + factors[k].labels_[idx];
      w = w + factors[k].weights_[idx];
    }
    V.labels_.push_back(lab);
    V.weights_.push_back(w);
  }
  V.eij_.assign(static_cast<std::size_t>(V.N_) * V.N_, RationalMatrix(V.dim_, V.dim_));
  for (int i = 1; i <= V.N_; ++i)
    for (int j = 1; j <= V.N_; ++j) {
      RationalMatrix sum(V.dim_, V.dim_);
      for (std::size_t k = 0; k < factors.size(); ++k)
        sum = sum + V.op_in_factor(k, factors[k].e(i, j));
      V.eij_[(i - 1) * V.N_ + (j - 1)] = sum;
    }
  return V;
}

RationalMatrix WeightModule::cartan(const Vec& h) const {
  std::vector<Rational> d(dim_);
  for (std::size_t b = 0; b < dim_; ++b) d[b] = dot(weights_[b], h);
  return RationalMatrix::diagonal(d);
}

namespace {

std::pair<int, int> root_indices(const Vec& alpha) {
  int i = -1, j = -1;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 1) i = static_cast<int>(k) + 1;
    if (alpha[k] == -1) j = static_cast<int>(k) + 1;
    if (alpha[k] != 0 && alpha[k] != 1 && alpha[k] != -1)
      throw Error("not an sl_N root: " + vec_to_string(alpha));
  }
  if (i < 0 || j < 0) throw Error("not an sl_N root: " + vec_to_string(alpha));
  return {i, j};
}

}  // namespace

RationalMatrix WeightModule::e_root(const Vec& alpha) const {
  auto [i, j] = root_indices(alpha);
  return e(i, j);
}

RationalMatrix WeightModule::f_root(const Vec& alpha) const {
  auto [i, j] = root_indices(alpha);
  return e(j, i);
}

RationalMatrix WeightModule::h_root(const Vec& alpha) const { return cartan(alpha); }

std::vector<std::size_t> WeightModule::weight_space(const Vec& mu) const {
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < dim_; ++b)
    if (weights_[b] == mu) idx.push_back(b);
  return idx;
}

std::vector<Vec> WeightModule::weight_support() const {
  std::vector<Vec> support;
  for (const Vec& w : weights_)
    if (std::find(support.begin(), support.end(), w) == support.end()) support.push_back(w);
  return support;
}

std::size_t WeightModule::factor_index(std::size_t k, std::size_t b) const {
  if (factor_dims_.empty()) return b;
  std::size_t stride = 1;
  for (std::size_t l = k + 1; l < factor_dims_.size(); ++l) stride *= factor_dims_[l];
  return (b / stride) % factor_dims_[k];
}

const Vec& WeightModule::factor_weight(std::size_t k, std::size_t b) const {
  return factor(k).weights_[factor_index(k, b)];
}

RationalMatrix WeightModule::op_in_factor(std::size_t k, const RationalMatrix& m) const {
  if (factor_dims_.empty()) return m;
  std::size_t pre = 1, post = 1;
  for (std::size_t l = 0; l < k; ++l) pre *= factor_dims_[l];
  for (std::size_t l = k + 1; l < factor_dims_.size(); ++l) post *= factor_dims_[l];
  return RationalMatrix::identity(pre).kron(m).kron(RationalMatrix::identity(post));
}

RationalMatrix WeightModule::group_lift(const WeylElement& w) const {
  RationalMatrix x = RationalMatrix::identity(dim_);
  for (int i : w.reduced_word()) {
    const RationalMatrix E = e(i, i + 1);
    const RationalMatrix F = e(i + 1, i);
    RationalMatrix xi = exp_nilpotent(-E) * exp_nilpotent(F) * exp_nilpotent(-E);
    x = xi * x;  // x_w = x_{i_k} ... x_{i_1}, first letter rightmost
  }
  return x;
}

RationalMatrix WeightModule::weyl_conjugate(const WeylElement& w, const RationalMatrix& m) const {
  RationalMatrix x = group_lift(w);
  return x * m * x.inverse();
}

}  // namespace kzdyn
