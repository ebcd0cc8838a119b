#include "kzdyn/suite.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <utility>

#include "kzdyn/determinant.hpp"
#include "kzdyn/errors.hpp"
#include "kzdyn/fusion.hpp"
#include "kzdyn/sampling.hpp"
#include "kzdyn/verma.hpp"

namespace kzdyn {

namespace {

constexpr std::size_t kMaxWitnesses = 3;

std::vector<FailureWitness> matrix_witness(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  std::vector<FailureWitness> out;
  for (std::size_t i = 0; i < lhs.rows() && out.size() < kMaxWitnesses; ++i)
    for (std::size_t j = 0; j < lhs.cols() && out.size() < kMaxWitnesses; ++j)
      if (lhs.at(i, j) != rhs.at(i, j))
        out.push_back({i, j, to_string(lhs.at(i, j)), to_string(rhs.at(i, j))});
  return out;
}

/// Everything shared by the individual suites.
struct Context {
  const SuiteConfig& cfg;
  RootSystem rs;
  Sampler sampler;
  SuiteResult result;

  Context(const SuiteConfig& c) : cfg(c), rs(c.type, c.rank), sampler(c.seed) {}

  void record(CheckReport rep, double seconds = 0.0) {
    result.wall_seconds.push_back(seconds);
    switch (rep.status) {
      case CheckStatus::Pass:
        ++result.passed;
        break;
      case CheckStatus::Fail:
        ++result.failed;
        break;
      case CheckStatus::Skip:
        ++result.skipped;
        break;
    }
    result.reports.push_back(std::move(rep));
  }

  void skip(const std::string& name, const std::string& module_desc) {
    CheckReport rep;
    rep.check_name = name;
    rep.type = cfg.type;
    rep.rank = cfg.rank;
    rep.module_descriptor = module_desc;
    rep.status = CheckStatus::Skip;
    record(std::move(rep));
  }

  /// Runs one sampled check with the pole/resonance retry policy; any other
  /// exception (and a retry budget exhausted by real poles) becomes FAIL
  /// with the message as witness.
  void run_check(const std::string& name, const std::string& module_desc,
                 const std::function<bool(Sampler&, CheckReport&)>& body) {
    CheckReport rep;
    rep.check_name = name;
    rep.type = cfg.type;
    rep.rank = cfg.rank;
    rep.module_descriptor = module_desc;
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    bool ok = false;
    try {
      ok = with_resampling(sampler, [&](Sampler& s) {
        rep.failure_witness.clear();
        return body(s, rep);
      });
    } catch (const std::exception& e) {
      rep.status = CheckStatus::Fail;
      rep.failure_witness = {{0, 0, e.what(), ""}};
      record(std::move(rep), elapsed());
      return;
    }
    rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    record(std::move(rep), elapsed());
  }
};

/// Product of bb_alpha factors along an explicit reduced word (leftmost
/// factor is the last inversion), used to compare two words for one element.
RationalMatrix bb_along_word(const WeightModule& V, const RootSystem& rs,
                             const std::vector<int>& word, const Vec& lambda) {
  RationalMatrix b = RationalMatrix::identity(V.dim());
  WeylElement prefix = rs.identity();
  for (int letter : word) {
    const Vec alpha = prefix.apply(rs.simple_root(letter));
    b = bb_alpha(V, alpha, lambda) * b;
    prefix = prefix * rs.simple_reflection(letter);
  }
  return b;
}

void run_sl2(Context& ctx) {
  for (int m = 1; m <= 6; ++m) {
    const WeightModule V = WeightModule::sl2_module(m);
    const Vec alpha = {Rational(1), Rational(-1)};
    for (int s = 0; s < ctx.cfg.samples; ++s) {
      ctx.run_check("sl2_eigenvalues_m" + std::to_string(m), V.descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      const Rational a = smp.nonzero_rational();
                      rep.lambda = {a / 2, -a / 2};
                      std::vector<Rational> diag(static_cast<std::size_t>(m) + 1);
                      Rational e = 1;
                      for (int k = 0; k <= m; ++k) {
                        diag[k] = e;
                        const Rational den = a - Rational(m, 2) + k;
                        if (k < m && den == 0) throw PoleError("eigenvalue formula pole");
                        if (k < m) e *= (a + Rational(m, 2) - k) / den;
                      }
                      const RationalMatrix lhs = bb_alpha(V, alpha, rep.lambda);
                      const RationalMatrix rhs = RationalMatrix::diagonal(diag);
                      rep.failure_witness = matrix_witness(lhs, rhs);
                      return lhs == rhs;
                    });
      ctx.run_check("sl2_inverse_identity_m" + std::to_string(m), V.descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      const Rational t = smp.small_rational();
                      if (t == -1) throw PoleError("t = -1");
                      rep.z = {t};
                      const RationalMatrix H = V.h_root(alpha);
                      const RationalMatrix E = V.e_root(alpha);
                      const RationalMatrix F = V.f_root(alpha);
                      const RationalMatrix lhs =
                          p_series(-t - 2, -H, F, E) * p_series(t, H, E, F);
                      std::vector<Rational> diag(V.dim());
                      for (std::size_t b = 0; b < V.dim(); ++b)
                        diag[b] = (t - H.at(b, b) + 1) / (t + 1);
                      const RationalMatrix rhs = RationalMatrix::diagonal(diag);
                      rep.failure_witness = matrix_witness(lhs, rhs);
                      return lhs == rhs;
                    });
    }
  }
  const std::vector<std::pair<int, long long>> verma_cases = {{2, 6}, {3, 8}, {4, 10}};
  for (const auto& [m, l] : verma_cases) {
    ctx.run_check("sl2_verma_oracle_m" + std::to_string(m) + "_l" + std::to_string(l),
                  "sl2:L" + std::to_string(m),
                  [&](Sampler&, CheckReport& rep) {
                    rep.lambda = {Rational(l, 2), Rational(-l, 2)};
                    return sl2_verma_oracle_matches(m, l);
                  });
  }
}

void run_braid(Context& ctx, const WeightModule* V) {
  for (int i = 1; i <= ctx.cfg.rank; ++i) {
    ctx.run_check("affine_word_inversions_i" + std::to_string(i), "",
                  [&](Sampler&, CheckReport&) {
                    const AffineWeylElement t = AffineWeylElement::translation(
                        ctx.rs, ctx.rs.dual_fundamental_weight(i));
                    std::vector<AffineRoot> expected = translation_inversion_set(ctx.rs, i);
                    std::sort(expected.begin(), expected.end());
                    return t.a_tilde_multiset() == expected;
                  });
  }
  if (V == nullptr) {
    ctx.skip("bb_inverse_identity", "");
    ctx.skip("bb_braid_relation", "");
    ctx.skip("bb_commuting_relation", "");
    return;
  }
  const RootSystem& rs = ctx.rs;
  for (int s = 0; s < ctx.cfg.samples; ++s) {
    ctx.run_check("bb_inverse_identity", V->descriptor(),
                  [&](Sampler& smp, CheckReport& rep) {
                    rep.lambda = smp.weight(rs);
                    const Vec& alpha = rs.simple_root(1);
                    const RationalMatrix lhs =
                        bb_alpha(*V, alpha, rep.lambda) * bb_alpha_inverse(*V, alpha, rep.lambda);
                    const RationalMatrix rhs = RationalMatrix::identity(V->dim());
                    rep.failure_witness = matrix_witness(lhs, rhs);
                    return lhs == rhs;
                  });
    if (rs.rank() >= 2) {
      ctx.run_check("bb_braid_relation", V->descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      rep.lambda = smp.weight(rs);
                      const RationalMatrix lhs = bb_along_word(*V, rs, {1, 2, 1}, rep.lambda);
                      const RationalMatrix rhs = bb_along_word(*V, rs, {2, 1, 2}, rep.lambda);
                      rep.failure_witness = matrix_witness(lhs, rhs);
                      return lhs == rhs;
                    });
    }
    if (rs.rank() >= 3) {
      ctx.run_check("bb_commuting_relation", V->descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      rep.lambda = smp.weight(rs);
                      const RationalMatrix lhs = bb_along_word(*V, rs, {1, 3}, rep.lambda);
                      const RationalMatrix rhs = bb_along_word(*V, rs, {3, 1}, rep.lambda);
                      rep.failure_witness = matrix_witness(lhs, rhs);
                      return lhs == rhs;
                    });
    }
  }
}

void run_fusion(Context& ctx, const WeightModule* V) {
  if (V == nullptr || V->factor_count() != 2) {
    ctx.skip("fusion_unipotent", V ? V->descriptor() : "");
    ctx.skip("fusion_weyl_factorization", V ? V->descriptor() : "");
    ctx.skip("fusion_casimir_exchange", V ? V->descriptor() : "");
    return;
  }
  const RootSystem& rs = ctx.rs;
  const std::vector<std::pair<std::string, WeylElement>> elements = {
      {"s1", rs.simple_reflection(1)}, {"w0", rs.longest_element()}};
  for (int s = 0; s < ctx.cfg.samples; ++s) {
    ctx.run_check("fusion_unipotent", V->descriptor(), [&](Sampler& smp, CheckReport& rep) {
      rep.lambda = smp.weight(rs);
      return is_unipotent_lower_triangular(*V, fusion_J(*V, rep.lambda));
    });
    for (const auto& [tag, w] : elements) {
      ctx.run_check("fusion_weyl_factorization_" + tag, V->descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      rep.lambda = smp.weight(rs);
                      return tensor_factorization_holds(*V, w, rep.lambda);
                    });
      ctx.run_check("fusion_casimir_exchange_" + tag, V->descriptor(),
                    [&](Sampler& smp, CheckReport& rep) {
                      rep.lambda = smp.weight(rs);
                      return casimir_exchange_holds(*V, w, rep.lambda);
                    });
    }
  }
}

void run_kz(Context& ctx, const WeightModule* V) {
  if (V == nullptr || V->factor_count() < 2) {
    ctx.skip("kz_flatness", V ? V->descriptor() : "");
    return;
  }
  const std::size_t n = V->factor_count();
  for (int s = 0; s < ctx.cfg.samples; ++s) {
    ctx.run_check("kz_flatness", V->descriptor(), [&](Sampler& smp, CheckReport& rep) {
      rep.lambda = smp.weight(ctx.rs);
      rep.kappa = ctx.cfg.kappa ? *ctx.cfg.kappa : smp.kappa();
      rep.z = smp.base_points(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!kz_flat(*V, i, j, rep.z, rep.lambda, rep.kappa)) return false;
      return true;
    });
  }
}

void run_compat(Context& ctx, const WeightModule* V) {
  if (V == nullptr) {
    for (const char* name :
         {"kz_dyn_compat", "dyn_dyn_compat", "kz_translation_invariance", "kz_casimir_conjugation",
          "difference_step_equivalence", "difference_step_root_product",
          "cocycle_factor_well_defined", "cocycle_identity"})
      ctx.skip(name, "");
    return;
  }
  const RootSystem& rs = ctx.rs;
  const std::size_t n = V->factor_count();
  const int r = rs.rank();
  for (int s = 0; s < ctx.cfg.samples; ++s) {
    Vec lambda = ctx.sampler.weight(rs);
    const Rational kappa = ctx.cfg.kappa ? *ctx.cfg.kappa : ctx.sampler.kappa();
    const std::vector<Rational> t = ctx.sampler.base_points(n);

    ctx.run_check("kz_dyn_compat", V->descriptor(), [&](Sampler& smp, CheckReport& rep) {
      rep.lambda = smp.weight(rs);
      rep.kappa = kappa;
      rep.z = t;
      for (int i = 1; i <= r; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!kz_dyn_compat_holds(*V, rs, i, j, t, rep.lambda, kappa)) return false;
      return true;
    });
    if (r >= 2) {
      ctx.run_check("dyn_dyn_compat", V->descriptor(), [&](Sampler& smp, CheckReport& rep) {
        rep.lambda = smp.weight(rs);
        rep.kappa = kappa;
        for (int i = 1; i <= r; ++i)
          for (int j = i + 1; j <= r; ++j)
            if (!dyn_dyn_compat_holds(*V, rs, i, j, rep.lambda, kappa)) return false;
        return true;
      });
    } else {
      ctx.skip("dyn_dyn_compat", V->descriptor());
    }
    ctx.run_check("kz_translation_invariance", V->descriptor(),
                  [&](Sampler&, CheckReport& rep) {
                    rep.z = t;
                    for (int i = 1; i <= r; ++i)
                      for (std::size_t j = 0; j < n; ++j)
                        if (!pi_invariance_holds(*V, rs, i, j, t)) return false;
                    return true;
                  });
    ctx.run_check("kz_casimir_conjugation", V->descriptor(),
                  [&](Sampler& smp, CheckReport& rep) {
                    rep.lambda = smp.weight(rs);
                    rep.z = t;
                    const WeylElement w = rs.w_bracket(1);
                    for (std::size_t j = 0; j < n; ++j) {
                      if (!kz_conjugation_holds(*V, w, j, t, rep.lambda)) return false;
                      for (std::size_t k = 0; k < n; ++k)
                        if (k != j && !bb_commutes_with_casimir(*V, w, rep.lambda, j, k))
                          return false;
                    }
                    return true;
                  });
    ctx.run_check("difference_step_equivalence", V->descriptor(),
                  [&](Sampler& smp, CheckReport& rep) {
                    rep.lambda = smp.weight(rs);
                    rep.kappa = kappa;
                    for (int i = 1; i <= V->N(); ++i)
                      if (!equivalent_form_holds(*V, rs, i, rep.lambda, kappa)) return false;
                    return true;
                  });
    ctx.run_check("difference_step_root_product", V->descriptor(),
                  [&](Sampler& smp, CheckReport& rep) {
                    rep.lambda = smp.weight(rs);
                    for (int i = 1; i <= r; ++i)
                      if (!product_over_positive_roots_holds(*V, rs, i, rep.lambda)) return false;
                    return true;
                  });
    ctx.run_check("cocycle_factor_well_defined", V->descriptor(),
                  [&](Sampler& smp, CheckReport& rep) {
                    rep.lambda = smp.weight(rs);
                    rep.kappa = kappa;
                    const AffineRoot high{rs.highest_root(), -1};
                    const AffineRoot low{rs.simple_root(1), 1};
                    return g_tilde_well_defined(*V, rs, high, rep.lambda, kappa) &&
                           g_tilde_well_defined(*V, rs, low, rep.lambda, kappa);
                  });
    ctx.run_check("cocycle_identity", V->descriptor(), [&](Sampler& smp, CheckReport& rep) {
      rep.lambda = smp.weight(rs);
      rep.kappa = kappa;
      const AffineWeylElement x =
          AffineWeylElement::translation(rs, rs.dual_fundamental_weight(1));
      const AffineWeylElement y =
          AffineWeylElement::translation(rs, rs.dual_fundamental_weight(r));
      return cocycle_identity_holds(*V, rs, x, y, rep.lambda, kappa);
    });
  }
}

void run_det(Context& ctx, const WeightModule* V) {
  if (V == nullptr) {
    ctx.skip("det_block_formula", "");
    return;
  }
  const RootSystem& rs = ctx.rs;
  Vec nu;
  if (ctx.cfg.nu) {
    nu = *ctx.cfg.nu;
    if (nu.size() != static_cast<std::size_t>(V->N()))
      throw ConfigError("nu must have one coordinate per ambient dimension");
    if (V->weight_space(nu).empty())
      throw ConfigError("the requested nu is not a weight of the module");
  } else {
    nu = Vec(static_cast<std::size_t>(V->N()), Rational(0));
    if (V->weight_space(nu).empty()) nu = V->weight_support().front();
  }
  const std::string desc = V->descriptor() + "[" + vec_to_string(nu) + "]";
  for (int s = 0; s < ctx.cfg.samples; ++s) {
    for (int i = 1; i <= rs.rank(); ++i) {
      ctx.run_check("det_block_formula_i" + std::to_string(i), desc,
                    [&](Sampler& smp, CheckReport& rep) {
                      rep.lambda = smp.weight(rs);
                      rep.kappa = ctx.cfg.kappa ? *ctx.cfg.kappa : smp.kappa();
                      return det_formula_holds(*V, rs, nu, i, rep.lambda, rep.kappa);
                    });
    }
  }
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"sl2", "braid", "fusion", "kz", "compat", "det"};
  return names;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
  if (cfg.rank < 1 || cfg.rank > 8) throw ConfigError("rank out of supported range [1, 8]");
  if (cfg.modules.empty()) throw ConfigError("at least one tensor factor is required");
  if (cfg.modules.size() > 3) throw ConfigError("at most 3 tensor factors are supported");
  std::vector<std::string> suites = cfg.suites.empty() ? known_suites() : cfg.suites;
  for (const std::string& s : suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw ConfigError("unknown suite: " + s);

  std::unique_ptr<Context> ctx;
  try {
    ctx = std::make_unique<Context>(cfg);
  } catch (const InvalidCartanTypeError& e) {
    throw ConfigError(e.what());
  }

  // Representation-level checks live in type A only.
  std::unique_ptr<WeightModule> module;
  if (cfg.type == 'A') {
    const int N = cfg.rank + 1;
    std::vector<WeightModule> factors;
    std::size_t dim = 1;
    for (int k : cfg.modules) {
      if (k < 1 || k > N) throw ConfigError("wedge degree out of range for the ambient sl_N");
      factors.push_back(WeightModule::wedge_rep(N, k));
      dim *= factors.back().dim();
    }
    if (dim > 256) throw ConfigError("tensor module dimension exceeds the supported 256");
    module = std::make_unique<WeightModule>(WeightModule::tensor(factors));
  }

  for (const std::string& name : suites) {
    if (name == "sl2") run_sl2(*ctx);
    if (name == "braid") run_braid(*ctx, module.get());
    if (name == "fusion") run_fusion(*ctx, module.get());
    if (name == "kz") run_kz(*ctx, module.get());
    if (name == "compat") run_compat(*ctx, module.get());
    if (name == "det") run_det(*ctx, module.get());
  }
  return ctx->result;
}

}  // namespace kzdyn
