// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact rational arithmetic, so every comparison is
// bit-exact equality.
#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kzdyn/determinant.hpp"
#include "kzdyn/errors.hpp"
#include "kzdyn/fusion.hpp"
#include "kzdyn/sampling.hpp"
#include "kzdyn/suite.hpp"
#include "kzdyn/verma.hpp"

namespace {

using namespace kzdyn;

WeightModule tensor_of(int N, const std::vector<int>& degrees) {
  std::vector<WeightModule> factors;
  for (int k : degrees) factors.push_back(WeightModule::wedge_rep(N, k));
  return WeightModule::tensor(factors);
}

bool suite_all_pass(char type, int rank, const std::vector<int>& modules,
                    const std::vector<std::string>& suites, int samples, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.type = type;
  cfg.rank = rank;
  cfg.modules = modules;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.suites = suites;
  const SuiteResult r = run_suite(cfg);
  return r.failed == 0 && r.passed > 0;
}

bool eigenvalue_formula_holds() {
  Sampler sampler(11);
  const Vec alpha = {Rational(1), Rational(-1)};
  for (int m = 1; m <= 6; ++m) {
    const WeightModule L = WeightModule::sl2_module(m);
    for (int s = 0; s < 5; ++s) {
      const bool ok = with_resampling(sampler, [&](Sampler& smp) {
        const Rational a = smp.nonzero_rational();
        const Vec lambda = {a / 2, -a / 2};
        std::vector<Rational> diag(static_cast<std::size_t>(m) + 1);
        Rational e = 1;
        for (int k = 0; k <= m; ++k) {
          diag[k] = e;
          if (k < m) {
            const Rational den = a - Rational(m, 2) + k;
            if (den == 0) throw PoleError("resample");
            e *= (a + Rational(m, 2) - k) / den;
          }
        }
        return bb_alpha(L, alpha, lambda) == RationalMatrix::diagonal(diag);
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool inversion_identity_holds() {
  Sampler sampler(12);
  const Vec alpha = {Rational(1), Rational(-1)};
  for (int m = 1; m <= 6; ++m) {
    const WeightModule L = WeightModule::sl2_module(m);
    const RationalMatrix H = L.h_root(alpha);
    const RationalMatrix E = L.e_root(alpha);
    const RationalMatrix F = L.f_root(alpha);
    for (int s = 0; s < 5; ++s) {
      const bool ok = with_resampling(sampler, [&](Sampler& smp) {
        const Rational t = smp.small_rational();
        if (t == -1) throw PoleError("resample");
        std::vector<Rational> diag(L.dim());
        for (std::size_t b = 0; b < L.dim(); ++b) diag[b] = (t - H.at(b, b) + 1) / (t + 1);
        return p_series(-t - 2, -H, F, E) * p_series(t, H, E, F) ==
               RationalMatrix::diagonal(diag);
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool word_machinery_holds() {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3},
                                                   {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}};
  for (const auto& [t, r] : types) {
    const RootSystem rs(t, r);
    for (int i = 1; i <= r; ++i) {
      std::vector<AffineRoot> expected = translation_inversion_set(rs, i);
      std::sort(expected.begin(), expected.end());
      const AffineWeylElement el =
          AffineWeylElement::translation(rs, rs.dual_fundamental_weight(i));
      if (el.a_tilde_multiset() != expected) return false;
    }
  }
  {  // G2: ten affine roots of the frozen word for t_{omega_1}.
    const RootSystem rs('G', 2);
    const Vec a = rs.simple_root(1), b = rs.simple_root(2);
    std::vector<AffineRoot> expected = {{a, 0},
                                        {a + b, 0},
                                        {a + a + b, 0},
                                        {a + a + b, 1},
                                        {a + a + a + b, 0},
                                        {a + a + a + b, 1},
                                        {a + a + a + b, 2},
                                        {a + a + a + b + b, 0},
                                        {a + a + a + b + b, 1},
                                        {a + a + a + b + b, 2}};
    std::sort(expected.begin(), expected.end());
    const AffineWeylElement el =
        AffineWeylElement::translation(rs, rs.dual_fundamental_weight(1));
    if (el.length() != 10 || el.a_tilde_multiset() != expected) return false;
  }
  {  // B2: four factors of the frozen word for t_{omega_2}.
    const RootSystem rs('B', 2);
    const Vec a = rs.simple_root(1), b = rs.simple_root(2);
    std::vector<AffineRoot> expected = {{b, 0}, {a + b, 0}, {a + b + b, 0}, {a + b + b, 1}};
    std::sort(expected.begin(), expected.end());
    const AffineWeylElement el =
        AffineWeylElement::translation(rs, rs.dual_fundamental_weight(2));
    if (el.length() != 4 || el.a_tilde_multiset() != expected) return false;
  }
  return true;
}

bool kz_dyn_compat_all() {
  struct Case {
    int rank;
    std::vector<int> modules;
  };
  const std::vector<Case> cases = {{1, {1, 1}}, {2, {1, 1}}, {2, {1, 2}}};
  Sampler sampler(21);
  for (const Case& c : cases) {
    const RootSystem rs('A', c.rank);
    const WeightModule T = tensor_of(c.rank + 1, c.modules);
    for (int s = 0; s < 3; ++s) {
      const bool ok = with_resampling(sampler, [&](Sampler& smp) {
        const Vec lambda = smp.weight(rs);
        const Rational kappa = smp.kappa();
        const std::vector<Rational> t = smp.base_points(T.factor_count());
        for (int i = 1; i <= rs.rank(); ++i)
          for (std::size_t j = 0; j < T.factor_count(); ++j)
            if (!kz_dyn_compat_holds(T, rs, i, j, t, lambda, kappa)) return false;
        return true;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool dyn_dyn_compat_all() {
  Sampler sampler(22);
  {
    const RootSystem rs('A', 2);
    const WeightModule T = tensor_of(3, {1, 1});
    for (int s = 0; s < 3; ++s) {
      const bool ok = with_resampling(sampler, [&](Sampler& smp) {
        return dyn_dyn_compat_holds(T, rs, 1, 2, smp.weight(rs), smp.kappa());
      });
      if (!ok) return false;
    }
  }
  {
    const RootSystem rs('A', 3);
    const WeightModule T = tensor_of(4, {1, 2});
    const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [i, j] : pairs)
      for (int s = 0; s < 3; ++s) {
        const bool ok = with_resampling(sampler, [&](Sampler& smp) {
          return dyn_dyn_compat_holds(T, rs, i, j, smp.weight(rs), smp.kappa());
        });
        if (!ok) return false;
      }
  }
  return true;
}

bool det_ratio_all() {
  Sampler sampler(23);
  {  // sl2 hand value on the zero-weight block of C^2 (x) C^2.
    const RootSystem rs('A', 1);
    const WeightModule T = tensor_of(2, {1, 1});
    const Vec nu = {Rational(0), Rational(0)};
    const Rational a(9, 4);
    const Vec lambda = {a / 2, -a / 2};
    if (det_ratio_scalar(T, rs, nu, 1, lambda) != (a + 1) / (a - 1)) return false;
    for (int s = 0; s < 3; ++s) {
      const bool ok = with_resampling(sampler, [&](Sampler& smp) {
        return det_formula_holds(T, rs, nu, 1, smp.weight(rs), smp.kappa());
      });
      if (!ok) return false;
    }
  }
  {  // sl3 zero-weight block of (C^3)^(x)3, both i.
    const RootSystem rs('A', 2);
    const WeightModule T = tensor_of(3, {1, 1, 1});
    const Vec nu = {Rational(0), Rational(0), Rational(0)};
    for (int i = 1; i <= 2; ++i)
      for (int s = 0; s < 3; ++s) {
        const bool ok = with_resampling(sampler, [&](Sampler& smp) {
          return det_formula_holds(T, rs, nu, i, smp.weight(rs), smp.kappa());
        });
        if (!ok) return false;
      }
  }
  return true;
}

bool determinism_holds() {
  SuiteConfig cfg;
  cfg.samples = 2;
  cfg.seed = 2026;
  const auto render = [&] {
    std::ostringstream os;
    write_jsonlines(os, run_suite(cfg).reports);
    return os.str();
  };
  const std::string first = render();
  return !first.empty() && first == render();
}

}  // namespace

int main() {
  int failures = 0;
  const auto criterion = [&](int n, const char* desc, bool ok) {
    if (!ok) ++failures;
    std::printf("criterion %2d [%s] %s\n", n, ok ? "PASS" : "FAIL", desc);
    std::fflush(stdout);
  };

  criterion(1, "sl2 eigenvalue formula, m = 1..6, 5 random weights each",
            eigenvalue_formula_holds());
  criterion(2, "inversion identity p(-t-2;-H,F,E) p(t;H,E,F), m = 1..6, 5 random t",
            inversion_identity_holds());
  criterion(3, "truncated-Verma intertwiner oracle for (m,l) in {(2,6),(3,8),(4,10)}",
            sl2_verma_oracle_matches(2, 6) && sl2_verma_oracle_matches(3, 8) &&
                sl2_verma_oracle_matches(4, 10));
  criterion(4, "braid and commuting relations on (C3)^2, (C4)^2, C4 x W2C4",
            suite_all_pass('A', 2, {1, 1}, {"braid"}, 3, 41) &&
                suite_all_pass('A', 3, {1, 1}, {"braid"}, 3, 42) &&
                suite_all_pass('A', 3, {1, 2}, {"braid"}, 3, 43));
  criterion(5, "affine word machinery incl. the frozen B2 and G2 factor lists",
            word_machinery_holds());
  criterion(6, "fusion solve, unipotent J, tensor factorization, casimir exchange",
            suite_all_pass('A', 1, {1, 1}, {"fusion"}, 3, 61) &&
                suite_all_pass('A', 2, {1, 1}, {"fusion"}, 3, 62) &&
                suite_all_pass('A', 2, {1, 2}, {"fusion"}, 3, 63));
  criterion(7, "KZ flatness on (C3)^3 at 3 random (z, lambda, kappa)",
            suite_all_pass('A', 2, {1, 1, 1}, {"kz"}, 3, 71));
  criterion(8, "KZ <-> difference compatibility for sl2 and sl3 modules", kz_dyn_compat_all());
  criterion(9, "difference <-> difference compatibility for sl3 and sl4", dyn_dyn_compat_all());
  criterion(10, "determinant ratio incl. the hand value (a+1)/(a-1)", det_ratio_all());
  criterion(11, "byte-identical reports under a fixed seed", determinism_holds());

  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
