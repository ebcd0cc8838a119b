#ifndef KZDYN_SUITE_HPP
#define KZDYN_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kzdyn/rational.hpp"
#include "kzdyn/report.hpp"

namespace kzdyn {

/// Everything needed to run the named check suites deterministically.
struct SuiteConfig {
  char type = 'A';
  int rank = 2;
  std::vector<int> modules = {1, 1};  // wedge degrees of the tensor factors
  std::optional<Vec> nu;              // weight block for the det suite
  std::optional<Rational> kappa;      // fixed step; sampled when absent
  int samples = 3;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;    // empty means all suites
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  /// Wall-clock seconds per check, parallel to `reports`. Kept out of the
  /// serialized reports so those stay byte-identical under a fixed seed.
  std::vector<double> wall_seconds;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool all_passed() const { return failed == 0; }
};

/// Known suite names: sl2, braid, fusion, kz, compat, det.
const std::vector<std::string>& known_suites();

/// Runs the configured suites. Representation-level checks only exist for
/// type A; for other types they are reported with SKIP status while the
/// word-level checks still run. Throws ConfigError on an invalid config.
SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace kzdyn

#endif
