#ifndef KZDYN_REPORT_HPP
#define KZDYN_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kzdyn/rational.hpp"

namespace kzdyn {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

/// Where and how an exact comparison failed: the entry coordinates and the
/// two values that were supposed to agree.
struct FailureWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

/// One executed check at one sample point. Deliberately timing-free so that
/// report files are byte-identical across runs with the same seed.
struct CheckReport {
  std::string check_name;
  char type = 'A';
  int rank = 0;
  std::string module_descriptor;
  Vec lambda;
  Rational kappa = 1;
  std::vector<Rational> z;
  CheckStatus status = CheckStatus::Pass;
  std::vector<FailureWitness> failure_witness;
};

/// One JSON object per line.
void write_jsonlines(std::ostream& out, const std::vector<CheckReport>& reports);

/// Human-readable summary table plus a witness list for failures.
void write_markdown(std::ostream& out, const std::vector<CheckReport>& reports);

}  // namespace kzdyn

#endif
