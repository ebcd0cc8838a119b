#include "kzdyn/report.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace kzdyn {

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& q : v) arr.push_back(to_string(q));
  return arr;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "UNKNOWN";
}

void write_jsonlines(std::ostream& out, const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["type"] = std::string(1, r.type);
    j["rank"] = r.rank;
    j["module_descriptor"] = r.module_descriptor;
    j["lambda"] = rationals_to_json(r.lambda);
    j["kappa"] = to_string(r.kappa);
    j["z"] = rationals_to_json(r.z);
    j["status"] = to_string(r.status);
    nlohmann::json witnesses = nlohmann::json::array();
    for (const FailureWitness& w : r.failure_witness)
      witnesses.push_back({{"row", w.row}, {"col", w.col}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    j["failure_witness"] = witnesses;
    out << j.dump() << '\n';
  }
}

void write_markdown(std::ostream& out, const std::vector<CheckReport>& reports) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    if (r.status == CheckStatus::Pass) ++passed;
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Skip) ++skipped;
  }
  out << "# Check report\n\n";
  out << "Total: " << reports.size() << ", pass: " << passed << ", fail: " << failed
      << ", skip: " << skipped << "\n\n";
  out << "| check | type | rank | module | lambda | kappa | z | status |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const CheckReport& r : reports) {
    out << "| " << r.check_name << " | " << r.type << " | " << r.rank << " | "
        << r.module_descriptor << " | " << vec_to_string(r.lambda) << " | " << to_string(r.kappa)
        << " | " << vec_to_string(r.z) << " | " << to_string(r.status) << " |\n";
  }
  bool any_witness = false;
  for (const CheckReport& r : reports)
    for (const FailureWitness& w : r.failure_witness) {
      if (!any_witness) {
        out << "\n## Failure witnesses\n\n";
        any_witness = true;
      }
      out << "- " << r.check_name << " entry (" << w.row << ", " << w.col << "): " << w.lhs
          << " vs " << w.rhs << "\n";
    }
}

}  // namespace kzdyn
