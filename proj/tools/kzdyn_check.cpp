#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kzdyn/errors.hpp"
#include "kzdyn/suite.hpp"

namespace {

using kzdyn::ConfigError;
using kzdyn::Rational;

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse rational: " + text);
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

/// "A" keeps the separate --rank; "G2"/"B3"/... carries its own rank.
void apply_type(const std::string& text, kzdyn::SuiteConfig& cfg) {
  if (text.empty()) throw ConfigError("empty --type");
  cfg.type = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (text.size() > 1) {
    try {
      cfg.rank = std::stoi(text.substr(1));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse rank in --type " + text);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for dynamical difference operators compatible with trigonometric KZ equations"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run the named check suites");
  std::string type = "A";
  int rank = 2;
  std::string modules = "1,1";
  std::string weight;
  std::string kappa;
  int samples = 3;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  std::string format = "jsonlines";
  std::string out_path;

  run->add_option("--type", type, "Cartan type, 'A' or with rank attached ('B2', 'G2')");
  run->add_option("--rank", rank, "Rank (ignored when --type carries one)");
  run->add_option("--modules", modules, "Comma-separated wedge degrees of the tensor factors");
  run->add_option("--weight", weight, "Weight block nu for the det suite, comma-separated rationals");
  run->add_option("--kappa", kappa, "Fixed difference step (sampled when absent)");
  run->add_option("--samples", samples, "Sample points per check");
  run->add_option("--seed", seed, "RNG seed")->envname("KZDYN_SEED");
  run->add_option("--suite", suites, "Suite name, repeatable (default: all)");
  run->add_option("--format", format, "Report format: jsonlines or markdown");
  run->add_option("--out", out_path, "Report file (default: stdout)");
  std::string config_path;
  run->add_option("--config", config_path, "Config file with key=value lines mirroring the flags");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream cfg_file(config_path);
      if (!cfg_file) throw ConfigError("cannot open config file: " + config_path);
      std::string line;
      while (std::getline(cfg_file, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
          const auto a = s.find_first_not_of(" \t\r");
          const auto b = s.find_last_not_of(" \t\r");
          return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        // Flags given on the command line win over the config file.
        if (run->count("--" + key) > 0 && key != "suite") continue;
        if (key == "type") type = value;
        else if (key == "rank") rank = std::stoi(value);
        else if (key == "modules") modules = value;
        else if (key == "weight") weight = value;
        else if (key == "kappa") kappa = value;
        else if (key == "samples") samples = std::stoi(value);
        else if (key == "seed") seed = std::stoull(value);
        else if (key == "suite") suites.push_back(value);
        else if (key == "format") format = value;
        else if (key == "out") out_path = value;
        else throw ConfigError("unknown config key: " + key);
      }
    }
    kzdyn::SuiteConfig cfg;
    apply_type(type, cfg);
    if (type.size() == 1) cfg.rank = rank;
    cfg.modules.clear();
    for (const std::string& part : split_commas(modules)) {
      try {
        cfg.modules.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ConfigError("cannot parse wedge degree: " + part);
      }
    }
    if (!weight.empty()) {
      kzdyn::Vec nu;
      for (const std::string& part : split_commas(weight)) nu.push_back(parse_rational(part));
      cfg.nu = nu;
    }
    if (!kappa.empty()) cfg.kappa = parse_rational(kappa);
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.suites = suites;
    if (format != "jsonlines" && format != "markdown")
      throw ConfigError("unknown format: " + format);

    const kzdyn::SuiteResult result = kzdyn::run_suite(cfg);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw kzdyn::IoError("cannot open output file: " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (format == "jsonlines")
      kzdyn::write_jsonlines(out, result.reports);
    else
      kzdyn::write_markdown(out, result.reports);

    const double total =
        std::accumulate(result.wall_seconds.begin(), result.wall_seconds.end(), 0.0);
    std::cerr << "checks: " << result.reports.size() << ", pass: " << result.passed
              << ", fail: " << result.failed << ", skip: " << result.skipped << " ("
              << total << " s)\n";
    return result.all_passed() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const kzdyn::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
