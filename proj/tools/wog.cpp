#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wog/commands.hpp"

namespace {

using wog::cli::CommandOptions;
using wog::cli::CommandResult;

std::optional<std::size_t> env_bound() {
  const char* raw = std::getenv("WOG_ORACLE_BOUND");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(raw));
  } catch (const std::exception&) {
    std::cerr << "wog: ignoring malformed WOG_ORACLE_BOUND='" << raw << "'\n";
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unmixed and Cohen-Macaulay tests for edge ideals of weighted oriented graphs"};
  app.set_version_flag("--version", std::string("wog ") + wog::cli::kVersion);
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<std::size_t> bound;
  CommandOptions opt;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", bound, "Vertex bound for exhaustive enumeration");

  std::string path;
  auto add_file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", path, "Graph file (JSON)")->required();
    sub->add_flag("--strict", opt.strict, "Reject sources or sinks with weight > 1");
    return sub;
  };

  CLI::App* analyze = add_file_command("analyze", "Full report: gates, invariants, verdicts");
  analyze->add_flag("--first-matching-only", opt.first_matching_only,
                    "CM decider tries only the first perfect matching");
  CLI::App* unmixed = add_file_command("unmixed", "Decide whether I(D) is unmixed");
  unmixed->add_flag("--oracle", opt.oracle, "Decide by strong vertex cover enumeration");
  CLI::App* cm = add_file_command("cm", "Decide whether I(D) is Cohen-Macaulay");
  cm->add_flag("--first-matching-only", opt.first_matching_only,
               "Try only the first perfect matching");
  CLI::App* covers = add_file_command("covers", "List vertex covers with their L-partition");
  bool minimal = false;
  auto* strong_flag = covers->add_flag("--strong", opt.strong, "Strong vertex covers");
  covers->add_flag("--minimal", minimal, "Minimal vertex covers (default)")->excludes(strong_flag);
  CLI::App* matchings = add_file_command("matchings", "List perfect matchings");
  matchings->add_flag("--check-p", opt.check_p, "Evaluate property (P) on each");
  add_file_command("ideal", "Print the generators of I(D)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "Cross-check criteria against the oracle");
  wog::FuzzConfig fcfg;
  std::string family = "whisker";
  std::string out_dir = "fuzz-counterexamples";
  fuzz->add_option("--family", family, "whisker|bipartite|girth_constrained|unrestricted")
      ->check(CLI::IsMember({"whisker", "bipartite", "girth_constrained", "unrestricted"}));
  fuzz->add_option("--count", fcfg.count, "Number of instances");
  fuzz->add_option("--seed", fcfg.seed, "Campaign seed");
  fuzz->add_option("--max-n", fcfg.max_n, "Largest instance order");
  fuzz->add_option("--min-girth", fcfg.min_girth, "girth_constrained: minimum girth");
  fuzz->add_option("--workers", fcfg.workers, "Worker threads (0 = all cores)");
  fuzz->add_option("--out-dir", out_dir, "Directory for shrunk counterexamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wog::cli::kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (fuzz->parsed()) {
      fcfg.family = *wog::parse_family(family);
      fcfg.bound = bound.value_or(env_bound().value_or(wog::kFuzzBound));
      if (fcfg.max_n > fcfg.bound) {
        std::cerr << "wog: --max-n " << fcfg.max_n << " exceeds the bound " << fcfg.bound << "\n";
        return wog::cli::kUsage;
      }
      result = wog::cli::cmd_fuzz(fcfg, out_dir);
    } else {
      opt.bound = bound.value_or(env_bound().value_or(wog::kDefaultBound));
      if (analyze->parsed()) result = wog::cli::cmd_analyze(path, opt);
      if (unmixed->parsed()) result = wog::cli::cmd_unmixed(path, opt);
      if (cm->parsed()) result = wog::cli::cmd_cm(path, opt);
      if (covers->parsed()) result = wog::cli::cmd_covers(path, opt);
      if (matchings->parsed()) result = wog::cli::cmd_matchings(path, opt);
      if (app.got_subcommand("ideal")) result = wog::cli::cmd_ideal(path, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "wog: " << path << ": " << e.what() << "\n";
    return wog::cli::kUsage;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

  if (format == "json") {
    result.report["timing_ms"] = elapsed.count();
    std::cout << result.report.dump(2) << "\n";
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
