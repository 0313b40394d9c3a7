#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "wog/covers.hpp"
#include "wog/criteria.hpp"
#include "wog/io.hpp"
#include "wog/matching.hpp"
#include "wog/oracle.hpp"
#include "wog/report.hpp"

namespace wog::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses. A false verdict is a successful run.
enum ExitCode : int { kOk = 0, kUsage = 2, kDisagreement = 3 };

struct CommandOptions {
  std::size_t bound = kDefaultBound;
  bool oracle = false;
  bool first_matching_only = false;
  bool strict = false;
  bool strong = false;   ///< covers: strong instead of minimal
  bool check_p = false;  ///< matchings: evaluate property (P)
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json report;
  std::string text;
};

namespace detail {

template <class F>
nlohmann::json guarded(F&& f) {
  try {
    return f();
  } catch (const BoundExceeded& e) {
    return {{"error", e.what()}};
  }
}

inline WeightPolicy policy_for(const CommandOptions& opt, WeightPolicy fallback) {
  return opt.strict ? WeightPolicy::strict : fallback;
}

inline nlohmann::json envelope(const std::string& command, const WeightedOrientedGraph& d,
                               nlohmann::json result) {
  return {{"tool", "wog"},
          {"version", kVersion},
          {"command", command},
          {"input", digest_json(d)},
          {"normalization", std::vector<std::string>(d.construction_log().begin(),
                                                     d.construction_log().end())},
          {"result", std::move(result)}};
}

inline std::string header_text(const std::string& command, const WeightedOrientedGraph& d) {
  std::string out = command + ": " + (d.name().empty() ? "(unnamed)" : d.name()) + " (" +
                    std::to_string(d.order()) + " vertices, " + std::to_string(d.size()) +
                    " edges)\n";
  for (const std::string& line : d.construction_log()) out += "  " + line + "\n";
  return out;
}

inline nlohmann::json oracle_json(const WeightedOrientedGraph& d, std::size_t bound) {
  return guarded([&]() -> nlohmann::json {
    const StrongCoverSummary s = unmixed_by_strong_covers(d, bound);
    return {{"unmixed", s.unmixed},
            {"histogram", histogram_json(s.histogram)},
            {"strong_covers_minimal", strong_covers_are_minimal(d, bound)}};
  });
}

}  // namespace detail

/// Every gate, invariant, verdict and (within the bound) oracle result for one graph.
inline CommandResult cmd_analyze(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::analysis));
  const SimpleGraph g = underlying_graph(d);
  const DecisionOptions dopt{opt.bound, opt.first_matching_only};
  nlohmann::json result;
  result["hypotheses"] = detail::guarded([&] { return hypotheses_json(applicability(g, opt.bound)); });
  result["tau"] = detail::guarded([&] { return nlohmann::json(tau(g, opt.bound)); });
  result["nu"] = matching_number(g);
  result["girth"] = girth_json(girth(g));
  result["well_covered"] = detail::guarded([&] { return nlohmann::json(is_well_covered(g, opt.bound)); });
  result["very_well_covered"] =
      detail::guarded([&] { return nlohmann::json(is_very_well_covered(g, opt.bound)); });
  result["unmixed"] = detail::guarded([&] { return decision_json(d, decide_unmixed(d, dopt)); });
  result["cm"] = detail::guarded([&] { return decision_json(d, decide_cm(d, dopt)); });
  result["oracle"] = detail::oracle_json(d, opt.bound);

  CommandResult out;
  out.report = detail::envelope("analyze", d, result);
  std::string& t = out.text;
  t = detail::header_text("analyze", d);
  auto scalar = [](const nlohmann::json& j) {
    return j.is_object() && j.contains("error") ? "error: " + j["error"].get<std::string>()
                                                : j.dump();
  };
  t += "  tau: " + scalar(result["tau"]) + "\n";
  t += "  nu: " + scalar(result["nu"]) + "\n";
  t += "  girth: " + scalar(result["girth"]) + "\n";
  t += "  well-covered: " + scalar(result["well_covered"]) + "\n";
  t += "  very well-covered: " + scalar(result["very_well_covered"]) + "\n";
  t += "  hypotheses: " + result["hypotheses"].dump() + "\n";
  for (const char* key : {"unmixed", "cm"}) {
    const nlohmann::json& dec = result[key];
    t += std::string("  ") + key + ": " +
         (dec.contains("error") ? "error: " + dec["error"].get<std::string>()
                                : dec["verdict"].get<std::string>() + " (" +
                                      dec["theorem"].get<std::string>() + ")") +
         "\n";
  }
  t += "  oracle: " + result["oracle"].dump() + "\n";
  return out;
}

/// Unmixedness only. `--oracle` forces strong-cover enumeration; when the
/// structural criteria do not apply the oracle is consulted within the bound.
inline CommandResult cmd_unmixed(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::analysis));
  CommandResult out;
  nlohmann::json result;
  out.text = detail::header_text("unmixed", d);
  auto run_oracle = [&](const std::string& why) {
    return detail::guarded([&]() -> nlohmann::json {
      const StrongCoverSummary s = unmixed_by_strong_covers(d, opt.bound);
      out.text += "  verdict: " + std::string(s.unmixed ? "true" : "false") +
                  "\n  by: strong-cover-oracle\n  histogram: " + histogram_json(s.histogram).dump() +
                  "\n";
      return {{"verdict", s.unmixed ? "true" : "false"},
              {"theorem", "strong-cover-oracle"},
              {"histogram", histogram_json(s.histogram)},
              {"reason", why}};
    });
  };
  if (opt.oracle) {
    result["unmixed"] = run_oracle("requested with --oracle");
  } else {
    result["unmixed"] = detail::guarded([&]() -> nlohmann::json {
      const Decision dec = decide_unmixed(d, DecisionOptions{opt.bound, opt.first_matching_only});
      out.text += decision_text(d, dec);
      return decision_json(d, dec);
    });
    if (result["unmixed"].value("verdict", "") == "not_applicable") {
      result["fallback"] = run_oracle("structural criteria not applicable");
    }
  }
  if (result["unmixed"].contains("error")) {
    out.text += "  error: " + result["unmixed"]["error"].get<std::string>() + "\n";
  }
  out.report = detail::envelope("unmixed", d, result);
  return out;
}

inline CommandResult cmd_cm(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::analysis));
  CommandResult out;
  out.text = detail::header_text("cm", d);
  nlohmann::json result;
  result["cm"] = detail::guarded([&]() -> nlohmann::json {
    const Decision dec = decide_cm(d, DecisionOptions{opt.bound, opt.first_matching_only});
    out.text += decision_text(d, dec);
    return decision_json(d, dec);
  });
  if (result["cm"].contains("error")) {
    out.text += "  error: " + result["cm"]["error"].get<std::string>() + "\n";
  }
  out.report = detail::envelope("cm", d, result);
  return out;
}

/// Minimal covers (default) or strong covers, each with its L-partition.
inline CommandResult cmd_covers(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::analysis));
  CommandResult out;
  out.text = detail::header_text(opt.strong ? "covers --strong" : "covers --minimal", d);
  nlohmann::json result;
  result["kind"] = opt.strong ? "strong" : "minimal";
  result["covers"] = detail::guarded([&]() -> nlohmann::json {
    std::vector<CoverAnalysis> covers;
    if (opt.strong) {
      covers = enumerate_strong_covers(d, opt.bound);
    } else {
      for (VertexSet c : enumerate_minimal_covers(underlying_graph(d), opt.bound)) {
        covers.push_back(analyze_cover(d, c));
      }
    }
    nlohmann::json list = nlohmann::json::array();
    for (const CoverAnalysis& a : covers) {
      list.push_back(cover_json(d, a));
      out.text += "  " + set_text(d, a.cover) + "  L1=" + set_text(d, a.l1) +
                  " L2=" + set_text(d, a.l2) + " L3=" + set_text(d, a.l3) +
                  (a.strong.value_or(false) ? " strong" : " not-strong") + "\n";
    }
    return list;
  });
  if (result["covers"].is_object()) {
    out.text += "  error: " + result["covers"]["error"].get<std::string>() + "\n";
  } else {
    result["count"] = result["covers"].size();
  }
  out.report = detail::envelope("covers", d, result);
  return out;
}

/// A maximum matching and every perfect matching, optionally with (P) checks.
inline CommandResult cmd_matchings(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::analysis));
  const SimpleGraph g = underlying_graph(d);
  CommandResult out;
  out.text = detail::header_text("matchings", d);
  nlohmann::json result;
  const Matching max = maximum_matching(g);
  result["maximum_matching"] = edges_json(d, max.edges());
  result["nu"] = max.size();
  out.text += "  maximum matching: " + edges_text(d, max.edges()) + "\n";
  result["perfect_matchings"] = detail::guarded([&]() -> nlohmann::json {
    nlohmann::json list = nlohmann::json::array();
    for_each_perfect_matching(g, opt.bound, [&](const Matching& m) {
      nlohmann::json entry = {{"edges", edges_json(d, m.edges())}};
      std::string line = "  perfect: " + edges_text(d, m.edges());
      if (opt.check_p) {
        const PropertyPCheck pp = has_property_p(g, m);
        entry["property_p"] = pp.holds;
        line += pp.holds ? "  (P) holds" : "  (P) fails";
        if (pp.violation) {
          entry["violation"] = witness_json(d, *pp.violation);
          line += ": " + witness_text(d, *pp.violation);
        }
        entry["four_cycles"] = four_cycles_with_two_matching_edges(g, m).size();
      }
      list.push_back(std::move(entry));
      out.text += line + "\n";
      return true;
    });
    return list;
  });
  out.report = detail::envelope("matchings", d, result);
  return out;
}

/// Generators of I(D), one `x_i*x_j^e` per line. Sink weights are kept.
inline CommandResult cmd_ideal(const std::filesystem::path& path, const CommandOptions& opt) {
  const WeightedOrientedGraph d = load_graph(path, detail::policy_for(opt, WeightPolicy::ideal));
  CommandResult out;
  nlohmann::json gens = nlohmann::json::array();
  for (const MonomialGenerator& m : edge_ideal_generators(d)) {
    const std::string s = format_generator(d, m);
    gens.push_back(s);
    out.text += s + "\n";
  }
  out.report = detail::envelope("ideal", d, {{"generators", gens}});
  return out;
}

/// Cross-checks `count` seeded instances; shrunk counterexamples are written
/// to `out_dir` and the exit status is kDisagreement when any check failed.
inline CommandResult cmd_fuzz(const FuzzConfig& cfg, const std::filesystem::path& out_dir) {
  const CampaignSummary summary = run_campaign(cfg);
  CommandResult out;
  nlohmann::json records = nlohmann::json::array();
  std::size_t observations = 0;
  for (const FuzzRecord& r : summary.records) {
    out.text += r.line() + "\n";
    nlohmann::json rec = {{"seed", r.seed},
                          {"family", to_string(r.family)},
                          {"n", r.n},
                          {"edges", r.edges},
                          {"oracle_unmixed", r.oracle_unmixed},
                          {"unmixed", to_string(r.unmixed)},
                          {"cm", to_string(r.cm)},
                          {"agreement", r.agreement}};
    if (!r.anomalies.empty()) {
      nlohmann::json an = nlohmann::json::array();
      for (const Anomaly& a : r.anomalies) {
        an.push_back({{"invariant", a.invariant}, {"detail", a.detail}});
        out.text += "  anomaly " + a.invariant + ": " + a.detail + "\n";
      }
      rec["anomalies"] = an;
    }
    if (!r.observations.empty()) {
      rec["observations"] = r.observations;
      observations += r.observations.size();
    }
    if (r.counterexample) {
      std::filesystem::create_directories(out_dir);
      const auto file = out_dir / ("counterexample-" + std::to_string(r.seed) + ".json");
      save_graph(*r.counterexample, file);
      rec["counterexample"] = file.string();
      out.text += "  counterexample written to " + file.string() + "\n";
    }
    records.push_back(std::move(rec));
  }
  const std::size_t failures = summary.failures();
  out.text += "summary: family=" + std::string(to_string(cfg.family)) +
              " count=" + std::to_string(cfg.count) + " seed=" + std::to_string(cfg.seed) +
              " max_n=" + std::to_string(cfg.max_n) + " failures=" + std::to_string(failures) +
              " observations=" + std::to_string(observations) + "\n";
  out.report = {{"tool", "wog"},
                {"version", kVersion},
                {"command", "fuzz"},
                {"config",
                 {{"family", to_string(cfg.family)},
                  {"count", cfg.count},
                  {"seed", cfg.seed},
                  {"max_n", cfg.max_n},
                  {"bound", cfg.bound}}},
                {"result", {{"records", records}, {"failures", failures}, {"observations", observations}}}};
  out.exit_code = failures == 0 ? kOk : kDisagreement;
  return out;
}

}  // namespace wog::cli
