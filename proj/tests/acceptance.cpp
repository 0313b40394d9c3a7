// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// executable criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

using namespace testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s  %s  [%s]\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// --- criterion 1 ----------------------------------------------------------

void figures() {
  const auto t0 = Clock::now();
  struct Expect {
    const char* name;
    bool unmixed;
    std::optional<bool> cm;
  };
  const std::vector<Expect> expect = {{"fig1_left", false, std::nullopt},
                                      {"fig1_right", false, std::nullopt},
                                      {"fig2_left", true, false},
                                      {"fig2_right", true, false},
                                      {"fig3", true, true}};
  bool ok = true;
  std::string detail;
  for (const Expect& e : expect) {
    const auto d = load_fixture(e.name);
    const Verdict u = decide_unmixed(d).verdict;
    const Verdict c = decide_cm(d).verdict;
    const bool oracle = unmixed_by_strong_covers(d).unmixed;
    bool good = u == (e.unmixed ? Verdict::holds : Verdict::fails) && oracle == e.unmixed;
    if (e.cm) good = good && c == (*e.cm ? Verdict::holds : Verdict::fails);
    ok = ok && good;
    detail += std::string(e.name) + " unmixed=" + to_string(u) + " cm=" + to_string(c) + "; ";
  }
  const double s = seconds_since(t0);
  report(1, ok && s < 1.0, "figure fixtures reproduce the captions", detail + fmt_seconds(s));
}

// --- criteria 2, 4, 5, 6, 7 share one fuzz corpus ---------------------------

struct Corpus {
  std::vector<FuzzRecord> records;
  /// Records whose oracle verdict differs from the subset-scan oracle.
  std::size_t brute_mismatches = 0;
  double seconds = 0;
};

Corpus fuzz_corpus() {
  const auto t0 = Clock::now();
  Corpus c;
  const struct {
    Family family;
    std::size_t count;
    std::uint64_t seed;
    std::size_t max_n;
  } runs[] = {{Family::whisker, 1000, 7, 10},
              {Family::bipartite, 1000, 11, 10},
              {Family::girth_constrained, 200, 3, 12}};
  for (const auto& r : runs) {
    FuzzConfig cfg;
    cfg.family = r.family;
    cfg.count = r.count;
    cfg.seed = r.seed;
    cfg.max_n = r.max_n;
    cfg.min_girth = 8;
    cfg.bound = kFuzzBound;
    auto summary = run_campaign(cfg);
    for (std::size_t i = 0; i < summary.records.size(); ++i) {
      const auto [seed, rc] = campaign_instance(cfg, i);
      if (brute::unmixed(random_instance(rc, seed)) != summary.records[i].oracle_unmixed) {
        ++c.brute_mismatches;
      }
      c.records.push_back(std::move(summary.records[i]));
    }
  }
  c.seconds = seconds_since(t0);
  return c;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

/// Instances where any of `invariants` was exercised, and anomalies among them.
std::pair<std::size_t, std::size_t> tally(const Corpus& c, const std::set<std::string>& invariants,
                                          bool every_instance = false) {
  std::size_t exercised = 0, bad = 0;
  for (const FuzzRecord& r : c.records) {
    bool ex = every_instance;
    for (const auto& inv : invariants) ex = ex || has(r.exercised, inv);
    bool anomalous = false;
    for (const Anomaly& a : r.anomalies) {
      anomalous = anomalous || invariants.count(a.invariant) > 0 || a.invariant == "instance-error";
    }
    exercised += ex ? 1 : 0;
    bad += anomalous ? 1 : 0;
  }
  return {exercised, bad};
}

void oracle_equivalence(const Corpus& c) {
  std::map<std::string, std::size_t> per_family;
  std::size_t girth_ok = 0, girth_total = 0;
  for (const FuzzRecord& r : c.records) ++per_family[to_string(r.family)];
  // girth of the girth-constrained corpus is re-derived from the records' seeds
  FuzzConfig gc;
  gc.family = Family::girth_constrained;
  gc.seed = 3;
  gc.max_n = 12;
  gc.min_girth = 8;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto [seed, rc] = campaign_instance(gc, i);
    const auto gi = girth(underlying_graph(random_instance(rc, seed)));
    ++girth_total;
    girth_ok += (!gi || *gi >= 8) ? 1 : 0;
  }
  const auto [gated, bad] = tally(c, {"unmixed-equivalence"});
  const bool sizes = per_family["whisker"] >= 1000 && per_family["bipartite"] >= 1000 &&
                     per_family["girth_constrained"] >= 200 && girth_ok == girth_total;
  report(2, sizes && bad == 0 && c.brute_mismatches == 0 && gated > 0 && c.seconds < 300,
         "criteria agree with the strong-cover oracle inside the gates",
         std::to_string(c.records.size()) + " instances, " + std::to_string(gated) + " gated, " +
             std::to_string(bad) + " disagreements, " + std::to_string(c.brute_mismatches) +
             " oracle/subset-scan mismatches, girth>=8 on " + std::to_string(girth_ok) + "/" +
             std::to_string(girth_total) + ", " + fmt_seconds(c.seconds));
}

void corollaries(const Corpus& c) {
  const auto [n, bad] = tally(c, {"unmixed-cm-equivalence"});
  report(4, bad == 0 && n > 0, "unmixed == cm for Konig without 4-cycles or girth > 7",
         std::to_string(n) + " instances in scope, " + std::to_string(bad) + " violations");
}

void weight_cap(const Corpus& c) {
  std::size_t heavy = 0;
  for (const FuzzRecord& r : c.records) heavy += has(r.exercised, "weight-cap-invariance") ? 1 : 0;
  const auto [n, bad] = tally(c, {"weight-cap-invariance"}, true);
  report(5, bad == 0 && heavy == c.records.size(),
         "verdicts invariant under capping and inflating weights",
         std::to_string(n) + " instances, " + std::to_string(bad) + " violations");
}

void necessary_conditions(const Corpus& c) {
  std::size_t cm_true = 0;
  for (const FuzzRecord& r : c.records) cm_true += r.cm == Verdict::holds ? 1 : 0;
  const auto [minimal, bad1] = tally(c, {"strong-covers-minimal", "cm-implies-unmixed"});
  const auto [leaf, bad2] = tally(c, {"degree-one-vertex"});
  report(6, bad1 == 0 && bad2 == 0 && cm_true > 0 && minimal == cm_true,
         "cm=true implies minimal strong covers and a degree-1 vertex",
         std::to_string(cm_true) + " cm=true instances, " + std::to_string(leaf) +
             " with the degree-1 hypothesis, " + std::to_string(bad1 + bad2) + " violations");
}

void lemmas(const Corpus& c) {
  const auto [n, bad] = tally(c, {"no-common-neighbour", "partners-of-common-neighbours",
                                  "partner-neighbourhood-inclusion"});
  const auto [heavy, bad_heavy] = tally(c, {"heavy-in-neighbour-exclusion"});
  report(7, bad == 0 && bad_heavy == 0 && n > 0 && heavy > 0,
         "lemma checks hold on every certifying matching",
         std::to_string(n) + " certified instances, " + std::to_string(heavy) +
             " unmixed certificates, " + std::to_string(bad + bad_heavy) + " violations");
}

// --- criterion 3 ----------------------------------------------------------

struct FavaronTally {
  std::size_t graphs = 0, positives = 0, disagreements = 0;
};

bool connected(const SimpleGraph& g) { return component_sets(g).size() == 1; }

void favaron_one(const SimpleGraph& g, FavaronTally& t) {
  const bool a = is_very_well_covered(g);
  bool any = false, some = false, all = true;
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    any = true;
    const bool p = has_property_p(g, m).holds;
    some = some || p;
    all = all && p;
  }
  const bool b = some;
  const bool c = any && all;
  ++t.graphs;
  t.positives += a ? 1 : 0;
  if (a != b || b != c) ++t.disagreements;
}

void favaron() {
  const auto t0 = Clock::now();
  FavaronTally exhaustive, sampled;
  for (std::size_t n = 4; n <= 6; ++n) {
    std::vector<UndirectedEdge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<UndirectedEdge> es;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) es.push_back(pairs[i]);
      }
      const SimpleGraph g(n, es);
      if (connected(g)) favaron_one(g, exhaustive);
    }
  }
  Rng rng(2026);
  while (sampled.graphs < 12000) {
    const std::size_t n = 7 + rng.below(2);
    SimpleGraph g;
    if (n == 8 && rng.chance(0.3)) {
      const auto base = random_simple(rng, 4, rng.unit());
      g = SimpleGraph(8, attach_whiskers(4, {base.edges().begin(), base.edges().end()}));
    } else {
      g = random_simple(rng, n, 0.15 + 0.75 * rng.unit());
    }
    if (connected(g)) favaron_one(g, sampled);
  }
  report(3, exhaustive.disagreements == 0 && sampled.disagreements == 0,
         "very well-covered <=> some perfect matching has (P) <=> all do",
         "exhaustive n=4..6: " + std::to_string(exhaustive.graphs) + " connected graphs (" +
             std::to_string(exhaustive.positives) + " very well-covered); sampled n=7..8: " +
             std::to_string(sampled.graphs) + " (" + std::to_string(sampled.positives) +
             " very well-covered); " + std::to_string(exhaustive.disagreements + sampled.disagreements) +
             " disagreements, " + fmt_seconds(seconds_since(t0)));
}

}  // namespace

int main() {
  figures();
  const Corpus corpus = fuzz_corpus();
  oracle_equivalence(corpus);
  favaron();
  corollaries(corpus);
  weight_cap(corpus);
  necessary_conditions(corpus);
  lemmas(corpus);
  std::printf(
      "criterion 8: INFO  depth of R/I(D) is not computed; criteria 1-7 are the combinatorial "
      "substitute  [not an executable check]\n");
  std::printf("%s: %d executable criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
