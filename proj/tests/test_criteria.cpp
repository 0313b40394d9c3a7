#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

namespace {

Matching pm(const SimpleGraph& g, std::vector<std::pair<int, int>> pairs) {
  std::vector<UndirectedEdge> es;
  for (auto [a, b] : pairs) es.emplace_back(Vertex(a - 1), Vertex(b - 1));
  return Matching(g, es);
}

/// A false verdict's witness must be confirmed by the primitives.
void check_witness(const WeightedOrientedGraph& d, const Decision& dec) {
  const SimpleGraph g = underlying_graph(d);
  REQUIRE(dec.witness.has_value());
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, NoPerfectMatching>) {
          // counts refer to the component that failed
          CHECK(2 * w.matching_number < w.order);
          CHECK(w.matching_number <= brute::matching_number(g));
        } else if constexpr (std::is_same_v<T, PropertyPViolation>) {
          CHECK(g.adjacent(w.a, w.b));
          CHECK(g.adjacent(w.a2, w.b2));
          CHECK((w.a == w.a2 || !g.adjacent(w.a, w.a2)));
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          CHECK(g.adjacent(w.a, w.b));
          CHECK(g.adjacent(w.b, w.c));
          CHECK(g.adjacent(w.c, w.d));
          CHECK(g.adjacent(w.d, w.a));
        } else {
          CHECK(d.weight(w.a) > 1);
          CHECK(d.has_edge(w.a, w.b_prime));
          CHECK(g.adjacent(w.b, w.offending));
          CHECK_FALSE(d.has_edge(w.a, w.offending));
        }
      },
      *dec.witness);
}

}  // namespace

TEST_CASE("condition (2)", "[criteria]") {
  const auto d1 = load_fixture("fig1_left");
  const auto g1 = underlying_graph(d1);
  const auto c = check_condition2(d1, pm(g1, {{1, 4}, {2, 3}, {5, 6}}));
  CHECK_FALSE(c.holds);
  REQUIRE(c.violation.has_value());
  CHECK(c.violation->a == d1.index_of("x5"));
  CHECK(c.violation->b_prime == d1.index_of("x4"));
  CHECK(c.violation->b == d1.index_of("x1"));
  CHECK(c.violation->offending == d1.index_of("x2"));

  const auto unit = orient_up(path(4));
  CHECK(check_condition2(unit, Matching(path(4), {{0, 1}, {2, 3}})).holds);

  const auto d3 = load_fixture("fig3");
  CHECK(check_condition2(d3, pm(underlying_graph(d3), {{6, 1}, {7, 2}, {5, 4}, {3, 8}})).holds);
}

TEST_CASE("figure verdicts", "[criteria]") {
  const auto fig1l = load_fixture("fig1_left");
  const auto u1 = decide_unmixed(fig1l);
  CHECK(u1.verdict == Verdict::fails);
  CHECK(u1.theorem == "konig-unmixed");
  REQUIRE(u1.witness.has_value());
  CHECK(std::holds_alternative<Condition2Violation>(*u1.witness));
  check_witness(fig1l, u1);
  CHECK(decide_cm(fig1l).verdict == Verdict::fails);

  CHECK(decide_unmixed(load_fixture("fig1_right")).verdict == Verdict::fails);

  const auto fig2l = load_fixture("fig2_left");
  CHECK(decide_unmixed(fig2l).verdict == Verdict::holds);
  const auto cm2 = decide_cm(fig2l);
  CHECK(cm2.verdict == Verdict::fails);
  REQUIRE(cm2.witness.has_value());
  REQUIRE(std::holds_alternative<FourCycle>(*cm2.witness));
  const auto fc = std::get<FourCycle>(*cm2.witness);
  CHECK(VertexSet({fc.a, fc.b, fc.c, fc.d}) == xs({2, 3, 5, 6}));
  // every perfect matching of this graph runs into the 4-cycle
  CHECK(cm2.matchings_examined == enumerate_perfect_matchings(underlying_graph(fig2l)).size());
  for (const auto& f : cm2.failures) CHECK(std::holds_alternative<FourCycle>(f.reason));

  const auto fig2r = load_fixture("fig2_right");
  CHECK(decide_unmixed(fig2r).verdict == Verdict::holds);
  CHECK(decide_cm(fig2r).verdict == Verdict::fails);

  const auto fig3 = load_fixture("fig3");
  CHECK(decide_unmixed(fig3).verdict == Verdict::holds);
  const auto cm3 = decide_cm(fig3);
  CHECK(cm3.verdict == Verdict::holds);
  CHECK(cm3.theorem == "konig-cm");
  const std::vector<UndirectedEdge> cert = {{0, 5}, {1, 6}, {2, 7}, {3, 4}};
  CHECK(cm3.certificate == cert);
}

TEST_CASE("single edge is unmixed and Cohen-Macaulay", "[criteria]") {
  const auto d = digraph(2, {{1, 2}});
  CHECK(decide_unmixed(d).verdict == Verdict::holds);
  CHECK(decide_cm(d).verdict == Verdict::holds);
}

TEST_CASE("weight capping leaves the CM verdict alone", "[criteria]") {
  auto spec = to_spec(load_fixture("fig2_right"));
  for (auto& v : spec.vertices) {
    if (v.id == "x3") v.weight = 7;
  }
  const auto heavy = build_graph(spec);
  CHECK(heavy.weight(heavy.index_of("x3")) == 7);
  CHECK(decide_cm(heavy).verdict == decide_cm(load_fixture("fig2_right")).verdict);
  CHECK(decide_unmixed(heavy).verdict == Verdict::holds);
}

TEST_CASE("gates refuse rather than guess", "[criteria]") {
  const auto tri = orient_up(cycle(3));
  const auto u = decide_unmixed(tri);
  CHECK(u.verdict == Verdict::not_applicable);
  CHECK(u.theorem == "none");
  CHECK_FALSE(u.notes.empty());
  CHECK(decide_cm(tri).verdict == Verdict::not_applicable);

  // C5 is not Konig and has a 5-cycle, so both gates stay shut.
  CHECK(decide_cm(orient_up(cycle(5))).verdict == Verdict::not_applicable);
  CHECK(decide_unmixed(orient_up(cycle(5))).verdict == Verdict::not_applicable);

  // C7 is not Konig and has no 3- or 5-cycle: only the CM gate opens.
  const auto c7 = orient_up(cycle(7));
  CHECK(decide_cm(c7).verdict == Verdict::fails);
  CHECK(decide_cm(c7).theorem == "cycle-free-cm");
  CHECK(decide_unmixed(c7).verdict == Verdict::not_applicable);

  CHECK_THROWS_AS(decide_unmixed(orient_up(SimpleGraph(30))), BoundExceeded);
}

TEST_CASE("applicability", "[criteria]") {
  const auto h1 = applicability(load_fixture("fig1_left"));
  CHECK(h1.konig);
  CHECK(h1.girth == 4);
  CHECK(h1.no357);
  CHECK(h1.no35);
  CHECK_FALSE(h1.no4cycles);

  const auto tri = applicability(cycle(3));
  CHECK_FALSE(tri.konig);
  CHECK(tri.girth == 3);

  const auto tree = applicability(path(5));
  CHECK_FALSE(tree.girth.has_value());
  CHECK(tree.girth_gt7);
}

TEST_CASE("disconnected input is decided per component", "[criteria]") {
  // isolated x1, then edge x2->x3
  const auto d = digraph(3, {{2, 3}});
  const auto u = decide_unmixed(d);
  CHECK(u.verdict == Verdict::holds);
  CHECK(u.certificate == std::vector<UndirectedEdge>{{1, 2}});
  REQUIRE(u.components.size() == 1);
  CHECK(u.components[0].scope == xs({2, 3}));

  CHECK(decide_cm(digraph(2, {})).verdict == Verdict::holds);
  CHECK(decide_cm(digraph(2, {})).theorem == "isolated-vertices");

  // an edge next to fig1_left: the failing component's witness is lifted
  auto spec = to_spec(load_fixture("fig1_left"));
  spec.vertices.push_back({"y1", 1});
  spec.vertices.push_back({"y2", 1});
  spec.edges.emplace_back("y1", "y2");
  const auto both = build_graph(spec);
  const auto bu = decide_unmixed(both);
  CHECK(bu.verdict == Verdict::fails);
  CHECK(bu.components.size() == 2);
  check_witness(both, bu);
  const auto w = std::get<Condition2Violation>(*bu.witness);
  CHECK(both.label(w.a) == "x5");

  // triangle next to an edge: refusal propagates, failure would dominate
  const auto mixed = digraph(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}});
  CHECK(decide_unmixed(mixed).verdict == Verdict::not_applicable);
}

TEST_CASE("first-matching-only stops the CM search early", "[criteria]") {
  const auto d = load_fixture("fig2_left");
  const auto full = decide_cm(d);
  const auto first = decide_cm(d, {kDefaultBound, true});
  CHECK(first.matchings_examined == 1);
  CHECK(full.matchings_examined >= first.matchings_examined);
  CHECK(first.verdict == Verdict::fails);
}

TEST_CASE("deciders agree with the brute-force oracle", "[criteria][property]") {
  Rng rng(31337);
  std::size_t gated = 0, positives = 0;
  for (int iter = 0; iter < 600; ++iter) {
    const std::size_t m = 1 + rng.below(5);
    SimpleGraph g;
    if (rng.chance(0.5)) {
      const auto base = random_simple(rng, m, 0.5);
      g = SimpleGraph(2 * m, attach_whiskers(m, {base.edges().begin(), base.edges().end()}));
    } else {
      g = random_simple(rng, 2 + rng.below(8), 0.2 + 0.5 * rng.unit());
    }
    const auto d = random_orientation(rng, g, 0.4, 2 + Weight(rng.below(4)));
    const auto u = decide_unmixed(d);
    const auto cm = decide_cm(d);
    if (u.verdict != Verdict::not_applicable) {
      ++gated;
      const bool truth = brute::unmixed(d);
      positives += truth ? 1 : 0;
      CHECK(truth == (u.verdict == Verdict::holds));
      if (u.verdict == Verdict::fails) check_witness(d, u);
    }
    if (cm.verdict == Verdict::holds) CHECK(u.verdict == Verdict::holds);
    if (cm.verdict == Verdict::fails) check_witness(d, cm);
  }
  CHECK(gated > 300);
  CHECK(positives > 50);
}
