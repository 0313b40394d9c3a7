// Builds the Cohen-Macaulay example graph in code and asks both deciders about it.

#include <iostream>

#include "wog/wog.hpp"

int main() {
  wog::GraphSpec spec;
  spec.name = "example";
  for (int i = 1; i <= 8; ++i) spec.vertices.push_back({"x" + std::to_string(i), 1});
  spec.vertices[0].weight = 2;
  spec.vertices[1].weight = 2;
  for (auto [t, h] : {std::pair{7, 2}, {6, 1}, {2, 5}, {1, 3}, {1, 5}, {5, 4}, {1, 2}, {3, 4},
                      {2, 3}, {3, 8}}) {
    spec.edges.emplace_back("x" + std::to_string(t), "x" + std::to_string(h));
  }
  const wog::WeightedOrientedGraph d = wog::build_graph(spec);

  const wog::Decision unmixed = wog::decide_unmixed(d);
  const wog::Decision cm = wog::decide_cm(d);
  std::cout << "unmixed:\n" << wog::decision_text(d, unmixed);
  std::cout << "cohen-macaulay:\n" << wog::decision_text(d, cm);

  const wog::StrongCoverSummary oracle = wog::unmixed_by_strong_covers(d);
  std::cout << "strong covers by size:";
  for (auto [size, count] : oracle.histogram) std::cout << ' ' << size << ':' << count;
  std::cout << '\n';
}
