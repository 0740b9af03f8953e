// Shrinks a small hypertree and prints the tree edge chosen for each hyperedge.

#include <iostream>

#include "hypershrink/hypershrink.hpp"

int main() {
  using namespace hypershrink;

  const Hypergraph h = make_hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {1, 5}, {0, 2, 5, 4}, {3, 5}});
  std::cout << (is_hypertree(h) ? "hypertree\n" : "not a hypertree\n");

  const auto g = random_hypertree(8, 3, 42, 0.8);
  const auto s = shrink_hypertree(g.hypergraph);
  for (std::size_t i = 0; i < g.hypergraph.edges.size(); ++i) {
    const auto& e = s.tree[s.assignment[i]];
    std::cout << "{";
    for (std::size_t j = 0; j < g.hypergraph.edges[i].size(); ++j)
      std::cout << (j ? ", " : "") << g.hypergraph.edges[i][j];
    std::cout << "} -> " << e.u << " -- " << e.v << "\n";
  }
  for (const auto& line : verification_summary(verify_shrinking(g.hypergraph, s)))
    std::cout << line << "\n";
}
