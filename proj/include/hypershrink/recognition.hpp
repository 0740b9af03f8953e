#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "rainbow.hpp"

namespace hypershrink {

struct HypertreeCheck {
  bool hypertree = false;
  // A nonempty X containing more than |X| - 1 hyperedges.
  std::optional<std::vector<Vertex>> violating_set;
  // Set when every X passes but |E| != n - 1.
  bool edge_count_mismatch = false;
};

inline constexpr std::size_t default_vertex_limit = 20;

/// Decides hypertree-ness straight from the definition: every nonempty X
/// contains at most |X| - 1 hyperedges, with equality for X = V. Exponential
/// in n; refuses inputs with more than `vertex_limit` vertices.
inline HypertreeCheck is_hypertree_bruteforce(const Hypergraph& h,
                                              std::size_t vertex_limit = default_vertex_limit) {
  require_valid(h);
  if (h.n > vertex_limit || h.n >= 63)
    throw limit_exceeded("is_hypertree_bruteforce: " + std::to_string(h.n) +
                         " vertices exceeds the exhaustive limit of " +
                         std::to_string(vertex_limit));
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }

  HypertreeCheck result;
  const std::uint64_t subsets = std::uint64_t{1} << h.n;
  for (std::uint64_t x = 1; x < subsets; ++x) {
    std::size_t inside = 0;
    for (std::uint64_t e : masks)
      if ((e & ~x) == 0) ++inside;
    if (inside + 1 > static_cast<std::size_t>(std::popcount(x))) {
      std::vector<Vertex> xs;
      for (Vertex v = 0; v < h.n; ++v)
        if ((x >> v) & 1U) xs.push_back(v);
      result.violating_set = std::move(xs);
      return result;
    }
  }
  if (h.n == 0 || h.edges.size() != h.n - 1) {
    result.edge_count_mismatch = true;
    return result;
  }
  result.hypertree = true;
  return result;
}

/// A hypergraph with n - 1 hyperedges is a hypertree iff its clique
/// expansion (hyperedge i as a complete graph in colour i) has a rainbow
/// spanning tree: such a tree takes one pair from every hyperedge.
inline bool is_hypertree(const Hypergraph& h) {
  require_valid(h);
  if (h.n == 0 || h.edges.size() != h.n - 1) return false;
  return rainbow_spanning_tree(clique_graph(h)).has_value();
}

}  // namespace hypershrink
