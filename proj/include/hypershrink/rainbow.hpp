#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "core.hpp"
#include "union_find.hpp"

namespace hypershrink {

using Colour = std::uint32_t;

struct ColouredEdge {
  Vertex u;
  Vertex v;
  Colour colour;

  friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
  friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

/// Graph on 0..n-1 with an arbitrary (not necessarily proper) edge colouring
/// by colour ids 0..colours-1. Parallel edges must differ in colour.
struct ColouredGraph {
  std::size_t n = 0;
  std::size_t colours = 0;
  std::vector<ColouredEdge> edges;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
};

inline bool is_valid(const ColouredGraph& g) {
  for (const auto& e : g.edges) {
    if (!(e.u < e.v) || e.v >= g.n || e.colour >= g.colours) return false;
  }
  auto sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline void require_valid(const ColouredGraph& g) {
  if (!is_valid(g)) throw std::invalid_argument("malformed coloured graph");
}

/// A rainbow spanning tree: edge_ids index into the source graph's edge list.
struct RainbowTree {
  std::vector<std::size_t> edge_ids;
  std::vector<ColouredEdge> edges;

  friend bool operator==(const RainbowTree&, const RainbowTree&) = default;
};

// -- expansions of a hypergraph -------------------------------------------------

/// One star per hyperarc: the head joined to each tail, all in colour i for
/// hyperarc i.
inline ColouredGraph star_graph(const DirectedHypergraph& d) {
  if (!heads_consistent(d)) throw std::invalid_argument("star_graph: inconsistent heads");
  ColouredGraph g{d.base.n, d.base.edges.size(), {}};
  for (EdgeIndex i = 0; i < d.base.edges.size(); ++i) {
    const Vertex h = d.heads[i];
    for (Vertex t : d.base.edges[i]) {
      if (t == h) continue;
      g.edges.push_back({std::min(h, t), std::max(h, t), static_cast<Colour>(i)});
    }
  }
  return g;
}

/// One monochromatic complete graph per hyperedge, colour i for hyperedge i.
inline ColouredGraph clique_graph(const Hypergraph& h) {
  ColouredGraph g{h.n, h.edges.size(), {}};
  for (EdgeIndex i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        g.edges.push_back({e[a], e[b], static_cast<Colour>(i)});
  }
  return g;
}

/// Connected components left after deleting every edge whose colour is in
/// `removed`.
inline std::size_t count_components_without(const ColouredGraph& g,
                                            std::span<const Colour> removed) {
  std::vector<char> gone(g.colours, 0);
  for (Colour c : removed) gone[c] = 1;
  UnionFind uf(g.n);
  for (const auto& e : g.edges)
    if (!gone[e.colour]) uf.unite(e.u, e.v);
  return uf.components();
}

// -- matroid intersection ---------------------------------------------------------

namespace detail {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Rooted spanning forest of the current independent set, for tree-path
// queries in the graphic matroid.
struct ForestIndex {
  std::vector<std::size_t> parent;       // parent vertex or npos at roots
  std::vector<std::size_t> parent_edge;  // ground-set id of the edge to parent
  std::vector<std::size_t> depth;
  std::vector<std::size_t> root;

  ForestIndex(const ColouredGraph& g, const std::vector<std::size_t>& members)
      : parent(g.n, npos), parent_edge(g.n, npos), depth(g.n, 0), root(g.n, npos) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.n);
    for (std::size_t id : members) {
      adj[g.edges[id].u].emplace_back(g.edges[id].v, id);
      adj[g.edges[id].v].emplace_back(g.edges[id].u, id);
    }
    std::queue<std::size_t> q;
    for (std::size_t s = 0; s < g.n; ++s) {
      if (root[s] != npos) continue;
      root[s] = s;
      q.push(s);
      while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        for (auto [y, id] : adj[x]) {
          if (root[y] != npos) continue;
          root[y] = s;
          parent[y] = x;
          parent_edge[y] = id;
          depth[y] = depth[x] + 1;
          q.push(y);
        }
      }
    }
  }

  // Ground-set ids on the forest path between a and b (same tree assumed).
  std::vector<std::size_t> path(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    while (depth[a] > depth[b]) { out.push_back(parent_edge[a]); a = parent[a]; }
    while (depth[b] > depth[a]) { out.push_back(parent_edge[b]); b = parent[b]; }
    while (a != b) {
      out.push_back(parent_edge[a]);
      out.push_back(parent_edge[b]);
      a = parent[a];
      b = parent[b];
    }
    return out;
  }
};

// One shortest augmenting path in the exchange graph of the graphic matroid
// (M1) and the colour partition matroid (M2). Arcs: y -> x when I - y + x is
// a forest, x -> y when I - y + x is rainbow. Sources: I + x is a forest.
// Sinks: I + x is rainbow. Returns the path as ground-set ids, or empty.
inline std::vector<std::size_t> shortest_augmenting_path(const ColouredGraph& g,
                                                         const std::vector<char>& in_set) {
  const std::size_t m = g.edges.size();
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < m; ++j)
    if (in_set[j]) members.push_back(j);

  ForestIndex forest(g, members);
  std::vector<std::size_t> colour_owner(g.colours, npos);
  for (std::size_t id : members) colour_owner[g.edges[id].colour] = id;

  std::vector<char> is_source(m, 0);
  std::vector<std::vector<std::size_t>> forest_arcs(m);  // y in I -> x not in I
  for (std::size_t x = 0; x < m; ++x) {
    if (in_set[x]) continue;
    const auto& e = g.edges[x];
    if (forest.root[e.u] != forest.root[e.v]) {
      is_source[x] = 1;
    } else {
      for (std::size_t y : forest.path(e.u, e.v)) forest_arcs[y].push_back(x);
    }
  }

  std::vector<std::size_t> pred(m, npos);
  std::vector<char> seen(m, 0);
  std::queue<std::size_t> q;
  for (std::size_t x = 0; x < m; ++x) {
    if (is_source[x]) {
      seen[x] = 1;
      q.push(x);
    }
  }
  while (!q.empty()) {
    std::size_t cur = q.front();
    q.pop();
    if (!in_set[cur]) {
      std::size_t owner = colour_owner[g.edges[cur].colour];
      if (owner == npos) {
        std::vector<std::size_t> path;
        for (std::size_t at = cur; at != npos; at = pred[at]) path.push_back(at);
        return path;
      }
      if (!seen[owner]) {
        seen[owner] = 1;
        pred[owner] = cur;
        q.push(owner);
      }
    } else {
      for (std::size_t x : forest_arcs[cur]) {
        if (seen[x]) continue;
        seen[x] = 1;
        pred[x] = cur;
        q.push(x);
      }
    }
  }
  return {};
}

}  // namespace detail

/// Maximum rainbow forest: a largest edge set that is both a forest and uses
/// each colour at most once. Returns sorted ground-set ids.
///
/// Starts from a greedy rainbow forest (edges scanned by colour, then
/// endpoints) and augments along shortest exchange-graph paths until no
/// augmenting path remains or the forest spans.
inline std::vector<std::size_t> max_rainbow_forest(const ColouredGraph& g) {
  require_valid(g);
  const std::size_t m = g.edges.size();
  const std::size_t target = g.n == 0 ? 0 : g.n - 1;
  std::vector<char> in_set(m, 0);
  std::size_t size = 0;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = g.edges[a];
    const auto& y = g.edges[b];
    return std::tie(x.colour, x.u, x.v, a) < std::tie(y.colour, y.u, y.v, b);
  });
  UnionFind uf(g.n);
  std::vector<char> colour_used(g.colours, 0);
  for (std::size_t id : order) {
    const auto& e = g.edges[id];
    if (colour_used[e.colour] || uf.connected(e.u, e.v)) continue;
    uf.unite(e.u, e.v);
    colour_used[e.colour] = 1;
    in_set[id] = 1;
    ++size;
  }

  while (size < target) {
    auto path = detail::shortest_augmenting_path(g, in_set);
    if (path.empty()) break;
    for (std::size_t id : path) in_set[id] = !in_set[id];
    ++size;
  }

  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m; ++j)
    if (in_set[j]) out.push_back(j);
  return out;
}

/// A spanning tree using every colour at most once, if one exists.
inline std::optional<RainbowTree> rainbow_spanning_tree(const ColouredGraph& g) {
  if (g.n == 0) throw std::invalid_argument("rainbow_spanning_tree: empty vertex set");
  auto ids = max_rainbow_forest(g);
  if (ids.size() != g.n - 1) return std::nullopt;
  RainbowTree t;
  t.edge_ids = std::move(ids);
  for (std::size_t id : t.edge_ids) t.edges.push_back(g.edges[id]);
  return t;
}

/// Checks that `tree` is a rainbow spanning tree of a graph on n vertices.
inline bool is_rainbow_spanning_tree(std::size_t n, std::span<const ColouredEdge> tree) {
  if (n == 0 || tree.size() != n - 1) return false;
  UnionFind uf(n);
  std::vector<Colour> colours;
  for (const auto& e : tree) {
    if (e.u >= n || e.v >= n || !uf.unite(e.u, e.v)) return false;
    colours.push_back(e.colour);
  }
  std::sort(colours.begin(), colours.end());
  return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

// -- exhaustive condition check ----------------------------------------------------

struct RainbowCondition {
  bool satisfied = true;
  std::vector<Colour> violating;  // the colour set R when not satisfied
  std::size_t components = 0;     // components left after deleting R
};

inline constexpr std::size_t default_colour_limit = 20;

/// Tries every colour set R with |R| <= n - 2 and reports the first one (in
/// increasing bitmask order) whose removal leaves more than |R| + 1
/// components. A graph has a rainbow spanning tree exactly when none exists.
inline RainbowCondition check_rainbow_condition(const ColouredGraph& g,
                                                std::size_t colour_limit = default_colour_limit) {
  require_valid(g);
  if (g.colours > colour_limit || g.colours >= 63)
    throw limit_exceeded("check_rainbow_condition: " + std::to_string(g.colours) +
                         " colours exceeds the exhaustive limit of " +
                         std::to_string(colour_limit));
  if (g.n < 2) return {};
  const std::size_t max_r = g.n - 2;
  const std::uint64_t subsets = std::uint64_t{1} << g.colours;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto r = static_cast<std::size_t>(std::popcount(mask));
    if (r > max_r) continue;
    UnionFind uf(g.n);
    for (const auto& e : g.edges)
      if (!((mask >> e.colour) & 1U)) uf.unite(e.u, e.v);
    if (uf.components() > r + 1) {
      RainbowCondition result{false, {}, uf.components()};
      for (Colour c = 0; c < g.colours; ++c)
        if ((mask >> c) & 1U) result.violating.push_back(c);
      return result;
    }
  }
  return {};
}

}  // namespace hypershrink
