#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "core.hpp"
#include "matching.hpp"

namespace hypershrink {

/// Bipartite graph between hyperedges (left) and f(v) copies of every vertex
/// v (right). Copies of v occupy the right ids [copy_base[v], copy_base[v+1]).
/// Hyperedge i is adjacent to every copy of every vertex it contains.
struct DemandBipartiteGraph {
  BipartiteGraph graph;
  std::vector<std::size_t> copy_base;  // size n + 1
  std::vector<Vertex> copy_owner;      // size f(V)

  static DemandBipartiteGraph build(const Hypergraph& h, const DemandFunction& f) {
    DemandBipartiteGraph d;
    d.copy_base.assign(h.n + 1, 0);
    for (Vertex v = 0; v < h.n; ++v) d.copy_base[v + 1] = d.copy_base[v] + f[v];
    d.copy_owner.resize(d.copy_base[h.n]);
    for (Vertex v = 0; v < h.n; ++v)
      std::fill(d.copy_owner.begin() + static_cast<std::ptrdiff_t>(d.copy_base[v]),
                d.copy_owner.begin() + static_cast<std::ptrdiff_t>(d.copy_base[v + 1]), v);

    d.graph.right_size = d.copy_owner.size();
    d.graph.adjacency.resize(h.edges.size());
    for (EdgeIndex i = 0; i < h.edges.size(); ++i) {
      auto& adj = d.graph.adjacency[i];
      for (Vertex v : h.edges[i])
        for (std::size_t c = d.copy_base[v]; c < d.copy_base[v + 1]; ++c) adj.push_back(c);
    }
    return d;
  }
};

/// A set F with f(F) > e*(F). Its existence rules out any orientation with
/// indegree(v) >= f(v) everywhere, since each hyperedge incident with F can
/// raise the indegree of at most one vertex of F.
struct HallViolator {
  std::vector<Vertex> vertices;
  std::size_t demand = 0;    // f(F)
  std::size_t incident = 0;  // e*(F)

  friend bool operator==(const HallViolator&, const HallViolator&) = default;
};

class OrientationResult {
 public:
  OrientationResult(DirectedHypergraph d) : value_(std::move(d)) {}
  OrientationResult(HallViolator v) : value_(std::move(v)) {}

  bool oriented() const { return std::holds_alternative<DirectedHypergraph>(value_); }
  const DirectedHypergraph& orientation() const { return std::get<DirectedHypergraph>(value_); }
  const HallViolator& violator() const { return std::get<HallViolator>(value_); }

 private:
  std::variant<DirectedHypergraph, HallViolator> value_;
};

namespace detail {

inline void check_demands(const Hypergraph& h, const DemandFunction& f) {
  if (f.size() != h.n)
    throw std::invalid_argument("demand function has " + std::to_string(f.size()) +
                                " entries, hypergraph has " + std::to_string(h.n) +
                                " vertices");
}

inline HallViolator make_violator(const Hypergraph& h, const DemandFunction& f,
                                  std::vector<Vertex> vertices) {
  HallViolator v;
  v.demand = f.sum(vertices);
  v.incident = incident_edge_count(h, vertices);
  v.vertices = std::move(vertices);
  return v;
}

// Right vertices reachable from uncovered copies by alternating paths. With a
// maximum matching every hyperedge reached is matched back into the set, so
// the owners F satisfy e*(F) = |N(A)| < |A| = f(F). A copy of v reaches every
// hyperedge containing v, hence every other copy of v as well.
inline std::vector<Vertex> deficiency_witness(const Hypergraph& h,
                                              const DemandBipartiteGraph& dbg,
                                              const Matching& m) {
  const auto inc = incidence(h);
  std::vector<char> right_seen(dbg.copy_owner.size(), 0);
  std::vector<char> left_seen(h.edges.size(), 0);
  std::queue<std::size_t> q;
  for (std::size_t r = 0; r < right_seen.size(); ++r) {
    if (m.right_to_left[r] == unmatched) {
      right_seen[r] = 1;
      q.push(r);
    }
  }
  while (!q.empty()) {
    std::size_t r = q.front();
    q.pop();
    for (EdgeIndex e : inc[dbg.copy_owner[r]]) {
      if (left_seen[e]) continue;
      left_seen[e] = 1;
      std::size_t mate = m.left_to_right[e];
      if (mate == unmatched)
        throw std::logic_error("deficiency witness: matching is not maximum");
      if (!right_seen[mate]) {
        right_seen[mate] = 1;
        q.push(mate);
      }
    }
  }
  std::vector<Vertex> owners;
  for (std::size_t r = 0; r < right_seen.size(); ++r)
    if (right_seen[r]) owners.push_back(dbg.copy_owner[r]);
  owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
  return owners;
}

}  // namespace detail

/// Finds an orientation with indegree(v) >= f(v) for every vertex, or a set
/// F certifying that none exists.
///
/// Hyperedges matched to a copy of v get head v; unmatched hyperedges get
/// their smallest vertex as head.
inline OrientationResult orient_with_demands(const Hypergraph& h, const DemandFunction& f) {
  require_valid(h);
  detail::check_demands(h, f);

  if (f.total() > h.edges.size()) {
    std::vector<Vertex> all(h.n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return detail::make_violator(h, f, std::move(all));
  }

  const auto dbg = DemandBipartiteGraph::build(h, f);
  const Matching m = maximum_matching(dbg.graph);
  if (m.size < dbg.graph.right_size)
    return detail::make_violator(h, f, detail::deficiency_witness(h, dbg, m));

  std::vector<Vertex> heads(h.edges.size());
  for (EdgeIndex i = 0; i < h.edges.size(); ++i) {
    std::size_t r = m.left_to_right[i];
    heads[i] = r == unmatched ? h.edges[i].front() : dbg.copy_owner[r];
  }
  return DirectedHypergraph{h, std::move(heads)};
}

/// f(v) = floor(d(v) / k). Requires k >= max(1, rank(H)).
inline DemandFunction floor_demand(const Hypergraph& h, std::size_t k) {
  if (k == 0) throw std::invalid_argument("floor_demand: k must be positive");
  if (k < rank(h))
    throw std::invalid_argument("floor_demand: k = " + std::to_string(k) +
                                " is below the rank " + std::to_string(rank(h)));
  DemandFunction f{degrees(h)};
  for (auto& x : f.values) x /= k;
  return f;
}

/// Orientation with indegree(v) >= floor(d(v) / k) for every vertex. Such an
/// orientation always exists when every hyperedge has at most k vertices, so
/// a violator here means the implementation is broken.
inline DirectedHypergraph orient_floor(const Hypergraph& h, std::size_t k) {
  auto result = orient_with_demands(h, floor_demand(h, k));
  if (!result.oriented())
    throw std::logic_error("orient_floor: floor demands reported infeasible (internal error)");
  return result.orientation();
}

inline DirectedHypergraph orient_floor(const Hypergraph& h) {
  return orient_floor(h, std::max<std::size_t>(rank(h), 1));
}

}  // namespace hypershrink
