#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "orientation.hpp"
#include "rainbow.hpp"
#include "union_find.hpp"

namespace hypershrink {

/// A spanning tree obtained by picking two vertices from every hyperedge.
/// assignment[i] is the index in `tree` of the edge chosen from hyperedge i.
/// `heads` holds the orientation the pipeline used (empty when the shrinking
/// did not come from an orientation).
struct Shrinking {
  std::vector<TreeEdge> tree;
  std::vector<std::size_t> assignment;
  std::vector<Vertex> heads;

  friend bool operator==(const Shrinking&, const Shrinking&) = default;
};

enum class NotAHypertreeReason {
  edge_count,       // |E| != n - 1
  no_rainbow_tree,  // the star graph of the orientation has no rainbow spanning tree
};

class not_a_hypertree : public std::runtime_error {
 public:
  explicit not_a_hypertree(NotAHypertreeReason reason)
      : std::runtime_error(reason == NotAHypertreeReason::edge_count
                               ? "not a hypertree: edge count differs from n - 1"
                               : "not a hypertree: no rainbow spanning tree in the star graph"),
        reason_(reason) {}

  NotAHypertreeReason reason() const { return reason_; }

 private:
  NotAHypertreeReason reason_;
};

namespace detail {

inline std::size_t resolve_k(const Hypergraph& h, std::optional<std::size_t> k) {
  const std::size_t r = std::max<std::size_t>(rank(h), 1);
  if (!k) return r;
  if (*k < r)
    throw std::invalid_argument("k = " + std::to_string(*k) + " is below the rank " +
                                std::to_string(rank(h)));
  return *k;
}

}  // namespace detail

/// The degree each vertex is guaranteed in the shrunk tree:
/// max{1, floor(d_H(v) / k)}. On a single vertex the tree has no edges, so
/// the floor of 1 is dropped there.
inline std::vector<std::size_t> degree_bound(const Hypergraph& h, std::size_t k) {
  auto d = degrees(h);
  const std::size_t floor_one = h.n >= 2 ? 1 : 0;
  for (auto& x : d) x = std::max(floor_one, x / k);
  return d;
}

/// Shrinks a hypertree to a spanning tree in which every vertex keeps
/// max{1, floor(d_H(v)/k)} of its degree, k defaulting to the rank.
///
/// Orients H so that indegree(v) >= floor(d_H(v)/k), replaces each hyperarc
/// by a monochromatic star centred at its head, and takes a rainbow spanning
/// tree of the result. The edge of colour i is the pair chosen from
/// hyperedge i and always contains that hyperedge's head.
///
/// Throws not_a_hypertree if H cannot be shrunk to a spanning tree.
inline Shrinking shrink_hypertree(const Hypergraph& h, std::optional<std::size_t> k = {}) {
  require_valid(h);
  const std::size_t kk = detail::resolve_k(h, k);
  if (h.n == 0 || h.edges.size() != h.n - 1)
    throw not_a_hypertree(NotAHypertreeReason::edge_count);

  DirectedHypergraph oriented = orient_floor(h, kk);
  const ColouredGraph stars = star_graph(oriented);
  auto rainbow = rainbow_spanning_tree(stars);
  if (!rainbow) throw not_a_hypertree(NotAHypertreeReason::no_rainbow_tree);

  Shrinking s;
  s.tree.resize(h.edges.size());
  s.assignment.resize(h.edges.size());
  for (const auto& e : rainbow->edges) {
    s.tree[e.colour] = {e.u, e.v};
    s.assignment[e.colour] = e.colour;
  }
  s.heads = std::move(oriented.heads);
  return s;
}

// -- verification -------------------------------------------------------------

struct VerificationReport {
  std::size_t k = 0;
  bool spanning_tree = false;
  bool bijective = false;
  std::vector<EdgeIndex> containment_failures;  // tree edge not inside its hyperedge
  bool heads_checked = false;
  std::vector<EdgeIndex> head_failures;         // head not an endpoint of its tree edge
  std::vector<Vertex> bound_failures;           // d_T(v) < max{1, floor(d_H(v)/k)}
  std::vector<Vertex> half_bound_failures;      // d_T(v) < d_H(v) / (2k)
  bool rank3_applicable = false;                // rank <= 3
  std::vector<Vertex> rank3_failures;           // d_T(v) < d_H(v) / 100

  std::vector<std::size_t> hyper_degree;
  std::vector<std::size_t> tree_degree;
  std::vector<std::size_t> bound;

  bool ok() const {
    return spanning_tree && bijective && containment_failures.empty() &&
           head_failures.empty() && bound_failures.empty() && half_bound_failures.empty() &&
           rank3_failures.empty();
  }
};

/// Checks every property a shrinking must have, item by item. Never throws on
/// a bad shrinking; failures are recorded in the report.
inline VerificationReport verify_shrinking(const Hypergraph& h, const Shrinking& s,
                                           std::optional<std::size_t> k = {}) {
  require_valid(h);
  VerificationReport r;
  r.k = detail::resolve_k(h, k);
  const std::size_t n = h.n;
  const std::size_t m = h.edges.size();

  bool endpoints_ok = true;
  for (const auto& e : s.tree)
    if (e.u >= n || e.v >= n || e.u == e.v) endpoints_ok = false;

  if (endpoints_ok && n >= 1 && s.tree.size() == n - 1) {
    UnionFind uf(n);
    r.spanning_tree = std::all_of(s.tree.begin(), s.tree.end(),
                                  [&](const TreeEdge& e) { return uf.unite(e.u, e.v); });
  }

  if (s.assignment.size() == m && s.tree.size() == m) {
    std::vector<char> hit(m, 0);
    r.bijective = true;
    for (std::size_t t : s.assignment) {
      if (t >= m || hit[t]) {
        r.bijective = false;
        break;
      }
      hit[t] = 1;
    }
  }

  for (EdgeIndex i = 0; i < m; ++i) {
    const auto& e = h.edges[i];
    auto contains = [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); };
    if (i >= s.assignment.size() || s.assignment[i] >= s.tree.size()) {
      r.containment_failures.push_back(i);
      continue;
    }
    const TreeEdge& t = s.tree[s.assignment[i]];
    if (t.u == t.v || !contains(t.u) || !contains(t.v)) r.containment_failures.push_back(i);
  }

  if (!s.heads.empty()) {
    r.heads_checked = true;
    for (EdgeIndex i = 0; i < m; ++i) {
      if (i >= s.heads.size() || i >= s.assignment.size() ||
          s.assignment[i] >= s.tree.size()) {
        r.head_failures.push_back(i);
        continue;
      }
      const TreeEdge& t = s.tree[s.assignment[i]];
      if (t.u != s.heads[i] && t.v != s.heads[i]) r.head_failures.push_back(i);
    }
  }

  r.hyper_degree = degrees(h);
  r.tree_degree.assign(n, 0);
  for (const auto& e : s.tree) {
    if (e.u < n) ++r.tree_degree[e.u];
    if (e.v < n) ++r.tree_degree[e.v];
  }
  r.bound = degree_bound(h, r.k);
  r.rank3_applicable = rank(h) <= 3;

  for (Vertex v = 0; v < n; ++v) {
    const std::size_t dt = r.tree_degree[v];
    const std::size_t dh = r.hyper_degree[v];
    if (dt < r.bound[v]) r.bound_failures.push_back(v);
    if (2 * r.k * dt < dh) r.half_bound_failures.push_back(v);
    if (r.rank3_applicable && 100 * dt < dh) r.rank3_failures.push_back(v);
  }
  return r;
}

// -- brute-force oracle -------------------------------------------------------

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

/// Number of ways to pick one pair from every hyperedge, saturating just past
/// `cap`.
inline std::size_t pair_choice_count(const Hypergraph& h, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& e : h.edges) {
    const std::size_t pairs = e.size() * (e.size() - 1) / 2;
    if (pairs == 0) return 0;
    if (total > (cap + 1) / pairs + 1) return cap + 1;
    total *= pairs;
    if (total > cap) return cap + 1;
  }
  return total;
}

/// Tries every way of picking a pair from each hyperedge. Among the choices
/// that form a spanning tree, returns one maximising min_v d_T(v)/max(1, d_H(v)),
/// ties going to the lexicographically smallest choice. nullopt means no
/// choice spans, i.e. H is not a hypertree.
///
/// Throws limit_exceeded if the number of choices is above `limit`.
inline std::optional<Shrinking> brute_force_shrink(const Hypergraph& h,
                                                   std::size_t limit = default_enumeration_limit) {
  require_valid(h);
  if (pair_choice_count(h, limit) > limit)
    throw limit_exceeded("brute_force_shrink: more than " + std::to_string(limit) +
                         " pair choices");
  const std::size_t n = h.n;
  const std::size_t m = h.edges.size();
  if (n == 0 || m != n - 1) return std::nullopt;

  std::vector<std::vector<TreeEdge>> pairs(m);
  for (EdgeIndex i = 0; i < m; ++i) {
    const auto& e = h.edges[i];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) pairs[i].push_back({e[a], e[b]});
  }

  const auto dh = degrees(h);
  std::vector<std::size_t> dt(n, 0);
  std::vector<TreeEdge> chosen(m);
  std::optional<std::vector<TreeEdge>> best;
  std::size_t best_num = 0, best_den = 1;  // best ratio as a fraction
  RollbackUnionFind uf(n);

  // Depth-first in lexicographic order of the choice vector; a pair closing a
  // cycle cannot lead to a spanning tree, so that branch is cut.
  auto visit = [&](auto&& self, EdgeIndex i) -> void {
    if (i == m) {
      std::size_t num = 0, den = 0;
      bool first = true;
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = std::max<std::size_t>(dh[v], 1);
        if (first || dt[v] * den < num * d) {
          num = dt[v];
          den = d;
          first = false;
        }
      }
      if (!best || num * best_den > best_num * den) {
        best = chosen;
        best_num = num;
        best_den = den;
      }
      return;
    }
    for (const auto& p : pairs[i]) {
      if (!uf.unite(p.u, p.v)) continue;
      chosen[i] = p;
      ++dt[p.u];
      ++dt[p.v];
      self(self, i + 1);
      --dt[p.u];
      --dt[p.v];
      uf.undo();
    }
  };
  visit(visit, 0);

  if (!best) return std::nullopt;
  Shrinking s;
  s.tree = std::move(*best);
  s.assignment.resize(m);
  std::iota(s.assignment.begin(), s.assignment.end(), std::size_t{0});
  return s;
}

}  // namespace hypershrink
