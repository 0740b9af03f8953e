#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypershrink {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Hyperedge = std::vector<Vertex>;

/// A hypergraph on the dense vertex set 0..n-1. Hyperedges keep their input
/// order; the position of a hyperedge in `edges` is its identity everywhere
/// downstream (it becomes the colour id of the star and clique expansions).
///
/// The struct itself does not enforce simplicity so that parsers can hand
/// malformed input to validate(). Use make_hypergraph() for a checked value.
struct Hypergraph {
  std::size_t n = 0;
  std::vector<Hyperedge> edges;

  std::size_t num_edges() const { return edges.size(); }
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// An edge of a graph on the same vertex set, e.g. a shrunk hyperedge.
struct TreeEdge {
  Vertex u;
  Vertex v;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A hypergraph where every hyperedge carries a designated head.
/// heads[i] is a member of base.edges[i]; the other members are tails.
struct DirectedHypergraph {
  Hypergraph base;
  std::vector<Vertex> heads;

  friend bool operator==(const DirectedHypergraph&, const DirectedHypergraph&) = default;
};

/// Per-vertex non-negative demand f(v).
struct DemandFunction {
  std::vector<std::size_t> values;

  std::size_t operator[](Vertex v) const { return values[v]; }
  std::size_t size() const { return values.size(); }

  /// f(X), the sum of demands over a vertex set.
  std::size_t sum(std::span<const Vertex> xs) const {
    std::size_t total = 0;
    for (Vertex v : xs) total += values[v];
    return total;
  }
  std::size_t total() const {
    return std::accumulate(values.begin(), values.end(), std::size_t{0});
  }
};

// -- validation ---------------------------------------------------------------

enum class ViolationKind {
  loop,             // hyperedge with a single vertex
  empty_edge,       // hyperedge with no vertices
  duplicate_edge,   // same vertex set as an earlier hyperedge
  out_of_range,     // vertex id >= n
  unsorted_edge,    // vertices not in ascending order
  repeated_vertex,  // the same vertex listed twice in one hyperedge
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::loop: return "loop";
    case ViolationKind::empty_edge: return "empty edge";
    case ViolationKind::duplicate_edge: return "duplicate edge";
    case ViolationKind::out_of_range: return "vertex out of range";
    case ViolationKind::unsorted_edge: return "unsorted edge";
    case ViolationKind::repeated_vertex: return "repeated vertex";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  EdgeIndex edge;
  // For duplicate_edge: index of the earlier copy. For out_of_range: the bad id.
  std::size_t detail = 0;

  std::string describe() const {
    std::string s = std::string(to_string(kind)) + " at edge " + std::to_string(edge);
    if (kind == ViolationKind::duplicate_edge)
      s += " (same as edge " + std::to_string(detail) + ")";
    else if (kind == ViolationKind::out_of_range)
      s += " (vertex " + std::to_string(detail) + ")";
    return s;
  }
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Lists every reason H fails to be a simple hypergraph with strictly sorted
/// hyperedges. An empty report means H is well formed.
inline ValidationReport validate(const Hypergraph& h) {
  ValidationReport report;
  std::vector<std::pair<Hyperedge, EdgeIndex>> canonical;
  canonical.reserve(h.edges.size());

  for (EdgeIndex i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.empty()) {
      report.violations.push_back({ViolationKind::empty_edge, i});
      continue;
    }
    for (Vertex v : e) {
      if (v >= h.n) report.violations.push_back({ViolationKind::out_of_range, i, v});
    }
    if (!std::is_sorted(e.begin(), e.end()))
      report.violations.push_back({ViolationKind::unsorted_edge, i});

    Hyperedge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report.violations.push_back({ViolationKind::repeated_vertex, i});
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    }
    if (sorted.size() == 1) report.violations.push_back({ViolationKind::loop, i});
    canonical.emplace_back(std::move(sorted), i);
  }

  // Duplicates compare vertex sets, so unsorted copies of one set still collide.
  std::vector<std::pair<Hyperedge, EdgeIndex>> by_set = canonical;
  std::stable_sort(by_set.begin(), by_set.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t j = 1; j < by_set.size(); ++j) {
    if (by_set[j].first == by_set[j - 1].first) {
      // Report against the first occurrence of the set.
      std::size_t first = j - 1;
      while (first > 0 && by_set[first - 1].first == by_set[j].first) --first;
      report.violations.push_back(
          {ViolationKind::duplicate_edge, by_set[j].second, by_set[first].second});
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.edge < b.edge; });
  return report;
}

/// Thrown when a value handed to a checked entry point is not a valid
/// simple hypergraph.
class invalid_hypergraph : public std::invalid_argument {
 public:
  explicit invalid_hypergraph(ValidationReport report)
      : std::invalid_argument(message(report)), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  static std::string message(const ValidationReport& r) {
    std::string s = "invalid hypergraph";
    for (const auto& v : r.violations) s += "; " + v.describe();
    return s;
  }
  ValidationReport report_;
};

inline void require_valid(const Hypergraph& h) {
  auto report = validate(h);
  if (!report.ok()) throw invalid_hypergraph(std::move(report));
}

/// Sorts every hyperedge and checks the result. Throws invalid_hypergraph.
inline Hypergraph make_hypergraph(std::size_t n, std::vector<Hyperedge> edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  Hypergraph h{n, std::move(edges)};
  require_valid(h);
  return h;
}

/// Thrown by exhaustive routines when an input exceeds their configured size
/// limit, instead of running for an exponential amount of time.
class limit_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// -- degree and incidence queries ---------------------------------------------

inline std::size_t degree(const Hypergraph& h, Vertex v) {
  if (v >= h.n) throw std::out_of_range("degree: vertex out of range");
  std::size_t d = 0;
  for (const auto& e : h.edges)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

/// All degrees in one pass.
inline std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.n, 0);
  for (const auto& e : h.edges)
    for (Vertex v : e) ++d[v];
  return d;
}

inline std::size_t rank(const Hypergraph& h) {
  std::size_t r = 0;
  for (const auto& e : h.edges) r = std::max(r, e.size());
  return r;
}

/// e*(F): the number of hyperedges containing at least one vertex of F.
inline std::size_t incident_edge_count(const Hypergraph& h, std::span<const Vertex> f) {
  std::vector<char> in_f(h.n, 0);
  for (Vertex v : f) {
    if (v >= h.n) throw std::out_of_range("incident_edge_count: vertex out of range");
    in_f[v] = 1;
  }
  std::size_t count = 0;
  for (const auto& e : h.edges) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return in_f[v] != 0; })) ++count;
  }
  return count;
}

/// Vertex-to-edge incidence: incidence[v] holds the indices of the hyperedges
/// containing v, ascending.
inline std::vector<std::vector<EdgeIndex>> incidence(const Hypergraph& h) {
  std::vector<std::vector<EdgeIndex>> inc(h.n);
  for (EdgeIndex i = 0; i < h.edges.size(); ++i)
    for (Vertex v : h.edges[i]) inc[v].push_back(i);
  return inc;
}

// -- directed hypergraphs -----------------------------------------------------

/// Checks that heads are aligned with edges and each head lies in its edge.
inline bool heads_consistent(const DirectedHypergraph& d) {
  if (d.heads.size() != d.base.edges.size()) return false;
  for (EdgeIndex i = 0; i < d.heads.size(); ++i) {
    const auto& e = d.base.edges[i];
    if (std::find(e.begin(), e.end(), d.heads[i]) == e.end()) return false;
  }
  return true;
}

inline DirectedHypergraph make_directed(Hypergraph h, std::vector<Vertex> heads) {
  DirectedHypergraph d{std::move(h), std::move(heads)};
  if (!heads_consistent(d))
    throw std::invalid_argument("directed hypergraph: every head must lie in its hyperedge");
  return d;
}

inline std::size_t indegree(const DirectedHypergraph& d, Vertex v) {
  if (v >= d.base.n) throw std::out_of_range("indegree: vertex out of range");
  return static_cast<std::size_t>(std::count(d.heads.begin(), d.heads.end(), v));
}

inline std::size_t outdegree(const DirectedHypergraph& d, Vertex v) {
  if (v >= d.base.n) throw std::out_of_range("outdegree: vertex out of range");
  std::size_t out = 0;
  for (EdgeIndex i = 0; i < d.heads.size(); ++i) {
    const auto& e = d.base.edges[i];
    if (d.heads[i] != v && std::binary_search(e.begin(), e.end(), v)) ++out;
  }
  return out;
}

inline std::vector<std::size_t> indegrees(const DirectedHypergraph& d) {
  std::vector<std::size_t> in(d.base.n, 0);
  for (Vertex h : d.heads) ++in[h];
  return in;
}

}  // namespace hypershrink
