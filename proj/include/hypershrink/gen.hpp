#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "rainbow.hpp"
#include "shrink.hpp"

namespace hypershrink {

/// Seeded generator with a fully specified output stream, so a seed means the
/// same thing on every platform and in ports to other languages:
///
///   engine      std::mt19937_64 constructed from the 64-bit seed
///   below(b)    draw x until x >= (2^64 - b) mod b, return x mod b
///   chance(p)   draw x, return (x >> 11) * 2^-53 < p   (always one draw)
///
/// std::uniform_int_distribution is avoided because its algorithm is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x < threshold);
    return x % bound;
  }

  bool chance(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform labelled tree on n vertices by decoding a random Prüfer sequence.
/// Edges come out in decoding order, each with u < v.
inline std::vector<TreeEdge> random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  if (n == 1) return {};
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);

  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    if (--deg[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

inline std::vector<TreeEdge> random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

struct GeneratedHypertree {
  Hypergraph hypergraph;
  std::vector<TreeEdge> witness;  // witness[i] is a pair inside hyperedge i
};

/// The witness tree as a Shrinking of its hypergraph.
inline Shrinking witness_shrinking(const GeneratedHypertree& g) {
  Shrinking s;
  s.tree = g.witness;
  s.assignment.resize(g.witness.size());
  std::iota(s.assignment.begin(), s.assignment.end(), std::size_t{0});
  return s;
}

inline constexpr int expansion_attempts = 16;

/// Random hypertree of rank at most k: a random tree whose edges are each,
/// with probability p, enlarged by 1..k-2 further vertices. Every hyperedge
/// still contains its tree edge, so the tree is a shrink witness.
///
/// Draw order per tree edge: chance(p), then the extra count, then vertices.
/// An enlargement that repeats an existing hyperedge is redrawn up to 16
/// times before the edge is kept as a pair.
inline GeneratedHypertree random_hypertree(std::size_t n, std::size_t k, std::uint64_t seed,
                                           double p) {
  if (n < 2) throw std::invalid_argument("random_hypertree: n must be at least 2");
  if (k < 2) throw std::invalid_argument("random_hypertree: k must be at least 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("random_hypertree: p must lie in [0, 1]");

  Rng rng(seed);
  GeneratedHypertree out;
  out.witness = random_tree(n, rng);
  out.hypergraph.n = n;

  std::set<Hyperedge> taken;
  for (const auto& t : out.witness) taken.insert({t.u, t.v});

  const std::size_t max_extra = std::min(k - 2, n - 2);
  for (const auto& t : out.witness) {
    Hyperedge edge{t.u, t.v};
    if (rng.chance(p) && max_extra > 0) {
      const std::size_t extra = 1 + rng.below(max_extra);
      for (int attempt = 0; attempt < expansion_attempts; ++attempt) {
        Hyperedge candidate{t.u, t.v};
        while (candidate.size() < 2 + extra) {
          auto v = static_cast<Vertex>(rng.below(n));
          if (std::find(candidate.begin(), candidate.end(), v) == candidate.end())
            candidate.push_back(v);
        }
        std::sort(candidate.begin(), candidate.end());
        if (taken.insert(candidate).second) {
          edge = std::move(candidate);
          break;
        }
      }
    }
    out.hypergraph.edges.push_back(std::move(edge));
  }
  return out;
}

/// A hub (vertex 0) lying in m hyperedges of size k. Hyperedge j is
/// S_j = {0, a_j, ..., a_j + k - 2} with a_j = 1 + j(k-1); after the m hub
/// hyperedges come the pairs {a_j, a_j + t} for t = 1..k-2. This is the tree
/// "hub to a_j, a_j to its k-2 children" with each hub edge grown to S_j, so
/// the result is a hypertree with n = 1 + m(k-1) vertices and hub degree m.
inline Hypergraph adversarial_star(std::size_t m, std::size_t k) {
  if (m < 1) throw std::invalid_argument("adversarial_star: m must be positive");
  if (k < 2) throw std::invalid_argument("adversarial_star: k must be at least 2");
  Hypergraph h;
  h.n = 1 + m * (k - 1);
  for (std::size_t j = 0; j < m; ++j) {
    Hyperedge e{0};
    for (std::size_t t = 0; t + 1 < k; ++t) e.push_back(static_cast<Vertex>(1 + j * (k - 1) + t));
    h.edges.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto a = static_cast<Vertex>(1 + j * (k - 1));
    for (std::size_t t = 1; t + 1 < k; ++t) h.edges.push_back({a, static_cast<Vertex>(a + t)});
  }
  return h;
}

/// Random simple hypergraph (not necessarily a hypertree) with up to m
/// hyperedges of sizes 2..min(k, n). Fewer edges come back only when repeated
/// draws keep hitting existing hyperedges.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t k,
                                    std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_hypergraph: n must be at least 2");
  if (k < 2) throw std::invalid_argument("random_hypergraph: k must be at least 2");
  Rng rng(seed);
  Hypergraph h;
  h.n = n;
  std::set<Hyperedge> taken;
  const std::size_t top = std::min(k, n);
  const std::size_t max_misses = 64 * (m + 1);
  std::size_t misses = 0;
  while (h.edges.size() < m && misses < max_misses) {
    const std::size_t size = 2 + rng.below(top - 1);
    Hyperedge e;
    while (e.size() < size) {
      auto v = static_cast<Vertex>(rng.below(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (taken.insert(e).second)
      h.edges.push_back(std::move(e));
    else
      ++misses;
  }
  return h;
}

/// Random coloured multigraph: up to `edge_count` edges with uniform endpoints
/// and colours; repeated (u, v, colour) triples are dropped.
inline ColouredGraph random_coloured_graph(std::size_t n, std::size_t colours,
                                           std::size_t edge_count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_coloured_graph: n must be at least 2");
  if (colours == 0) throw std::invalid_argument("random_coloured_graph: need a colour");
  Rng rng(seed);
  ColouredGraph g{n, colours, {}};
  std::set<ColouredEdge> seen;
  for (std::size_t i = 0; i < edge_count; ++i) {
    auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n - 1));
    if (b >= a) ++b;
    ColouredEdge e{std::min(a, b), std::max(a, b), static_cast<Colour>(rng.below(colours))};
    if (seen.insert(e).second) g.edges.push_back(e);
  }
  return g;
}

}  // namespace hypershrink
