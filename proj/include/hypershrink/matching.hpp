#pragma once

#include <cstddef>
#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace hypershrink {

/// Bipartite graph given by left-side adjacency lists into [0, right_size).
struct BipartiteGraph {
  std::size_t right_size = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t left_size() const { return adjacency.size(); }
};

inline constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

struct Matching {
  std::vector<std::size_t> left_to_right;
  std::vector<std::size_t> right_to_left;
  std::size_t size = 0;
};

/// Maximum matching by Hopcroft-Karp. Left vertices are scanned in index
/// order and adjacency lists in their stored order, so the result is a
/// deterministic function of the graph.
inline Matching maximum_matching(const BipartiteGraph& g) {
  const std::size_t nl = g.left_size();
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  Matching m{std::vector<std::size_t>(nl, unmatched),
             std::vector<std::size_t>(g.right_size, unmatched), 0};
  std::vector<std::size_t> dist(nl);
  std::vector<std::size_t> next_arc(nl);

  auto bfs = [&]() {
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.left_to_right[u] == unmatched) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = inf;
      }
    }
    bool found_free = false;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t r : g.adjacency[u]) {
        std::size_t w = m.right_to_left[r];
        if (w == unmatched) {
          found_free = true;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found_free;
  };

  // Iterative DFS along the BFS layering; returns true if an augmenting path
  // from `root` was found and applied.
  auto augment = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    std::vector<std::size_t> via;  // right vertex used to step to stack[i+1]
    while (!stack.empty()) {
      std::size_t u = stack.back();
      bool advanced = false;
      while (next_arc[u] < g.adjacency[u].size()) {
        std::size_t r = g.adjacency[u][next_arc[u]];
        std::size_t w = m.right_to_left[r];
        if (w == unmatched) {
          // Flip the path root .. u, r.
          via.push_back(r);
          for (std::size_t i = stack.size(); i-- > 0;) {
            std::size_t left = stack[i];
            std::size_t right = via[i];
            m.left_to_right[left] = right;
            m.right_to_left[right] = left;
          }
          ++m.size;
          return true;
        }
        if (dist[w] == dist[u] + 1) {
          via.push_back(r);
          stack.push_back(w);
          advanced = true;
          break;
        }
        ++next_arc[u];
      }
      if (!advanced) {
        dist[u] = inf;
        stack.pop_back();
        if (!via.empty()) {
          via.pop_back();
          ++next_arc[stack.back()];
        }
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next_arc.begin(), next_arc.end(), 0);
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.left_to_right[u] == unmatched) augment(u);
    }
  }
  return m;
}

}  // namespace hypershrink
