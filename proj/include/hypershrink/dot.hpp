#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "rainbow.hpp"
#include "shrink.hpp"

namespace hypershrink {

// Colour id c is drawn with palette[c % palette.size()].
inline constexpr std::array<const char*, 12> dot_palette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

/// Graphviz rendering of a coloured graph. Edges listed in `highlight`
/// (matched on endpoints and colour) are drawn bold; the rest dashed when a
/// highlight is given.
inline std::string to_dot(const ColouredGraph& g, std::span<const ColouredEdge> highlight = {}) {
  std::vector<ColouredEdge> marked(highlight.begin(), highlight.end());
  std::sort(marked.begin(), marked.end());
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.n; ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges) {
    const bool bold = std::binary_search(marked.begin(), marked.end(), e);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.colour << "\", color=\""
        << dot_palette[e.colour % dot_palette.size()] << '"';
    if (bold)
      out << ", penwidth=3";
    else if (!marked.empty())
      out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const ColouredGraph& g, const RainbowTree& tree) {
  return to_dot(g, std::span<const ColouredEdge>(tree.edges));
}

/// The clique expansion of H with the shrunk tree drawn bold on top.
inline std::string to_dot(const Hypergraph& h, const Shrinking& s) {
  std::vector<ColouredEdge> chosen;
  for (EdgeIndex i = 0; i < s.assignment.size() && i < h.edges.size(); ++i) {
    if (s.assignment[i] >= s.tree.size()) continue;
    const auto& t = s.tree[s.assignment[i]];
    chosen.push_back({std::min(t.u, t.v), std::max(t.u, t.v), static_cast<Colour>(i)});
  }
  return to_dot(clique_graph(h), chosen);
}

}  // namespace hypershrink
