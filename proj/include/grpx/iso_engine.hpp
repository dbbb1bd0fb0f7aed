#pragma once

#include <cstdint>
#include <vector>

#include "grpx/search.hpp"

namespace grpx {

/// Vertex-colored directed graph in adjacency-list form. Undirected graphs are
/// stored with both arcs.
struct ColoredDigraph {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint64_t> color;

  std::size_t size() const { return out.size(); }
  static ColoredDigraph with_vertices(std::size_t n) {
    ColoredDigraph g;
    g.out.resize(n);
    g.color.assign(n, 0);
    return g;
  }
};

/// Color- and arc-preserving bijection a -> b by individualization and joint
/// color refinement. Any returned map has been checked arc by arc.
SearchOutcome<std::vector<std::uint32_t>> colored_digraph_isomorphism(const ColoredDigraph& a,
                                                                      const ColoredDigraph& b,
                                                                      std::uint64_t budget);

/// True iff map is a color-preserving isomorphism a -> b.
bool is_colored_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b, const std::vector<std::uint32_t>& map);

}  // namespace grpx
