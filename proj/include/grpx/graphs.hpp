#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpx/bitset.hpp"
#include "grpx/group.hpp"
#include "grpx/search.hpp"

namespace grpx {

/// Simple undirected graph on 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

  std::size_t size() const { return adj_.size(); }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u].set(v);
    adj_[v].set(u);
  }
  std::size_t edge_count() const;
  /// Pairs (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adj_;
};

/// Directed graph without loops.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(std::size_t n) : out_(n, Bitset(n)) {}

  std::size_t size() const { return out_.size(); }
  const Bitset& out(std::size_t v) const { return out_[v]; }
  bool has_arc(std::size_t u, std::size_t v) const { return out_[u].test(v); }
  void add_arc(std::size_t u, std::size_t v) {
    if (u != v) out_[u].set(v);
  }
  std::size_t arc_count() const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;
  /// Forget directions.
  Graph underlying() const;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  std::vector<Bitset> out_;
};

/// powers[x] = members of <x>.
std::vector<Bitset> cyclic_subgroups(const FiniteGroup& g);
/// The maximal cyclic subgroups, each as a member set.
std::vector<Bitset> maximal_cyclic_subgroups(const FiniteGroup& g);

/// x ~ y iff x != y and one lies in the cyclic subgroup of the other.
Graph power_graph(const FiniteGroup& g);
/// x -> y iff x != y and y in <x>.
DiGraph directed_power_graph(const FiniteGroup& g);
/// x ~ y iff x != y and <x, y> is cyclic.
Graph enhanced_power_graph(const FiniteGroup& g);

struct NClass {
  std::vector<Elem> members;
  /// N(N(class)).
  Bitset hat;
  bool plain = false;
  bool star = false;
  /// Only decided when the star set is {1}.
  std::optional<bool> critical;
  /// For critical classes with a trivial star set: the graph-only plainness
  /// test (some x outside the hat set adjacent to the class with |N[x]| <= |N|).
  std::optional<bool> plain_by_graph;

  std::size_t size() const { return members.size(); }
  std::size_t hat_size() const { return hat.count(); }
  bool compound() const { return !plain; }
};

struct ClassPartition {
  std::vector<NClass> classes;
  std::vector<std::uint32_t> class_of;
  /// C-class (same cyclic subgroup) index of each element.
  std::vector<std::uint32_t> c_class_of;
  std::size_t star_class = 0;

  const NClass& star() const { return classes[star_class]; }
  bool star_trivial() const { return star().size() == 1; }
};

/// N-classes of the power graph of g: x and y share a class iff their closed
/// neighborhoods agree.
ClassPartition n_class_partition(const FiniteGroup& g, const Graph& power);
ClassPartition n_class_partition(const FiniteGroup& g);

/// Vertex colors from element orders, for searches between graphs of groups.
std::vector<std::uint64_t> order_colors(const FiniteGroup& g);

/// Adjacency-preserving bijection a -> b. Colors, when given, must be preserved.
SearchOutcome<std::vector<std::uint32_t>> graph_isomorphism(const Graph& a, const Graph& b,
                                                            const std::vector<std::uint64_t>& color_a = {},
                                                            const std::vector<std::uint64_t>& color_b = {},
                                                            std::uint64_t budget = default_budget());
SearchOutcome<std::vector<std::uint32_t>> graph_isomorphism(const DiGraph& a, const DiGraph& b,
                                                            const std::vector<std::uint64_t>& color_a = {},
                                                            const std::vector<std::uint64_t>& color_b = {},
                                                            std::uint64_t budget = default_budget());
bool is_graph_isomorphism(const Graph& a, const Graph& b, const std::vector<std::uint32_t>& map);
bool is_graph_isomorphism(const DiGraph& a, const DiGraph& b, const std::vector<std::uint32_t>& map);

/// DOT text. With a group, vertices are labelled "index (order)" and the star
/// vertices of the power graph are double-circled.
std::string to_dot(const Graph& graph, const FiniteGroup* g = nullptr);
std::string to_dot(const DiGraph& graph, const FiniteGroup* g = nullptr);
/// {"n": ..., "edges": [[i, j], ...]}
std::string to_json(const Graph& graph);
std::string to_json(const DiGraph& graph);

}  // namespace grpx
