#include "grpx/graphs.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "grpx/error.hpp"
#include "grpx/iso_engine.hpp"
#include "grpx/parallel.hpp"

namespace grpx {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < size(); ++u)
    for (auto v = adj_[u].next(u + 1); v < size(); v = adj_[u].next(v + 1))
      out.emplace_back(u, static_cast<std::uint32_t>(v));
  return out;
}

Graph Graph::complement() const {
  Graph c(size());
  for (std::size_t u = 0; u < size(); ++u) {
    c.adj_[u].set_all();
    c.adj_[u].subtract(adj_[u]);
    c.adj_[u].reset(u);
  }
  return c;
}

std::size_t DiGraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& row : out_) c += row.count();
  return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> DiGraph::arcs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < size(); ++u)
    out_[u].for_each([&](std::size_t v) { out.emplace_back(u, static_cast<std::uint32_t>(v)); });
  return out;
}

Graph DiGraph::underlying() const {
  Graph g(size());
  for (std::size_t u = 0; u < size(); ++u) out_[u].for_each([&](std::size_t v) { g.add_edge(u, v); });
  return g;
}

std::vector<Bitset> cyclic_subgroups(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<Bitset> cyc(n, Bitset(n));
  parallel_chunks(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x) {
      Elem y = 0;
      do {
        cyc[x].set(y);
        y = g.mul(y, static_cast<Elem>(x));
      } while (y != 0);
    }
  });
  return cyc;
}

namespace {

// One generator per cyclic subgroup that is not properly contained in another.
std::vector<Elem> maximal_cyclic_generators(const FiniteGroup& g, const std::vector<Bitset>& cyc) {
  const auto n = g.order();
  std::vector<char> dominated(n, 0);
  for (Elem y = 0; y < n; ++y)
    cyc[y].for_each([&](std::size_t x) {
      if (g.element_order(static_cast<Elem>(x)) < g.element_order(y)) dominated[x] = 1;
    });
  std::vector<Elem> out;
  std::vector<char> seen(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (dominated[x] || seen[x]) continue;
    out.push_back(x);
    // Mark the other generators of <x>.
    cyc[x].for_each([&](std::size_t y) {
      if (g.element_order(static_cast<Elem>(y)) == g.element_order(x)) seen[y] = 1;
    });
  }
  return out;
}

}  // namespace

std::vector<Bitset> maximal_cyclic_subgroups(const FiniteGroup& g) {
  const auto cyc = cyclic_subgroups(g);
  std::vector<Bitset> out;
  for (Elem x : maximal_cyclic_generators(g, cyc)) out.push_back(cyc[x]);
  return out;
}

Graph power_graph(const FiniteGroup& g) {
  const auto cyc = cyclic_subgroups(g);
  Graph p(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) cyc[y].for_each([&](std::size_t x) { p.add_edge(x, y); });
  return p;
}

DiGraph directed_power_graph(const FiniteGroup& g) {
  const auto cyc = cyclic_subgroups(g);
  DiGraph d(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) cyc[x].for_each([&](std::size_t y) { d.add_arc(x, y); });
  return d;
}

Graph enhanced_power_graph(const FiniteGroup& g) {
  // <x, y> is cyclic iff x and y lie in a common maximal cyclic subgroup.
  const auto cyc = cyclic_subgroups(g);
  Graph e(g.order());
  for (Elem m : maximal_cyclic_generators(g, cyc)) {
    const auto members = cyc[m].to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) e.add_edge(members[i], members[j]);
  }
  return e;
}

ClassPartition n_class_partition(const FiniteGroup& g, const Graph& power) {
  const auto n = g.order();
  if (power.size() != n) throw Error(ErrorCode::InvalidInput, "graph size does not match the group order");
  std::vector<Bitset> closed(n);
  for (std::size_t x = 0; x < n; ++x) {
    closed[x] = power.neighbors(x);
    closed[x].set(x);
  }

  ClassPartition part;
  part.class_of.assign(n, 0);
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index;
  for (Elem x = 0; x < n; ++x) {
    auto [it, fresh] = index.try_emplace(closed[x], static_cast<std::uint32_t>(part.classes.size()));
    if (fresh) part.classes.emplace_back();
    part.classes[it->second].members.push_back(x);
    part.class_of[x] = it->second;
  }

  const auto cyc = cyclic_subgroups(g);
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> c_index;
  part.c_class_of.assign(n, 0);
  for (Elem x = 0; x < n; ++x)
    part.c_class_of[x] = c_index.try_emplace(cyc[x], static_cast<std::uint32_t>(c_index.size())).first->second;

  part.star_class = part.class_of[0];
  const bool star_trivial = part.classes[part.star_class].members.size() == 1;

  auto common = [&](const Bitset& set) {
    Bitset acc(n);
    acc.set_all();
    set.for_each([&](std::size_t x) { acc &= closed[x]; });
    return acc;
  };

  for (std::size_t ci = 0; ci < part.classes.size(); ++ci) {
    auto& cls = part.classes[ci];
    cls.star = ci == part.star_class;
    cls.plain = std::all_of(cls.members.begin(), cls.members.end(),
                            [&](Elem y) { return part.c_class_of[y] == part.c_class_of[cls.members[0]]; });
    Bitset x(n);
    for (Elem y : cls.members) x.set(y);
    cls.hat = common(common(x));
    if (!star_trivial) continue;

    Bitset with_one = x;
    with_one.set(0);
    const auto h = cls.hat.count();
    const auto base = prime_power_base(h);
    const bool crit = !x.test(0) && cls.hat == with_one && base && h >= *base * *base;
    cls.critical = crit;
    if (crit) {
      bool found = false;
      power.neighbors(cls.members[0]).for_each([&](std::size_t z) {
        if (!cls.hat.test(z) && part.classes[part.class_of[z]].members.size() <= cls.members.size()) found = true;
      });
      cls.plain_by_graph = found;
    }
  }
  return part;
}

ClassPartition n_class_partition(const FiniteGroup& g) { return n_class_partition(g, power_graph(g)); }

std::vector<std::uint64_t> order_colors(const FiniteGroup& g) {
  return {g.orders().begin(), g.orders().end()};
}

namespace {

// Rows of a graph or digraph, complemented when that is sparser.
ColoredDigraph to_engine(const std::vector<const Bitset*>& rows, bool complement, const std::vector<std::uint64_t>& color) {
  const auto n = rows.size();
  auto cg = ColoredDigraph::with_vertices(n);
  if (!color.empty()) {
    if (color.size() != n) throw Error(ErrorCode::InvalidInput, "color vector does not match the vertex count");
    cg.color = color;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!complement) {
      rows[u]->for_each([&](std::size_t v) { cg.out[u].push_back(static_cast<std::uint32_t>(v)); });
    } else {
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && !rows[u]->test(v)) cg.out[u].push_back(static_cast<std::uint32_t>(v));
    }
  }
  return cg;
}

template <class G>
std::vector<const Bitset*> rows_of(const G& graph) {
  std::vector<const Bitset*> rows;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if constexpr (std::is_same_v<G, Graph>)
      rows.push_back(&graph.neighbors(v));
    else
      rows.push_back(&graph.out(v));
  }
  return rows;
}

template <class G>
SearchOutcome<std::vector<std::uint32_t>> iso_impl(const G& a, const G& b, const std::vector<std::uint64_t>& ca,
                                                   const std::vector<std::uint64_t>& cb, std::uint64_t budget,
                                                   std::size_t arcs_a, std::size_t arcs_b) {
  SearchOutcome<std::vector<std::uint32_t>> out;
  if (a.size() != b.size() || arcs_a != arcs_b || ca.size() != cb.size()) return out;
  const auto n = a.size();
  const bool dense = 2 * arcs_a > n * (n > 0 ? n - 1 : 0);
  return colored_digraph_isomorphism(to_engine(rows_of(a), dense, ca), to_engine(rows_of(b), dense, cb), budget);
}

template <class G>
bool check_map(const G& a, const G& b, const std::vector<std::uint32_t>& map) {
  const auto n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto w : map) {
    if (w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  const auto ra = rows_of(a), rb = rows_of(b);
  for (std::size_t u = 0; u < n; ++u) {
    Bitset img(n);
    ra[u]->for_each([&](std::size_t v) { img.set(map[v]); });
    if (img != *rb[map[u]]) return false;
  }
  return true;
}

}  // namespace

SearchOutcome<std::vector<std::uint32_t>> graph_isomorphism(const Graph& a, const Graph& b,
                                                            const std::vector<std::uint64_t>& color_a,
                                                            const std::vector<std::uint64_t>& color_b,
                                                            std::uint64_t budget) {
  return iso_impl(a, b, color_a, color_b, budget, 2 * a.edge_count(), 2 * b.edge_count());
}

SearchOutcome<std::vector<std::uint32_t>> graph_isomorphism(const DiGraph& a, const DiGraph& b,
                                                            const std::vector<std::uint64_t>& color_a,
                                                            const std::vector<std::uint64_t>& color_b,
                                                            std::uint64_t budget) {
  return iso_impl(a, b, color_a, color_b, budget, a.arc_count(), b.arc_count());
}

bool is_graph_isomorphism(const Graph& a, const Graph& b, const std::vector<std::uint32_t>& map) {
  return check_map(a, b, map);
}

bool is_graph_isomorphism(const DiGraph& a, const DiGraph& b, const std::vector<std::uint32_t>& map) {
  return check_map(a, b, map);
}

namespace {

void dot_vertices(std::ostream& os, std::size_t n, const FiniteGroup* g) {
  if (!g) return;
  const auto part = n_class_partition(*g);
  for (std::size_t v = 0; v < n; ++v) {
    os << "  " << v << " [label=\"" << v << " (" << g->element_order(static_cast<Elem>(v)) << ")\"";
    if (part.class_of[v] == part.star_class) os << ", shape=doublecircle";
    os << "];\n";
  }
}

}  // namespace

std::string to_dot(const Graph& graph, const FiniteGroup* g) {
  std::ostringstream os;
  os << "graph G {\n";
  dot_vertices(os, graph.size(), g);
  if (!g)
    for (std::size_t v = 0; v < graph.size(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DiGraph& graph, const FiniteGroup* g) {
  std::ostringstream os;
  os << "digraph G {\n";
  dot_vertices(os, graph.size(), g);
  if (!g)
    for (std::size_t v = 0; v < graph.size(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : graph.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Graph& graph) {
  nlohmann::json j;
  j["n"] = graph.size();
  j["edges"] = graph.edges();
  return j.dump();
}

std::string to_json(const DiGraph& graph) {
  nlohmann::json j;
  j["n"] = graph.size();
  j["edges"] = graph.arcs();
  return j.dump();
}

}  // namespace grpx
