#include "grpx/iso_engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace grpx {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Side {
  const ColoredDigraph* g;
  std::vector<std::vector<std::uint32_t>> in;
};

using Coloring = std::vector<std::uint32_t>;

class Refiner {
 public:
  Refiner(const ColoredDigraph& a, const ColoredDigraph& b) : a_{&a, reverse(a)}, b_{&b, reverse(b)} {}

  // Initial joint coloring from the user colors; false if the class sizes differ.
  bool initial(Coloring& ca, Coloring& cb, std::uint32_t& classes) const {
    std::vector<std::uint64_t> keys(a_.g->color);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto id = [&](std::uint64_t c) -> std::int64_t {
      auto it = std::lower_bound(keys.begin(), keys.end(), c);
      return it != keys.end() && *it == c ? it - keys.begin() : -1;
    };
    ca.resize(a_.g->size());
    cb.resize(b_.g->size());
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = static_cast<std::uint32_t>(id(a_.g->color[v]));
    for (std::size_t v = 0; v < cb.size(); ++v) {
      auto c = id(b_.g->color[v]);
      if (c < 0) return false;
      cb[v] = static_cast<std::uint32_t>(c);
    }
    classes = static_cast<std::uint32_t>(keys.size());
    return counts_match(ca, cb, classes);
  }

  // Refines both colorings to the coarsest equitable partition reachable by
  // neighbor-multiset hashing. Returns false when the two sides diverge.
  bool refine(Coloring& ca, Coloring& cb, std::uint32_t& classes) const {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> sa(ca.size()), sb(cb.size());
    while (true) {
      signatures(a_, ca, sa);
      signatures(b_, cb, sb);
      std::vector<std::pair<std::uint32_t, std::uint64_t>> keys(sa);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (std::size_t v = 0; v < ca.size(); ++v)
        ca[v] = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), sa[v]) - keys.begin());
      for (std::size_t v = 0; v < cb.size(); ++v) {
        auto it = std::lower_bound(keys.begin(), keys.end(), sb[v]);
        if (it == keys.end() || *it != sb[v]) return false;
        cb[v] = static_cast<std::uint32_t>(it - keys.begin());
      }
      const auto next = static_cast<std::uint32_t>(keys.size());
      if (!counts_match(ca, cb, next)) return false;
      const bool stable = next == classes;
      classes = next;
      if (stable) return true;
    }
  }

 private:
  static std::vector<std::vector<std::uint32_t>> reverse(const ColoredDigraph& g) {
    std::vector<std::vector<std::uint32_t>> in(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v)
      for (auto u : g.out[v]) in[u].push_back(v);
    return in;
  }

  static bool counts_match(const Coloring& ca, const Coloring& cb, std::uint32_t classes) {
    std::vector<std::int64_t> count(classes, 0);
    for (auto c : ca) ++count[c];
    for (auto c : cb) --count[c];
    return std::all_of(count.begin(), count.end(), [](std::int64_t x) { return x == 0; });
  }

  static void signatures(const Side& s, const Coloring& c, std::vector<std::pair<std::uint32_t, std::uint64_t>>& sig) {
    for (std::size_t v = 0; v < c.size(); ++v) {
      std::uint64_t ho = 0, hi = 0;
      for (auto u : s.g->out[v]) ho += mix(c[u]);
      for (auto u : s.in[v]) hi += mix(c[u] ^ 0x5555555555555555ULL);
      sig[v] = {c[v], mix(ho) ^ (hi * 0x9e3779b97f4a7c15ULL)};
    }
  }

  Side a_, b_;
};

class Search {
 public:
  Search(const ColoredDigraph& a, const ColoredDigraph& b, std::uint64_t budget)
      : a_(a), b_(b), refiner_(a, b), budget_(budget) {}

  SearchOutcome<std::vector<std::uint32_t>> run() {
    SearchOutcome<std::vector<std::uint32_t>> out;
    if (a_.size() != b_.size()) return out;
    Coloring ca, cb;
    std::uint32_t classes = 0;
    if (!refiner_.initial(ca, cb, classes) || !refiner_.refine(ca, cb, classes)) return out;
    out.status = descend(ca, cb, classes);
    out.nodes = budget_.used();
    if (out.status == SearchStatus::Found) out.value = std::move(result_);
    return out;
  }

 private:
  SearchStatus descend(const Coloring& ca, const Coloring& cb, std::uint32_t classes) {
    if (!budget_.charge()) return SearchStatus::BudgetExceeded;
    if (classes == ca.size()) {
      std::vector<std::uint32_t> inv(classes), map(ca.size());
      for (std::uint32_t v = 0; v < cb.size(); ++v) inv[cb[v]] = v;
      for (std::uint32_t v = 0; v < ca.size(); ++v) map[v] = inv[ca[v]];
      if (!is_colored_isomorphism(a_, b_, map)) return SearchStatus::Exhausted;
      result_ = std::move(map);
      return SearchStatus::Found;
    }
    // Smallest non-singleton cell, lowest color on ties.
    std::vector<std::uint32_t> count(classes, 0);
    for (auto c : ca) ++count[c];
    std::uint32_t cell = classes;
    for (std::uint32_t c = 0; c < classes; ++c)
      if (count[c] > 1 && (cell == classes || count[c] < count[cell])) cell = c;
    std::uint32_t v = 0;
    while (ca[v] != cell) ++v;
    for (std::uint32_t w = 0; w < cb.size(); ++w) {
      if (cb[w] != cell) continue;
      Coloring na(ca), nb(cb);
      na[v] = classes;
      nb[w] = classes;
      std::uint32_t nc = classes + 1;
      if (!refiner_.refine(na, nb, nc)) {
        if (!budget_.charge()) return SearchStatus::BudgetExceeded;
        continue;
      }
      auto st = descend(na, nb, nc);
      if (st != SearchStatus::Exhausted) return st;
    }
    return SearchStatus::Exhausted;
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  Refiner refiner_;
  Budget budget_;
  std::vector<std::uint32_t> result_;
};

}  // namespace

bool is_colored_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b, const std::vector<std::uint32_t>& map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto w : map) {
    if (w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  std::vector<std::uint32_t> img, target;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (a.color[v] != b.color[map[v]] || a.out[v].size() != b.out[map[v]].size()) return false;
    img.clear();
    for (auto u : a.out[v]) img.push_back(map[u]);
    target = b.out[map[v]];
    std::sort(img.begin(), img.end());
    std::sort(target.begin(), target.end());
    if (img != target) return false;
  }
  return true;
}

SearchOutcome<std::vector<std::uint32_t>> colored_digraph_isomorphism(const ColoredDigraph& a,
                                                                      const ColoredDigraph& b,
                                                                      std::uint64_t budget) {
  return Search(a, b, budget).run();
}

}  // namespace grpx
