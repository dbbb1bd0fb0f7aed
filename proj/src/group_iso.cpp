#include <algorithm>
#include <numeric>

#include "grpx/error.hpp"
#include "grpx/group.hpp"

namespace grpx {

namespace {

std::size_t closure_size(const FiniteGroup& g, const std::vector<Elem>& gens, Bitset& seen,
                         std::vector<Elem>& stack) {
  seen.clear();
  seen.set(0);
  stack.assign(1, 0);
  std::size_t count = 1;
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!seen.test(y)) {
        seen.set(y);
        stack.push_back(y);
        ++count;
      }
    }
  }
  return count;
}

// A short generating set: greedy by descending order, then an attempt to
// replace it with a pair when the greedy set is longer.
std::vector<Elem> short_generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  std::vector<Elem> by_order(n - 1);
  std::iota(by_order.begin(), by_order.end(), 1);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  if (g.element_order(by_order.front()) == n) return {by_order.front()};

  Bitset seen(n);
  std::vector<Elem> stack;
  std::vector<Elem> gens;
  Bitset span(n);
  span.set(0);
  for (Elem c : by_order) {
    if (span.test(c)) continue;
    gens.push_back(c);
    if (closure_size(g, gens, seen, stack) == n) break;
    span = seen;
  }
  if (gens.size() > 2) {
    std::size_t tries = 0;
    const std::size_t max_tries = std::max<std::size_t>(2000, 4'000'000 / n);
    for (std::size_t i = 0; i < by_order.size() && tries < max_tries; ++i)
      for (std::size_t j = i + 1; j < by_order.size() && tries < max_tries; ++j, ++tries) {
        std::vector<Elem> pair{by_order[i], by_order[j]};
        if (closure_size(g, pair, seen, stack) == n) return pair;
      }
  }
  return gens;
}

std::vector<std::size_t> centralizer_sizes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> out(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++out[x];
  return out;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> candidates;
  std::vector<Elem> images;
  Budget budget;
  std::vector<Elem> map, order_seen;
  std::vector<char> used;

  // Extends the map over <gens[0..k]> and reports whether it is a well-defined
  // injective homomorphism there.
  bool consistent(std::size_t k) {
    std::fill(map.begin(), map.end(), kUnset);
    std::fill(used.begin(), used.end(), 0);
    map[0] = 0;
    used[0] = 1;
    order_seen.assign(1, 0);
    for (std::size_t qi = 0; qi < order_seen.size(); ++qi) {
      const Elem x = order_seen[qi];
      for (std::size_t i = 0; i <= k; ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem fy = h.mul(map[x], images[i]);
        if (map[y] == kUnset) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = 1;
          order_seen.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  SearchStatus run(std::size_t k) {
    if (k == gens.size()) return SearchStatus::Found;
    for (Elem c : candidates[k]) {
      if (!budget.charge()) return SearchStatus::BudgetExceeded;
      images[k] = c;
      if (!consistent(k)) continue;
      auto st = run(k + 1);
      if (st != SearchStatus::Exhausted) return st;
    }
    return SearchStatus::Exhausted;
  }

  static constexpr Elem kUnset = ~Elem{0};
};

}  // namespace

SearchOutcome<GroupHom> group_isomorphism(const FiniteGroup& g, const FiniteGroup& h, std::uint64_t budget) {
  SearchOutcome<GroupHom> out;
  if (g.order() != h.order() || g.is_abelian() != h.is_abelian() || g.exponent() != h.exponent() ||
      order_statistics(g) != order_statistics(h))
    return out;
  const std::size_t n = g.order();
  auto cg = centralizer_sizes(g), ch = centralizer_sizes(h);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }
  IsoSearch s{g, h, short_generating_set(g), {}, {}, Budget(budget), std::vector<Elem>(n), {}, std::vector<char>(n)};
  // Fewest candidates first.
  std::vector<std::pair<std::size_t, Elem>> ranked;
  for (Elem x : s.gens) {
    std::size_t c = 0;
    for (Elem y = 0; y < n; ++y)
      if (h.element_order(y) == g.element_order(x) && ch[y] == cg[x]) ++c;
    ranked.emplace_back(c, x);
  }
  std::stable_sort(ranked.begin(), ranked.end());
  s.gens.clear();
  for (auto [c, x] : ranked) {
    s.gens.push_back(x);
    std::vector<Elem> cand;
    for (Elem y = 0; y < n; ++y)
      if (h.element_order(y) == g.element_order(x) && ch[y] == cg[x]) cand.push_back(y);
    s.candidates.push_back(std::move(cand));
  }
  s.images.assign(s.gens.size(), 0);
  if (s.gens.empty()) {
    out.status = SearchStatus::Found;
    out.value = identity_hom(g);
    out.value->target = h;
    return out;
  }
  out.status = s.run(0);
  out.nodes = s.budget.used();
  if (out.status == SearchStatus::Found) {
    s.consistent(s.gens.size() - 1);
    GroupHom f{g, h, s.map};
    if (!f.is_bijective() || !f.is_homomorphism())
      throw Error(ErrorCode::InvalidInput, "internal: isomorphism certificate failed validation");
    out.value = std::move(f);
  }
  return out;
}

}  // namespace grpx
