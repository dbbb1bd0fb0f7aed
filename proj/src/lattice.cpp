#include "grpx/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "grpx/error.hpp"
#include "grpx/iso_engine.hpp"
#include "grpx/parallel.hpp"

namespace grpx {

Bitset closure(const FiniteGroup& g, const std::vector<Elem>& x) {
  Bitset seen(g.order());
  seen.set(0);
  std::vector<Elem> stack{0};
  while (!stack.empty()) {
    const Elem y = stack.back();
    stack.pop_back();
    for (Elem s : x) {
      const Elem z = g.mul(y, s);
      if (!seen.test(z)) {
        seen.set(z);
        stack.push_back(z);
      }
    }
  }
  return seen;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& x) {
  Subgroup h{closure(g, x), {}};
  for (Elem s : x)
    if (s != 0 && std::find(h.generators.begin(), h.generators.end(), s) == h.generators.end())
      h.generators.push_back(s);
  return h;
}

namespace {

// Greedy generating set of a member set, largest orders first.
std::vector<Elem> greedy_generators(const FiniteGroup& g, const Bitset& members) {
  std::vector<Elem> elems = members.to_vector();
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  const std::size_t target = elems.size();
  std::vector<Elem> gens;
  Bitset span(g.order());
  span.set(0);
  for (Elem x : elems) {
    if (span.count() == target) break;
    if (span.test(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

bool normal_in(const FiniteGroup& g, const std::vector<Elem>& conjugators, const Subgroup& h) {
  for (Elem y : conjugators)
    for (Elem s : h.generators)
      if (!h.members.test(g.conj(s, y))) return false;
  return true;
}

Bitset normal_closure(const FiniteGroup& g, std::vector<Elem> x) {
  Bitset members = closure(g, x);
  // Grow until conjugation by the generators of G is closed.
  while (true) {
    bool grew = false;
    for (Elem y : g.generators()) {
      std::vector<Elem> extra;
      members.for_each([&](std::size_t s) {
        Elem c = g.conj(static_cast<Elem>(s), y);
        if (!members.test(c)) extra.push_back(c);
      });
      if (!extra.empty()) {
        x.insert(x.end(), extra.begin(), extra.end());
        members = closure(g, x);
        x = greedy_generators(g, members);
        grew = true;
      }
    }
    if (!grew) return members;
  }
}

unsigned log_base(std::size_t n, std::size_t p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

bool is_normal(const FiniteGroup& g, const Subgroup& h) { return normal_in(g, g.generators(), h); }

FiniteGroup induced_group(const FiniteGroup& g, const Bitset& members, std::vector<Elem>* embedding) {
  std::vector<Elem> elems = members.to_vector();
  const std::size_t k = elems.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[elems[i]] = static_cast<Elem>(i);
  std::vector<std::uint16_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<std::uint16_t>(local[g.mul(elems[i], elems[j])]);
  if (embedding) *embedding = elems;
  return FiniteGroup::from_trusted_table(k, std::move(table));
}

FiniteGroup quotient_group(const FiniteGroup& g, const Bitset& normal, std::vector<Elem>* projection) {
  const std::size_t n = g.order();
  const std::vector<Elem> nm = normal.to_vector();
  std::vector<Elem> coset(n, ~Elem{0});
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != ~Elem{0}) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : nm) coset[g.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::uint16_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);
  if (projection) *projection = coset;
  return FiniteGroup::from_trusted_table(k, std::move(table));
}

SubgroupLattice::SubgroupLattice(FiniteGroup g, std::vector<Bitset> members, std::vector<Bitset> up,
                                 std::vector<std::vector<Elem>> generators)
    : g_(std::move(g)) {
  const bool trusted = !up.empty();
  const bool have_gens = generators.size() == members.size();
  if (!trusted)
    std::sort(members.begin(), members.end(), [](const Bitset& a, const Bitset& b) {
      const auto ca = a.count(), cb = b.count();
      return ca != cb ? ca < cb : Bitset::lex_less(a, b);
    });
  const std::size_t s = members.size();
  subs_.resize(s);
  orders_.resize(s);
  parallel_chunks(0, s, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      subs_[i].members = std::move(members[i]);
      subs_[i].generators = have_gens ? std::move(generators[i]) : greedy_generators(g_, subs_[i].members);
      orders_[i] = subs_[i].members.count();
    }
  }, 8);
  if (trusted) {
    up_ = std::move(up);
  } else {
    build_containment();
  }
  build_derived();
}

void SubgroupLattice::build_containment() {
  const std::size_t s = subs_.size();
  up_.assign(s, Bitset(s));
  parallel_chunks(0, s, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      up_[i].set(i);
      for (std::size_t j = i + 1; j < s; ++j)
        if (orders_[j] > orders_[i] && orders_[j] % orders_[i] == 0 &&
            subs_[i].members.is_subset_of(subs_[j].members))
          up_[i].set(j);
    }
  }, 4);
}

void SubgroupLattice::build_derived() {
  const std::size_t s = subs_.size();
  down_.assign(s, Bitset(s));
  for (std::size_t i = 0; i < s; ++i) up_[i].for_each([&](std::size_t j) { down_[j].set(i); });

  lower_covers_.assign(s, {});
  upper_covers_.assign(s, {});
  parallel_chunks(0, s, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      Bitset cand = down_[j];
      cand.reset(j);
      for (std::size_t i = cand.last(); i < s; i = cand.last()) {
        lower_covers_[j].push_back(static_cast<std::uint32_t>(i));
        cand.subtract(down_[i]);
      }
      std::reverse(lower_covers_[j].begin(), lower_covers_[j].end());
    }
  }, 4);
  for (std::size_t j = 0; j < s; ++j)
    for (auto i : lower_covers_[j]) upper_covers_[i].push_back(static_cast<std::uint32_t>(j));

  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index;
  index.reserve(s * 2);
  for (std::size_t i = 0; i < s; ++i) index.emplace(subs_[i].members, static_cast<std::uint32_t>(i));
  const std::size_t n = g_.order();
  cyclic_of_.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    auto it = index.find(closure(g_, {x}));
    if (it == index.end()) throw Error(ErrorCode::InvalidInput, "subgroup list is missing a cyclic subgroup");
    cyclic_of_[x] = it->second;
  }

  cyclic_.assign(s, 0);
  normal_.assign(s, 0);
  abelian_.assign(s, 0);
  parallel_chunks(0, s, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& h = subs_[i];
      cyclic_[i] = h.generators.size() <= 1;
      if (!cyclic_[i]) {
        h.members.for_each([&](std::size_t x) {
          if (g_.element_order(static_cast<Elem>(x)) == orders_[i]) cyclic_[i] = 1;
        });
      }
      normal_[i] = normal_in(g_, g_.generators(), h);
      bool ab = true;
      for (std::size_t a = 0; a < h.generators.size() && ab; ++a)
        for (std::size_t b = a + 1; b < h.generators.size() && ab; ++b)
          ab = g_.mul(h.generators[a], h.generators[b]) == g_.mul(h.generators[b], h.generators[a]);
      abelian_[i] = ab;
    }
  }, 8);

  frattini_.assign(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    if (lower_covers_[i].empty()) {
      frattini_[i] = i;
      continue;
    }
    std::size_t f = lower_covers_[i].front();
    for (auto c : lower_covers_[i]) f = meet(f, c);
    frattini_[i] = f;
  }

  d_.assign(s, 0);
  parallel_chunks(0, s, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (orders_[i] == 1) {
        d_[i] = 0;
      } else if (cyclic_[i]) {
        d_[i] = 1;
      } else if (auto p = prime_power_base(orders_[i])) {
        d_[i] = log_base(orders_[i] / orders_[frattini_[i]], *p);
      } else {
        d_[i] = search_d(i);
      }
    }
  }, 4);

  min_up_d_.assign(s, 0);
  for (std::size_t i = s; i-- > 0;) {
    std::uint32_t m = d_[i];
    for (auto j : upper_covers_[i]) m = std::min(m, min_up_d_[j]);
    min_up_d_[i] = m;
  }
}

std::uint32_t SubgroupLattice::search_d(std::size_t i) const {
  // Each generator may be taken to generate a maximal cyclic subgroup of H.
  std::vector<std::uint32_t> maxcyc;
  down_[i].for_each([&](std::size_t c) {
    if (!cyclic_[c] || c == 0) return;
    for (auto u : upper_covers_[c])
      if (cyclic_[u] && down_[i].test(u)) return;
    maxcyc.push_back(static_cast<std::uint32_t>(c));
  });
  const std::size_t m = maxcyc.size();
  for (std::uint32_t k = 2;; ++k) {
    std::vector<std::size_t> pick(k);
    std::vector<std::size_t> partial(k + 1);
    // Depth-first over k-combinations with running joins.
    std::function<bool(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start,
                                                                         std::size_t joined) {
      if (depth == k) return joined == i;
      for (std::size_t a = start; a + (k - depth) <= m; ++a) {
        const std::size_t next = depth == 0 ? maxcyc[a] : join(joined, maxcyc[a]);
        if (next == joined) continue;
        if (rec(depth + 1, a + 1, next)) return true;
      }
      return false;
    };
    if (rec(0, 0, 0)) return k;
    if (k > m) return static_cast<std::uint32_t>(m);
  }
}

std::size_t SubgroupLattice::meet(std::size_t i, std::size_t j) const {
  const Bitset& a = down_[i];
  const Bitset& b = down_[j];
  for (std::size_t w = a.word_count(); w-- > 0;) {
    const Bitset::Word x = a.data()[w] & b.data()[w];
    if (x) return w * Bitset::kWordBits + (Bitset::kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(x)));
  }
  return 0;
}

std::size_t SubgroupLattice::join(std::size_t i, std::size_t j) const {
  const Bitset& a = up_[i];
  const Bitset& b = up_[j];
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    const Bitset::Word x = a.data()[w] & b.data()[w];
    if (x) return w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(x));
  }
  return top();
}

std::size_t SubgroupLattice::join_of(const std::vector<std::uint32_t>& ids) const {
  std::size_t j = 0;
  for (auto i : ids) j = join(j, i);
  return j;
}

std::size_t SubgroupLattice::generated(const std::vector<Elem>& x) const {
  std::size_t j = 0;
  for (Elem e : x) j = join(j, cyclic_of_[e]);
  return j;
}

std::optional<std::size_t> SubgroupLattice::find(const Bitset& members) const {
  const std::size_t c = members.count();
  auto lo = std::lower_bound(orders_.begin(), orders_.end(), c) - orders_.begin();
  for (auto i = static_cast<std::size_t>(lo); i < subs_.size() && orders_[i] == c; ++i)
    if (subs_[i].members == members) return i;
  return std::nullopt;
}

bool operator==(const SubgroupLattice& a, const SubgroupLattice& b) {
  if (!(a.g_ == b.g_) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.subs_[i].members == b.subs_[i].members) || !(a.up_[i] == b.up_[i])) return false;
  return true;
}

bool is_solvable(const FiniteGroup& g) {
  FiniteGroup h = g;
  while (h.order() > 1) {
    Bitset d = derived_subgroup(h);
    if (d.count() == h.order()) return false;
    h = induced_group(h, d);
  }
  return true;
}

Bitset center(const FiniteGroup& g) {
  Bitset z(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y : g.generators())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return z;
}

Bitset derived_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  const auto& gens = g.generators();
  for (Elem a : gens)
    for (Elem b : gens) {
      Elem c = g.comm(a, b);
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

Bitset lower_central_term(const FiniteGroup& g, std::uint32_t i) {
  Bitset cur(g.order());
  cur.set_all();
  for (std::uint32_t k = 1; k < i; ++k) {
    std::vector<Elem> comms;
    const auto gens = greedy_generators(g, cur);
    for (Elem x : gens)
      for (Elem y : g.generators()) {
        Elem c = g.comm(x, y);
        if (c != 0) comms.push_back(c);
      }
    Bitset next = normal_closure(g, comms);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

bool is_nilpotent(const FiniteGroup& g) {
  Bitset cur(g.order());
  cur.set_all();
  while (cur.count() > 1) {
    std::vector<Elem> comms;
    for (Elem x : greedy_generators(g, cur))
      for (Elem y : g.generators()) {
        Elem c = g.comm(x, y);
        if (c != 0) comms.push_back(c);
      }
    Bitset next = normal_closure(g, comms);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g) {
  auto p = prime_power_base(g.order());
  if (!p) return std::nullopt;
  return static_cast<std::uint32_t>(*p);
}

namespace {

std::uint64_t ipow(std::uint64_t p, std::uint32_t n) {
  std::uint64_t r = 1;
  while (n--) r *= p;
  return r;
}

void require_p_group(const FiniteGroup& g, std::uint32_t p) {
  if (g.order() == 1) return;
  auto q = p_group_prime(g);
  if (!q || *q != p)
    throw Error(ErrorCode::NotAPGroup, "group of order " + std::to_string(g.order()) + " is not a " +
                                           std::to_string(p) + "-group");
}

}  // namespace

Bitset omega(const FiniteGroup& g, std::uint32_t p, std::uint32_t n) {
  require_p_group(g, p);
  const auto pn = ipow(p, n);
  std::vector<Elem> gens;
  for (Elem x = 1; x < g.order(); ++x)
    if (pn % g.element_order(x) == 0) gens.push_back(x);
  return closure(g, gens);
}

Bitset mho(const FiniteGroup& g, std::uint32_t p, std::uint32_t n) {
  require_p_group(g, p);
  const auto pn = static_cast<long long>(ipow(p, n));
  std::vector<Elem> gens;
  Bitset seen(g.order());
  for (Elem x = 1; x < g.order(); ++x) {
    Elem y = g.power(x, pn);
    if (y != 0 && !seen.test(y)) {
      seen.set(y);
      gens.push_back(y);
    }
  }
  return closure(g, gens);
}

Subgroup characteristic_subgroup(const SubgroupLattice& l, CharacteristicSpec spec) {
  const FiniteGroup& g = l.group();
  Bitset m;
  switch (spec.kind) {
    case SubgroupKind::Frattini: return l.subgroup(l.frattini(l.top()));
    case SubgroupKind::Center: m = center(g); break;
    case SubgroupKind::Derived: m = derived_subgroup(g); break;
    case SubgroupKind::Gamma: m = lower_central_term(g, std::max<std::uint32_t>(spec.level, 1)); break;
    case SubgroupKind::Omega: m = omega(g, spec.prime, spec.level); break;
    case SubgroupKind::Mho: m = mho(g, spec.prime, spec.level); break;
    case SubgroupKind::Sylow: {
      std::size_t target = 1;
      if (spec.prime >= 2)
        for (std::size_t n = g.order(); n % spec.prime == 0; n /= spec.prime) target *= spec.prime;
      for (std::size_t i = 0; i < l.size(); ++i)
        if (l.order(i) == target) return l.subgroup(i);
      return l.subgroup(0);
    }
  }
  if (auto i = l.find(m)) return l.subgroup(*i);
  return Subgroup{m, greedy_generators(g, m)};
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "group of order " + std::to_string(n) + " exceeds lattice cap " + std::to_string(cap));
  std::vector<Subgroup> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members).second) found.push_back(std::move(h));
  };
  Bitset trivial(n);
  trivial.set(0);
  add(Subgroup{trivial, {}});

  if (is_solvable(g)) {
    // Every subgroup K > 1 of a solvable group has a normal subgroup H of prime
    // index, and then K = H<x> for any x in K \ H.
    for (std::size_t qi = 0; qi < found.size(); ++qi) {
      const Subgroup h = found[qi];
      const std::vector<Elem> hm = h.members.to_vector();
      Bitset covered = h.members;
      for (Elem x = 1; x < n; ++x) {
        if (covered.test(x)) continue;
        bool normalizes = true;
        for (Elem s : h.generators)
          if (!h.members.test(g.conj(s, x))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        std::uint32_t k = 1;
        Elem xk = x;
        while (!h.members.test(xk)) {
          xk = g.mul(xk, x);
          ++k;
        }
        if (!is_prime(k)) continue;
        Bitset km(n);
        Elem xi = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
          for (Elem y : hm) km.set(g.mul(y, xi));
          xi = g.mul(xi, x);
        }
        covered |= km;
        Subgroup next{std::move(km), h.generators};
        next.generators.push_back(x);
        add(std::move(next));
      }
    }
  } else {
    std::vector<Subgroup> cyclics;
    for (Elem x = 1; x < n; ++x) {
      Subgroup c = generated_subgroup(g, {x});
      if (seen.count(c.members)) continue;
      add(c);
      cyclics.push_back(std::move(c));
    }
    for (std::size_t qi = 1; qi < found.size(); ++qi) {
      for (const auto& c : cyclics) {
        if (c.members.is_subset_of(found[qi].members)) continue;
        std::vector<Elem> gens = found[qi].generators;
        gens.push_back(c.generators.front());
        add(generated_subgroup(g, gens));
      }
    }
  }
  std::vector<Bitset> members;
  members.reserve(found.size());
  for (auto& h : found) members.push_back(std::move(h.members));
  return SubgroupLattice(g, std::move(members));
}

std::uint32_t min_generators(const SubgroupLattice& l, std::size_t i) { return l.d(i); }

std::uint32_t min_generators(const FiniteGroup& g, const Subgroup& h) {
  FiniteGroup sub = induced_group(g, h.members);
  if (sub.order() == 1) return 0;
  if (auto p = p_group_prime(sub)) {
    // Phi(H) = H^p [H,H] for a p-group.
    std::vector<Elem> gens;
    for (Elem x = 0; x < sub.order(); ++x) {
      Elem y = sub.power(x, *p);
      if (y) gens.push_back(y);
    }
    Bitset der = derived_subgroup(sub);
    der.for_each([&](std::size_t x) {
      if (x) gens.push_back(static_cast<Elem>(x));
    });
    return log_base(sub.order() / closure(sub, gens).count(), *p);
  }
  auto l = enumerate_subgroups(sub, kMaxOrder);
  return l.d(l.top());
}

namespace {

// Largest family of cyclic subgroups of H, none inside the join of the others,
// whose join is H.
class MaxIndependent {
 public:
  MaxIndependent(const SubgroupLattice& l, std::size_t target, std::uint64_t budget)
      : l_(l), target_(target), budget_(budget) {
    l.down(target).for_each([&](std::size_t c) {
      if (c != 0 && l.is_cyclic(c)) cyc_.push_back(static_cast<std::uint32_t>(c));
    });
  }

  std::uint32_t run() {
    std::vector<std::uint32_t> fam;
    dfs(fam, 0, 0);
    return best_;
  }

 private:
  bool independent_with(const std::vector<std::uint32_t>& fam, std::uint32_t c) {
    // c must avoid the join of fam, and each member must avoid the join of the rest plus c.
    if (l_.leq(c, l_.join_of(fam))) return false;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::size_t j = c;
      for (std::size_t k = 0; k < fam.size(); ++k)
        if (k != i) j = l_.join(j, fam[k]);
      if (l_.leq(fam[i], j)) return false;
    }
    return true;
  }

  void dfs(std::vector<std::uint32_t>& fam, std::size_t start, std::size_t joined) {
    if (!budget_.charge())
      throw Error(ErrorCode::SearchBudgetExceeded, "max_minimal_generating exceeded its node budget");
    if (joined == target_) {
      best_ = std::max(best_, static_cast<std::uint32_t>(fam.size()));
      return;
    }
    for (std::size_t a = start; a < cyc_.size(); ++a) {
      const auto c = cyc_[a];
      if (!independent_with(fam, c)) continue;
      fam.push_back(c);
      dfs(fam, a + 1, l_.join(joined, c));
      fam.pop_back();
    }
  }

  const SubgroupLattice& l_;
  std::size_t target_;
  Budget budget_;
  std::vector<std::uint32_t> cyc_;
  std::uint32_t best_ = 0;
};

}  // namespace

std::uint32_t max_minimal_generating(const SubgroupLattice& l, std::size_t i, std::uint64_t budget) {
  if (l.order(i) == 1) return 0;
  if (l.is_cyclic(i)) {
    // A cyclic group of order with k distinct primes has m = k.
    return static_cast<std::uint32_t>(prime_factors(l.order(i)).size());
  }
  // p-groups: every minimal generating set has d elements.
  if (prime_power_base(l.order(i))) return l.d(i);
  return MaxIndependent(l, i, budget).run();
}

std::uint32_t max_minimal_generating(const FiniteGroup& g, const Subgroup& h, std::uint64_t budget) {
  auto l = enumerate_subgroups(induced_group(g, h.members), kMaxOrder);
  return max_minimal_generating(l, l.top(), budget);
}

bool is_modular_lattice(const SubgroupLattice& l) {
  const std::size_t s = l.size();
  for (std::size_t h3 = 0; h3 < s; ++h3) {
    bool ok = true;
    l.down(h3).for_each([&](std::size_t h1) {
      if (!ok) return;
      for (std::size_t h2 = 0; h2 < s; ++h2) {
        if (l.leq(h2, h3) || l.leq(h1, h2)) continue;
        if (l.meet(l.join(h1, h2), h3) != l.join(h1, l.meet(h2, h3))) {
          ok = false;
          return;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool is_dedekind(const SubgroupLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!l.is_normal(i)) return false;
  return true;
}

bool is_hamiltonian(const SubgroupLattice& l) { return !l.group().is_abelian() && is_dedekind(l); }

bool is_metacyclic(const SubgroupLattice& l, std::size_t i) {
  const FiniteGroup& g = l.group();
  const Subgroup& h = l.subgroup(i);
  if (l.is_cyclic(i)) return true;
  const std::vector<Elem> hm = h.members.to_vector();
  bool found = false;
  l.down(i).for_each([&](std::size_t c) {
    if (found || !l.is_cyclic(c)) return;
    const Subgroup& nsub = l.subgroup(c);
    if (!normal_in(g, h.generators, nsub)) return;
    const std::size_t index = l.order(i) / l.order(c);
    // H/N is cyclic iff some h has order |H:N| modulo N.
    for (Elem x : hm) {
      std::size_t k = 1;
      Elem y = x;
      while (!nsub.members.test(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (k == index) {
        found = true;
        return;
      }
    }
  });
  return found;
}

bool is_metacyclic(const SubgroupLattice& l) { return is_metacyclic(l, l.top()); }

bool is_powerful(const FiniteGroup& g, std::uint32_t p) {
  require_p_group(g, p);
  Bitset der = derived_subgroup(g);
  return der.is_subset_of(mho(g, p, p == 2 ? 2 : 1));
}

bool is_homocyclic(const FiniteGroup& g, std::uint32_t p) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "homocyclic test needs an abelian group");
  require_p_group(g, p);
  std::size_t prev = g.order();
  std::optional<std::size_t> step;
  for (std::uint32_t i = 1; prev > 1; ++i) {
    const std::size_t cur = mho(g, p, i).count();
    const std::size_t idx = prev / cur;
    if (step && *step != idx) return false;
    step = idx;
    prev = cur;
  }
  return true;
}

std::optional<IwasawaWitness> iwasawa_decomposition(const SubgroupLattice& l, std::uint32_t p) {
  const FiniteGroup& g = l.group();
  auto q = p_group_prime(g);
  if (!q || *q != p) return std::nullopt;
  const std::uint32_t s_min = p == 2 ? 2 : 1;
  if (g.is_abelian()) {
    std::uint32_t s = 0;
    while (ipow(p, s) < g.exponent()) ++s;
    return IwasawaWitness{l.top(), 0, std::max(s, s_min)};
  }
  for (std::size_t a = 0; a < l.top(); ++a) {
    if (!l.is_normal(a) || !l.is_abelian(a)) continue;
    const Subgroup& am = l.subgroup(a);
    const std::size_t index = g.order() / l.order(a);
    std::uint32_t expa = 1;
    am.members.for_each([&](std::size_t x) { expa = std::max(expa, g.element_order(static_cast<Elem>(x))); });
    for (Elem b = 1; b < g.order(); ++b) {
      // b must have order |G:A| modulo A.
      if (!am.members.test(g.power(b, static_cast<long long>(index)))) continue;
      if (index > 1 && am.members.test(g.power(b, static_cast<long long>(index / p)))) continue;
      for (std::uint32_t s = s_min; ipow(p, s) < expa; ++s) {
        const auto e = static_cast<long long>((1 + ipow(p, s)) % expa);
        bool ok = true;
        for (Elem x : am.generators)
          if (g.conj(x, b) != g.power(x, e)) {
            ok = false;
            break;
          }
        if (ok) return IwasawaWitness{a, b, s};
      }
    }
  }
  return std::nullopt;
}

namespace {

ColoredDigraph hasse_digraph(const SubgroupLattice& l, bool with_orders) {
  auto d = ColoredDigraph::with_vertices(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (auto j : l.upper_covers(i)) d.out[i].push_back(j);
    std::uint64_t c = l.down(i).count();
    c = c * 1000003ULL + l.up(i).count();
    c = c * 2 + (l.is_cyclic(i) ? 1 : 0);
    if (with_orders) c = c * 1000003ULL + l.order(i);
    d.color[i] = c;
  }
  return d;
}

}  // namespace

SearchOutcome<std::vector<std::uint32_t>> lattice_isomorphism(const SubgroupLattice& a, const SubgroupLattice& b,
                                                              bool index_preserving, std::uint64_t budget) {
  SearchOutcome<std::vector<std::uint32_t>> out;
  if (a.size() != b.size()) return out;
  if (index_preserving && a.group().order() != b.group().order()) return out;
  out = colored_digraph_isomorphism(hasse_digraph(a, index_preserving), hasse_digraph(b, index_preserving), budget);
  if (out.found()) {
    const auto& f = *out.value;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a.leq(i, j) != b.leq(f[i], f[j]) || (index_preserving && a.order(i) != b.order(f[i])))
          throw Error(ErrorCode::InvalidInput, "internal: lattice certificate failed validation");
  }
  return out;
}

std::uint32_t chief_non_frattini_count(const SubgroupLattice& l) {
  if (!is_solvable(l.group())) throw Error(ErrorCode::NotSolvable, "chief series count needs a solvable group");
  const auto& maximals = l.lower_covers(l.top());
  std::uint32_t count = 0;
  std::size_t y = 0;
  while (y != l.top()) {
    // The smallest normal subgroup above Y gives a chief factor.
    std::size_t x = l.top();
    l.up(y).for_each([&](std::size_t c) {
      if (c != y && l.is_normal(c) && l.order(c) < l.order(x)) x = c;
    });
    // Phi(G/Y) corresponds to the meet of the maximal subgroups containing Y.
    std::size_t phi = l.top();
    for (auto m : maximals)
      if (l.leq(y, m)) phi = l.meet(phi, m);
    if (!l.leq(x, phi)) ++count;
    y = x;
  }
  return count;
}

std::uint32_t rank(const SubgroupLattice& l) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < l.size(); ++i) r = std::max(r, l.d(i));
  return r;
}

StructureReport structure_report(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  StructureReport r;
  r.order = g.order();
  r.is_abelian = g.is_abelian();
  r.is_nilpotent = is_nilpotent(g);
  r.is_cyclic = l.is_cyclic(l.top());
  r.is_dedekind = is_dedekind(l);
  r.is_hamiltonian = is_hamiltonian(l);
  r.is_modular_lattice = is_modular_lattice(l);
  r.is_metacyclic = is_metacyclic(l);
  r.is_solvable = is_solvable(g);
  if (auto p = p_group_prime(g)) {
    r.is_powerful = is_powerful(g, *p);
    if (g.is_abelian()) r.is_homocyclic = is_homocyclic(g, *p);
  }
  r.d = l.d(l.top());
  r.m = max_minimal_generating(l, l.top());
  r.rank = rank(l);
  r.exponent = g.exponent();
  r.subgroup_count = l.size();
  for (auto p : prime_factors(g.order())) {
    auto s = characteristic_subgroup(l, {SubgroupKind::Sylow, 1, static_cast<std::uint32_t>(p)});
    r.sylow.emplace_back(static_cast<std::uint32_t>(p), *l.find(s.members));
  }
  r.frattini = l.frattini(l.top());
  r.center = *l.find(center(g));
  r.derived = *l.find(derived_subgroup(g));
  for (std::uint32_t i = 1;; ++i) {
    auto idx = *l.find(lower_central_term(g, i));
    if (!r.lower_central.empty() && r.lower_central.back() == idx) break;
    r.lower_central.push_back(idx);
  }
  return r;
}

std::string to_text(const StructureReport& r) {
  std::ostringstream out;
  auto flag = [&](const char* name, bool v) { out << name << ": " << (v ? "yes" : "no") << '\n'; };
  out << "order: " << r.order << '\n' << "subgroups: " << r.subgroup_count << '\n';
  flag("abelian", r.is_abelian);
  flag("nilpotent", r.is_nilpotent);
  flag("solvable", r.is_solvable);
  flag("cyclic", r.is_cyclic);
  flag("dedekind", r.is_dedekind);
  flag("hamiltonian", r.is_hamiltonian);
  flag("modular lattice", r.is_modular_lattice);
  flag("metacyclic", r.is_metacyclic);
  if (r.is_powerful) flag("powerful", *r.is_powerful);
  if (r.is_homocyclic) flag("homocyclic", *r.is_homocyclic);
  out << "d: " << r.d << "\nm: " << r.m << "\nrank: " << r.rank << "\nexponent: " << r.exponent << '\n';
  out << "sylow:";
  for (auto [p, i] : r.sylow) out << ' ' << p << "->#" << i;
  out << "\nfrattini: #" << r.frattini << "\ncenter: #" << r.center << "\nderived: #" << r.derived
      << "\nlower central:";
  for (auto i : r.lower_central) out << " #" << i;
  out << '\n';
  return out.str();
}

}  // namespace grpx
