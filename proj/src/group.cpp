#include "grpx/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "grpx/error.hpp"
#include "grpx/group_build.hpp"

namespace grpx {

namespace {

std::uint64_t fnv1a(const std::vector<std::uint16_t>& table, std::size_t n) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(n);
  for (std::uint16_t v : table) {
    h ^= v & 0xff;
    h *= 1099511628211ULL;
    h ^= v >> 8;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap || n > kMaxOrder)
    throw Error(ErrorCode::OrderCapExceeded,
                std::string(what) + " of order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(std::min(cap, kMaxOrder)));
}

}  // namespace

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t n, std::vector<std::uint16_t> table,
                                            std::vector<Elem> generators,
                                            std::vector<Elem> input_labels) {
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(table);
  d->input_labels = std::move(input_labels);
  d->inverses.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t* row = d->table.data() + i * n;
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] == 0) {
        d->inverses[i] = static_cast<Elem>(j);
        break;
      }
  }
  d->orders.assign(n, 1);
  d->exponent = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::uint32_t k = 1;
    std::size_t x = i;
    while (x != 0) {
      x = d->table[x * n + i];
      ++k;
    }
    d->orders[i] = k;
    d->exponent = std::lcm(d->exponent, k);
  }
  d->abelian = true;
  for (std::size_t i = 0; i < n && d->abelian; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d->table[i * n + j] != d->table[j * n + i]) {
        d->abelian = false;
        break;
      }
  d->hash = fnv1a(d->table, n);

  // Drop the identity and duplicates from supplied generators.
  std::vector<Elem> gens;
  for (Elem g : generators)
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  if (gens.empty() && n > 1) {
    // Greedy: repeatedly add an element of largest order outside the span.
    Bitset span(n);
    span.set(0);
    std::vector<Elem> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Elem a, Elem b) { return d->orders[a] > d->orders[b]; });
    for (Elem cand : by_order) {
      if (span.test(cand)) continue;
      gens.push_back(cand);
      // Recompute the closure of gens.
      span.clear();
      span.set(0);
      std::vector<Elem> frontier{0};
      while (!frontier.empty()) {
        Elem x = frontier.back();
        frontier.pop_back();
        for (Elem g : gens) {
          Elem y = d->table[static_cast<std::size_t>(x) * n + g];
          if (!span.test(y)) {
            span.set(y);
            frontier.push_back(y);
          }
        }
      }
      if (span.count() == n) break;
    }
  }
  d->generators = std::move(gens);
  return FiniteGroup(std::move(d));
}

Elem FiniteGroup::power(Elem a, long long k) const {
  const std::uint32_t o = element_order(a);
  long long e = k % static_cast<long long>(o);
  if (e < 0) e += o;
  Elem r = 0;
  Elem base = a;
  auto ue = static_cast<unsigned long long>(e);
  while (ue) {
    if (ue & 1U) r = mul(r, base);
    base = mul(base, base);
    ue >>= 1U;
  }
  return r;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->table == b.d_->table);
}

bool GroupHom::is_homomorphism() const {
  const std::size_t n = source.order();
  if (images.size() != n || images[0] != 0) return false;
  for (Elem x : images)
    if (x >= target.order()) return false;
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      if (images[source.mul(s, t)] != target.mul(images[s], images[t])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source.order() != target.order() || images.size() != source.order()) return false;
  Bitset seen(target.order());
  for (Elem x : images) {
    if (x >= target.order() || seen.test(x)) return false;
    seen.set(x);
  }
  return true;
}

GroupHom identity_hom(const FiniteGroup& g) {
  GroupHom h{g, g, std::vector<Elem>(g.order())};
  std::iota(h.images.begin(), h.images.end(), 0);
  return h;
}

namespace detail {

std::vector<std::uint16_t> table_from_right_actions(std::size_t n,
                                                    const std::vector<std::vector<Elem>>& right_mult,
                                                    const char* what) {
  // BFS over the right Cayley graph from the identity; y = parent[y] * gen[y].
  std::vector<Elem> order_seen;
  order_seen.reserve(n);
  std::vector<std::int32_t> parent(n, -1), via(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  order_seen.push_back(0);
  for (std::size_t qi = 0; qi < order_seen.size(); ++qi) {
    Elem x = order_seen[qi];
    for (std::size_t g = 0; g < right_mult.size(); ++g) {
      Elem y = right_mult[g][x];
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = static_cast<std::int32_t>(x);
        via[y] = static_cast<std::int32_t>(g);
        order_seen.push_back(y);
      }
    }
  }
  if (order_seen.size() != n)
    throw Error(ErrorCode::InvalidInput, std::string(what) + ": generators do not reach every element");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint16_t* row = table.data() + x * n;
    row[0] = static_cast<std::uint16_t>(x);
    for (std::size_t qi = 1; qi < n; ++qi) {
      Elem y = order_seen[qi];
      row[y] = static_cast<std::uint16_t>(right_mult[via[y]][row[parent[y]]]);
    }
  }
  return table;
}

std::optional<std::array<Elem, 3>> light_associativity_violation(std::size_t n,
                                                                 const std::vector<std::uint16_t>& table,
                                                                 const std::vector<Elem>& gens) {
  // (x a) y = x (a y) for every a in a generating set implies associativity.
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * n + b]; };
  for (Elem a : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xa = m(x, a);
      for (std::size_t y = 0; y < n; ++y)
        if (m(xa, y) != m(x, m(a, y)))
          return std::array<Elem, 3>{static_cast<Elem>(x), a, static_cast<Elem>(y)};
    }
  return std::nullopt;
}

}  // namespace detail

FiniteGroup group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& input) {
  const std::size_t n = input.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty table");
  check_cap(n, kMaxOrder, "table");
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n)
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has " +
                                               std::to_string(input[i].size()) + " entries, expected " +
                                               std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (input[i][j] >= n) throw Error(ErrorCode::InvalidInput, "entry out of range at cell " + cell(i, j));
  }
  // Latin square: report the first repeated entry in row-major order.
  {
    std::vector<std::int64_t> col_seen(n * n, -1);
    std::vector<std::int64_t> row_seen(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t v = input[i][j];
        if (row_seen[v] == static_cast<std::int64_t>(i))
          throw Error(ErrorCode::NotLatinSquare, "value " + std::to_string(v) + " repeats in row " +
                                                     std::to_string(i) + " at cell " + cell(i, j));
        row_seen[v] = static_cast<std::int64_t>(i);
        if (col_seen[j * n + v] != -1)
          throw Error(ErrorCode::NotLatinSquare, "value " + std::to_string(v) + " repeats in column " +
                                                     std::to_string(j) + " at cell " + cell(i, j));
        col_seen[j * n + v] = static_cast<std::int64_t>(i);
      }
    }
  }
  // Two-sided identity.
  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = input[c][i] == i && input[i][c] == i;
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorCode::NoIdentity, "no two-sided identity in the table");

  // Relabel so that the identity is 0 (swap labels 0 and e).
  std::vector<Elem> label(n);  // new index -> old label
  std::iota(label.begin(), label.end(), 0);
  std::swap(label[0], label[*e]);
  std::vector<Elem> to_new(n);
  for (std::size_t i = 0; i < n; ++i) to_new[label[i]] = static_cast<Elem>(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::uint16_t>(to_new[input[label[i]][label[j]]]);

  // Generating set of the magma (closure under right multiplication).
  std::vector<Elem> gens;
  {
    Bitset reached(n);
    reached.set(0);
    std::vector<Elem> stack;
    for (std::size_t cand = 1; cand < n; ++cand) {
      if (reached.test(cand)) continue;
      gens.push_back(static_cast<Elem>(cand));
      reached.clear();
      reached.set(0);
      stack.assign(gens.begin(), gens.end());
      for (Elem g : gens) reached.set(g);
      while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (Elem g : gens) {
          Elem y = table[static_cast<std::size_t>(x) * n + g];
          if (!reached.test(y)) {
            reached.set(y);
            stack.push_back(y);
          }
        }
      }
    }
  }
  if (auto bad = detail::light_associativity_violation(n, table, gens)) {
    auto [x, a, y] = *bad;
    throw Error(ErrorCode::NotAssociative, "(x*a)*y != x*(a*y) for x=" + std::to_string(label[x]) +
                                               " a=" + std::to_string(label[a]) +
                                               " y=" + std::to_string(label[y]) + ", first cell " +
                                               cell(label[x], label[a]));
  }
  std::vector<Elem> input_labels;
  if (*e != 0) input_labels = label;
  return FiniteGroup::from_trusted_table(n, std::move(table), {}, std::move(input_labels));
}

FiniteGroup read_cayley_table(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorCode::InvalidInput, "missing or invalid order on line 1");
  if (static_cast<std::size_t>(n) > kMaxOrder) check_cap(static_cast<std::size_t>(n), kMaxOrder, "table");
  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(n),
                                               std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v))
        throw Error(ErrorCode::InvalidInput, "table truncated at cell " + cell(static_cast<std::size_t>(i),
                                                                               static_cast<std::size_t>(j)));
      if (v < 0 || v >= n)
        throw Error(ErrorCode::InvalidInput,
                    "entry out of range at cell " + cell(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      rows[i][j] = static_cast<std::uint32_t>(v);
    }
  return group_from_cayley_table(rows);
}

std::string write_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Elem i = 0; i < g.order(); ++i) {
    auto row = g.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::size_t cap) {
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(ErrorCode::InvalidInput, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw Error(ErrorCode::InvalidInput, "generator is not a bijection");
      hit[v] = 1;
    }
  }
  struct PermHash {
    std::size_t operator()(const Permutation& p) const {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto v : p) {
        h ^= v;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, Elem, PermHash> index;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  elems.push_back(id);
  index.emplace(id, 0);
  std::vector<std::vector<Elem>> right(generators.size());
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Permutation prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = generators[g][elems[qi][i]];
      auto [it, inserted] = index.emplace(prod, static_cast<Elem>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(prod));
        check_cap(elems.size(), cap, "permutation closure");
      }
      right[g].resize(std::max(right[g].size(), qi + 1));
      right[g][qi] = it->second;
    }
  }
  const std::size_t n = elems.size();
  for (auto& r : right) r.resize(n);
  auto table = detail::table_from_right_actions(n, right, "permutation closure");
  std::vector<Elem> gens;
  for (const auto& p : generators) gens.push_back(index.at(p));
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(gens));
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group order must be positive");
  check_cap(n, kMaxOrder, "cyclic group");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(gens));
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_cap(n, cap, "direct product");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<std::uint16_t>(a.mul(xa, static_cast<Elem>(y / nb)) * nb +
                                                    b.mul(xb, static_cast<Elem>(y % nb)));
  }
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b.generators()) gens.push_back(g);
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(gens));
}

FiniteGroup make_semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                                    const std::vector<GroupHom>& action, std::size_t cap) {
  const std::size_t nn = normal.order(), nh = acting.order(), n = nn * nh;
  check_cap(n, cap, "semidirect product");
  if (action.size() != nh)
    throw Error(ErrorCode::ActionNotHomomorphism, "action must assign an automorphism to each of the " +
                                                      std::to_string(nh) + " acting elements");
  for (std::size_t h = 0; h < nh; ++h)
    if (!(action[h].source == normal) || !(action[h].target == normal) || !action[h].is_automorphism())
      throw Error(ErrorCode::ActionNotAutomorphism,
                  "image of acting element " + std::to_string(h) + " is not an automorphism of N");
  for (Elem x = 0; x < nn; ++x)
    if (action[0].images[x] != x)
      throw Error(ErrorCode::ActionNotHomomorphism, "identity does not act trivially");
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) {
      const auto& composed = action[acting.mul(h1, h2)].images;
      for (Elem x = 0; x < nn; ++x)
        if (composed[x] != action[h1].images[action[h2].images[x]])
          throw Error(ErrorCode::ActionNotHomomorphism,
                      "action(h1 h2) != action(h1) o action(h2) for h1=" + std::to_string(h1) +
                          " h2=" + std::to_string(h2));
    }
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem x1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
    const auto& img = action[h1].images;
    for (std::size_t y = 0; y < n; ++y) {
      const Elem y1 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
      table[x * n + y] = static_cast<std::uint16_t>(normal.mul(x1, img[y1]) * nh + acting.mul(h1, h2));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : normal.generators()) gens.push_back(static_cast<Elem>(g * nh));
  for (Elem g : acting.generators()) gens.push_back(g);
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(gens));
}

std::vector<GroupHom> action_from_generators(const FiniteGroup& normal, const FiniteGroup& acting,
                                             const std::vector<GroupHom>& generator_images) {
  const auto& gens = acting.generators();
  if (generator_images.size() != gens.size())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(gens.size()) +
                                                  " generator automorphisms, got " +
                                                  std::to_string(generator_images.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!generator_images[i].is_automorphism())
      throw Error(ErrorCode::ActionNotAutomorphism,
                  "image of acting generator " + std::to_string(i + 1) + " is not an automorphism");
  const std::size_t nh = acting.order();
  std::vector<GroupHom> action(nh);
  std::vector<char> set(nh, 0);
  action[0] = identity_hom(normal);
  set[0] = 1;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem h = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem hg = acting.mul(h, gens[i]);
      std::vector<Elem> img(normal.order());
      for (Elem x = 0; x < normal.order(); ++x) img[x] = action[h].images[generator_images[i].images[x]];
      if (!set[hg]) {
        action[hg] = GroupHom{normal, normal, std::move(img)};
        set[hg] = 1;
        queue.push_back(hg);
      } else if (action[hg].images != img) {
        throw Error(ErrorCode::ActionNotHomomorphism,
                    "generator automorphisms do not satisfy the relations of the acting group");
      }
    }
  }
  return action;
}

std::uint32_t element_order(const FiniteGroup& g, Elem x) {
  if (x >= g.order()) throw Error(ErrorCode::InvalidInput, "element out of range");
  return g.element_order(x);
}

std::map<std::uint32_t, std::size_t> order_statistics(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> out;
  for (auto o : g.orders()) ++out[o];
  return out;
}

}  // namespace grpx
