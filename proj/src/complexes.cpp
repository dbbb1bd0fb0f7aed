#include "grpx/complexes.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "grpx/error.hpp"
#include "grpx/graphs.hpp"
#include "grpx/iso_engine.hpp"
#include "grpx/parallel.hpp"

namespace grpx {

std::string_view to_string(ComplexKind k) { return k == ComplexKind::Independence ? "independence" : "strong"; }

namespace {

bool lex_less(std::span<const Elem> a, std::span<const Elem> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Position of a sorted face within a sorted level, or npos.
std::size_t find_face(const std::vector<Elem>& level, std::size_t k, std::span<const Elem> face) {
  std::size_t lo = 0, hi = level.size() / k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    std::span<const Elem> f(level.data() + mid * k, k);
    if (lex_less(f, face))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < level.size() / k && std::equal(face.begin(), face.end(), level.begin() + static_cast<std::ptrdiff_t>(lo * k)))
    return lo;
  return static_cast<std::size_t>(-1);
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (std::size_t k = 1; k < levels_.size(); ++k) c += face_count(k);
  return c;
}

bool SimplicialComplex::contains(std::span<const Elem> face) const {
  const auto k = face.size();
  if (k == 0) return true;
  if (k >= levels_.size()) return false;
  return find_face(levels_[k], k, face) != static_cast<std::size_t>(-1);
}

std::vector<std::vector<Elem>> SimplicialComplex::facets() const {
  std::vector<std::vector<Elem>> out;
  std::vector<char> covered;
  for (std::size_t k = max_cardinality(); k >= 1; --k) {
    std::vector<char> below(face_count(k - 1 >= 1 ? k - 1 : 0), 0);
    std::vector<Elem> sub(k > 0 ? k - 1 : 0);
    for (std::size_t i = 0; i < face_count(k); ++i) {
      auto f = face(k, i);
      if (covered.empty() || !covered[i]) out.emplace_back(f.begin(), f.end());
      if (k == 1) continue;
      for (std::size_t skip = 0; skip < k; ++skip) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < k; ++j)
          if (j != skip) sub[w++] = f[j];
        below[find_face(levels_[k - 1], k - 1, sub)] = 1;
      }
    }
    covered = std::move(below);
  }
  return out;
}

bool is_independent(const FiniteGroup& g, const std::vector<Elem>& x) {
  std::vector<Elem> rest;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) rest.push_back(x[j]);
    if (closure(g, rest).test(x[i])) return false;
  }
  return true;
}

bool is_independent(const SubgroupLattice& l, const std::vector<Elem>& x) {
  std::vector<Elem> rest;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) rest.push_back(x[j]);
    if (l.members(l.generated(rest)).test(x[i])) return false;
  }
  return true;
}

bool is_strongly_independent(const SubgroupLattice& l, const std::vector<Elem>& x) {
  if (x.empty() || !is_independent(l, x)) return false;
  return l.min_up_d(l.generated(x)) >= x.size();
}

bool is_strongly_independent(const FiniteGroup& g, const std::vector<Elem>& x) {
  if (x.empty() || !is_independent(g, x)) return false;
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Subgroup> queue{generated_subgroup(g, x)};
  seen.insert(queue.front().members);
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    if (min_generators(g, h) < x.size()) return false;
    for (Elem y = 0; y < g.order(); ++y) {
      if (h.contains(y)) continue;
      auto gens = h.generators;
      gens.push_back(y);
      Subgroup k = generated_subgroup(g, gens);
      if (seen.insert(k.members).second) queue.push_back(std::move(k));
    }
  }
  return true;
}

class ComplexBuilder {
 public:
  ComplexBuilder(const SubgroupLattice& l, ComplexKind kind, const ComplexOptions& opt) : l_(l), kind_(kind), opt_(opt) {}

  SimplicialComplex run() {
    const auto& g = l_.group();
    SimplicialComplex c(kind_, g.order(), g.hash());

    std::uint32_t cap = 0;  // 0: stop when a level is empty
    if (kind_ == ComplexKind::Strong)
      cap = l_.d(l_.top());
    else if (g.order() > 1 && p_group_prime(g))
      cap = rank(l_);
    if (opt_.max_cardinality) cap = cap ? std::min(cap, opt_.max_cardinality) : opt_.max_cardinality;
    if (g.order() == 1) cap = 0;

    order_.clear();
    for (Elem v = 1; v < g.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Elem a, Elem b) { return g.element_order(a) < g.element_order(b); });

    // Level 1: all non-identity singletons.
    Level cur;
    cur.k = 1;
    for (std::uint32_t i = 0; i < order_.size(); ++i) {
      cur.pos.push_back(i);
      cur.sub.push_back(static_cast<std::uint32_t>(l_.cyclic_of(order_[i])));
    }
    std::size_t total = 0;
    while (!cur.sub.empty()) {
      total += cur.over_budget ? opt_.face_budget + 1 : cur.sub.size();
      if (total > opt_.face_budget)
        throw Error(ErrorCode::FaceBudgetExceeded,
                    "more than " + std::to_string(opt_.face_budget) + " faces in the " +
                        std::string(to_string(kind_)) + " complex");
      store(c, cur);
      if (cap && cur.k >= cap) break;
      cur = extend(cur, opt_.face_budget - total);
    }
    c.rank_bound_ = cap ? cap : static_cast<std::uint32_t>(c.max_cardinality());
    return c;
  }

 private:
  struct Level {
    std::size_t k = 0;
    std::vector<std::uint32_t> pos;  // stride k, positions in order_
    std::vector<std::uint32_t> sub;  // generated subgroup per face
    bool over_budget = false;
  };

  // Stops early once more than `room` faces have been produced.
  Level extend(const Level& cur, std::size_t room) const {
    const std::size_t k = cur.k, count = cur.sub.size();
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(count, thread_count() * 8));
    std::vector<Level> parts(chunks);
    std::atomic<std::size_t> produced{0};
    parallel_chunks(
        0, chunks,
        [&](std::size_t lo, std::size_t hi) {
          for (std::size_t c = lo; c < hi; ++c) {
            Level& out = parts[c];
            const std::size_t begin = count * c / chunks, end = count * (c + 1) / chunks;
            std::vector<std::uint32_t> cyc(k + 1);
            for (std::size_t f = begin; f < end && produced.load(std::memory_order_relaxed) <= room; ++f) {
              const auto before = out.sub.size();
              extend_face(cur, f, cyc, out);
              produced.fetch_add(out.sub.size() - before, std::memory_order_relaxed);
            }
          }
        },
        1);
    Level next;
    next.k = k + 1;
    if (produced.load() > room) {
      next.over_budget = true;
      next.sub.assign(1, 0);
      return next;
    }
    for (auto& p : parts) {
      next.pos.insert(next.pos.end(), p.pos.begin(), p.pos.end());
      next.sub.insert(next.sub.end(), p.sub.begin(), p.sub.end());
    }
    return next;
  }

  void extend_face(const Level& cur, std::size_t f, std::vector<std::uint32_t>& cyc, Level& out) const {
    const std::size_t k = cur.k;
    const std::uint32_t* face = cur.pos.data() + f * k;
    const auto s = cur.sub[f];
    const Bitset& sm = l_.members(s);
    for (std::size_t j = 0; j < k; ++j) cyc[j] = static_cast<std::uint32_t>(l_.cyclic_of(order_[face[j]]));
    for (std::uint32_t p = face[k - 1] + 1; p < order_.size(); ++p) {
      const Elem v = order_[p];
      if (sm.test(v)) continue;
      cyc[k] = static_cast<std::uint32_t>(l_.cyclic_of(v));
      const auto t = l_.join(s, cyc[k]);
      if (kind_ == ComplexKind::Strong && l_.min_up_d(t) < k + 1) continue;
      bool ok = true;
      for (std::size_t drop = 0; drop < k && ok; ++drop) {
        std::size_t u = cyc[k];
        for (std::size_t j = 0; j < k; ++j)
          if (j != drop) u = l_.join(u, cyc[j]);
        if (l_.members(u).test(order_[face[drop]])) ok = false;
      }
      if (!ok) continue;
      out.pos.insert(out.pos.end(), face, face + k);
      out.pos.push_back(p);
      out.sub.push_back(static_cast<std::uint32_t>(t));
    }
  }

  void store(SimplicialComplex& c, const Level& lv) const {
    const std::size_t k = lv.k, count = lv.sub.size();
    if (count == 0) return;
    std::vector<Elem> flat(count * k);
    for (std::size_t f = 0; f < count; ++f) {
      for (std::size_t j = 0; j < k; ++j) flat[f * k + j] = order_[lv.pos[f * k + j]];
      std::sort(flat.begin() + static_cast<std::ptrdiff_t>(f * k), flat.begin() + static_cast<std::ptrdiff_t>(f * k + k));
    }
    std::vector<std::uint32_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return lex_less({flat.data() + a * k, k}, {flat.data() + b * k, k});
    });
    std::vector<Elem> sorted(count * k);
    for (std::size_t i = 0; i < count; ++i)
      std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(idx[i] * k), k, sorted.begin() + static_cast<std::ptrdiff_t>(i * k));
    c.levels_.resize(k + 1);
    c.levels_[k] = std::move(sorted);
  }

  const SubgroupLattice& l_;
  ComplexKind kind_;
  ComplexOptions opt_;
  std::vector<Elem> order_;
};

SimplicialComplex build_complex(const SubgroupLattice& l, ComplexKind kind, const ComplexOptions& opt) {
  return ComplexBuilder(l, kind, opt).run();
}

SimplicialComplex independence_complex(const SubgroupLattice& l, const ComplexOptions& opt) {
  return build_complex(l, ComplexKind::Independence, opt);
}

SimplicialComplex strong_independence_complex(const SubgroupLattice& l, const ComplexOptions& opt) {
  return build_complex(l, ComplexKind::Strong, opt);
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (std::size_t k = 1; k <= c.max_cardinality(); ++k) f.push_back(c.face_count(k));
  return f;
}

namespace {

// Vertices that share no face and have equal links are interchangeable; the
// complex is the blow-up of its quotient by these classes. Non-face vertices
// form one class of their own.
struct TwinQuotient {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Elem>> classes;
  std::vector<char> class_is_face;
  /// Quotient facets per cardinality, flat, each sorted and distinct.
  std::vector<std::vector<std::uint32_t>> facets;
  std::size_t max_card = 0;
  std::size_t facet_count() const {
    std::size_t c = 0;
    for (std::size_t k = 1; k < facets.size(); ++k) c += facets[k].size() / k;
    return c;
  }
};

// Sorts the k-tuples of a flat array and drops repeats.
void sort_unique_tuples(std::vector<std::uint32_t>& flat, std::size_t k) {
  const std::size_t count = flat.size() / k;
  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  auto at = [&](std::uint32_t i) { return std::span<const std::uint32_t>(flat.data() + std::size_t{i} * k, k); };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto x = at(a), y = at(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<std::uint32_t> out;
  out.reserve(flat.size());
  for (std::size_t i = 0; i < count; ++i) {
    auto t = at(idx[i]);
    if (i && std::equal(t.begin(), t.end(), out.end() - static_cast<std::ptrdiff_t>(k))) continue;
    out.insert(out.end(), t.begin(), t.end());
  }
  flat = std::move(out);
}

TwinQuotient twin_quotient(const SimplicialComplex& c) {
  const auto n = c.vertex_count();
  // Facets per cardinality, flat.
  std::vector<std::vector<Elem>> facets(c.max_cardinality() + 1);
  for (const auto& f : c.facets()) facets[f.size()].insert(facets[f.size()].end(), f.begin(), f.end());

  // incident[v]: (cardinality, facet index) pairs packed into one word.
  std::vector<std::vector<std::uint64_t>> incident(n);
  for (std::size_t k = 1; k < facets.size(); ++k)
    for (std::size_t i = 0; i < facets[k].size() / k; ++i)
      for (std::size_t j = 0; j < k; ++j) incident[facets[k][i * k + j]].push_back((std::uint64_t{k} << 40) | i);

  auto link_hash = [&](Elem v) {
    std::uint64_t h = mix(incident[v].size());
    for (auto code : incident[v]) {
      const std::size_t k = code >> 40, i = code & ((std::uint64_t{1} << 40) - 1);
      std::uint64_t fh = mix(k);
      for (std::size_t j = 0; j < k; ++j)
        if (facets[k][i * k + j] != v) fh = mix(fh ^ facets[k][i * k + j]);
      h += mix(fh);
    }
    return h;
  };
  // The link as a sorted list of (facet minus v), flattened with a length prefix.
  auto link = [&](Elem v) {
    std::vector<std::vector<Elem>> parts;
    for (auto code : incident[v]) {
      const std::size_t k = code >> 40, i = code & ((std::uint64_t{1} << 40) - 1);
      std::vector<Elem> rest;
      for (std::size_t j = 0; j < k; ++j)
        if (facets[k][i * k + j] != v) rest.push_back(facets[k][i * k + j]);
      parts.push_back(std::move(rest));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };

  TwinQuotient q;
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  q.class_of.assign(n, kUnset);
  std::vector<std::uint64_t> hashes(n, 0);
  std::unordered_map<std::uint64_t, std::vector<Elem>> buckets;
  std::vector<Elem> nonface;
  for (Elem v = 0; v < n; ++v) {
    if (!c.is_vertex_face(v)) {
      nonface.push_back(v);
    } else {
      hashes[v] = link_hash(v);
      buckets[hashes[v]].push_back(v);
    }
  }
  if (!nonface.empty()) {
    for (Elem v : nonface) q.class_of[v] = 0;
    q.classes.push_back(nonface);
    q.class_is_face.push_back(0);
  }
  for (Elem v = 0; v < n; ++v) {
    if (q.class_of[v] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(q.classes.size());
    q.classes.push_back({v});
    q.class_is_face.push_back(1);
    q.class_of[v] = id;
    const auto& bucket = buckets[hashes[v]];
    if (bucket.size() < 2) continue;
    const auto lv = link(v);
    for (Elem w : bucket) {
      if (q.class_of[w] != kUnset) continue;
      const Elem pair[2] = {std::min(v, w), std::max(v, w)};
      if (c.contains(pair) || link(w) != lv) continue;
      q.class_of[w] = id;
      q.classes[id].push_back(w);
    }
  }
  q.facets.resize(facets.size());
  for (std::size_t k = 1; k < facets.size(); ++k) {
    auto& out = q.facets[k];
    out.reserve(facets[k].size());
    for (std::size_t i = 0; i < facets[k].size() / k; ++i) {
      const auto base = out.size();
      for (std::size_t j = 0; j < k; ++j) out.push_back(q.class_of[facets[k][i * k + j]]);
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(base), out.end());
    }
    sort_unique_tuples(out, k);
    if (!out.empty()) q.max_card = k;
  }
  return q;
}

std::vector<std::uint64_t> class_colors(const TwinQuotient& q) {
  std::vector<std::uint64_t> col(q.classes.size());
  for (std::size_t i = 0; i < col.size(); ++i) col[i] = q.classes[i].size() * 2 + static_cast<std::uint64_t>(q.class_is_face[i]);
  return col;
}

std::vector<std::uint32_t> lift(const TwinQuotient& qa, const TwinQuotient& qb, const std::vector<std::uint32_t>& cmap,
                                std::size_t n) {
  std::vector<std::uint32_t> map(n);
  for (std::size_t c = 0; c < qa.classes.size(); ++c) {
    const auto& from = qa.classes[c];
    const auto& to = qb.classes[cmap[c]];
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
  }
  return map;
}

}  // namespace

bool is_complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                            const std::vector<std::uint32_t>& map) {
  const auto n = a.vertex_count();
  if (b.vertex_count() != n || map.size() != n || f_vector(a) != f_vector(b)) return false;
  std::vector<char> hit(n, 0);
  for (auto w : map) {
    if (w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  // Equal face counts per cardinality make an injective face map a bijection.
  std::vector<Elem> img;
  for (std::size_t k = 1; k <= a.max_cardinality(); ++k)
    for (std::size_t i = 0; i < a.face_count(k); ++i) {
      auto f = a.face(k, i);
      img.assign(f.begin(), f.end());
      for (auto& v : img) v = map[v];
      std::sort(img.begin(), img.end());
      if (!b.contains(img)) return false;
    }
  return true;
}

SearchOutcome<std::vector<std::uint32_t>> complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                              std::uint64_t budget) {
  SearchOutcome<std::vector<std::uint32_t>> out;
  if (a.vertex_count() != b.vertex_count() || f_vector(a) != f_vector(b)) return out;
  const auto qa = twin_quotient(a), qb = twin_quotient(b);
  if (qa.classes.size() != qb.classes.size() || qa.facet_count() != qb.facet_count()) return out;
  const auto ca = class_colors(qa), cb = class_colors(qb);

  SearchOutcome<std::vector<std::uint32_t>> cls;
  if (std::max(qa.max_card, qb.max_card) <= 2) {
    // Quotient 1-skeletons; isolated face vertices are told apart by color.
    Graph ga(qa.classes.size()), gb(qb.classes.size());
    auto fill = [](const TwinQuotient& q, Graph& g) {
      if (q.facets.size() <= 2) return;
      for (std::size_t i = 0; i + 1 < q.facets[2].size(); i += 2) g.add_edge(q.facets[2][i], q.facets[2][i + 1]);
    };
    fill(qa, ga);
    fill(qb, gb);
    cls = graph_isomorphism(ga, gb, ca, cb, budget);
  } else {
    // Class nodes plus one node per quotient facet, colored by cardinality.
    auto incidence = [](const TwinQuotient& q, const std::vector<std::uint64_t>& col) {
      const auto m = q.classes.size();
      auto g = ColoredDigraph::with_vertices(m + q.facet_count());
      for (std::size_t i = 0; i < m; ++i) g.color[i] = col[i] << 1;
      std::size_t node = m;
      for (std::size_t k = 1; k < q.facets.size(); ++k)
        for (std::size_t i = 0; i < q.facets[k].size(); i += k, ++node) {
          g.color[node] = (std::uint64_t{k} << 1) | 1;
          g.out[node].assign(q.facets[k].begin() + static_cast<std::ptrdiff_t>(i),
                             q.facets[k].begin() + static_cast<std::ptrdiff_t>(i + k));
        }
      return g;
    };
    auto r = colored_digraph_isomorphism(incidence(qa, ca), incidence(qb, cb), budget);
    cls.status = r.status;
    cls.nodes = r.nodes;
    if (r.found()) cls.value = std::vector<std::uint32_t>(r.value->begin(), r.value->begin() + static_cast<std::ptrdiff_t>(qa.classes.size()));
  }
  out.status = cls.status;
  out.nodes = cls.nodes;
  if (!cls.found()) return out;
  auto map = lift(qa, qb, *cls.value, a.vertex_count());
  if (!is_complex_isomorphism(a, b, map))
    throw Error(ErrorCode::InvalidInput, "internal: lifted complex map failed validation");
  out.value = std::move(map);
  return out;
}

GroupComplexIso group_complex_isomorphism(const SubgroupLattice& a, const SubgroupLattice& b, ComplexKind kind,
                                          const ComplexOptions& opt, std::uint64_t budget) {
  GroupComplexIso r;
  if (a.group().order() != b.group().order()) {
    r.refuted_by = "group orders differ";
    return r;
  }
  if (order_statistics(a.group()) != order_statistics(b.group())) {
    r.refuted_by = "element order census differs";
    return r;
  }
  const auto ca = build_complex(a, kind, opt), cb = build_complex(b, kind, opt);
  if (ca.max_cardinality() != cb.max_cardinality()) {
    r.refuted_by = "largest faces differ in size";
    return r;
  }
  if (f_vector(ca) != f_vector(cb)) {
    r.refuted_by = "f-vectors differ";
    return r;
  }
  r.outcome = complex_isomorphism(ca, cb, budget);
  return r;
}

std::vector<Rational> ell_sequence(const SubgroupLattice& l, std::uint32_t p) {
  const auto& g = l.group();
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (g.order() > 1 && p_group_prime(g) != p)
    throw Error(ErrorCode::NotAPGroup, "group of order " + std::to_string(g.order()) + " is not a " + std::to_string(p) + "-group");
  const auto r_max = rank(l);
  std::vector<Rational> ell(r_max, Rational(0));
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto r = l.d(i);
    if (r == 0) continue;
    using boost::multiprecision::cpp_int;
    ell[r - 1] += Rational(boost::multiprecision::pow(cpp_int(l.order(i)), r), boost::multiprecision::pow(cpp_int(p), r * r));
  }
  return ell;
}

std::pair<std::uint64_t, std::uint64_t> exponent_p_counts(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(ErrorCode::InvalidInput, "the count is stated for primes p >= 5");
  const std::uint64_t n = p * p * p * p * p - 1;
  const std::uint64_t f2 = n * (n - 1) / 2 - (n / (p - 1)) * ((p - 1) * (p - 2) / 2);
  return {n, f2};
}

std::string export_faces(const SimplicialComplex& c) {
  std::ostringstream os;
  os << "# group " << std::hex << c.group_hash() << std::dec << "\n";
  os << "# kind " << to_string(c.kind()) << "\n";
  os << "# f_vector (by cardinality)";
  for (auto f : f_vector(c)) os << ' ' << f;
  os << "\n";
  for (std::size_t k = 1; k <= c.max_cardinality(); ++k)
    for (std::size_t i = 0; i < c.face_count(k); ++i) {
      auto f = c.face(k, i);
      for (std::size_t j = 0; j < k; ++j) os << (j ? " " : "") << f[j];
      os << "\n";
    }
  return os.str();
}

std::string export_json(const SimplicialComplex& c, const std::string& group_name) {
  nlohmann::json j;
  j["group"] = group_name;
  j["kind"] = std::string(to_string(c.kind()));
  j["f_vector"] = f_vector(c);
  j["rank_bound"] = c.rank_bound();
  return j.dump();
}

}  // namespace grpx
