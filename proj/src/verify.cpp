#include "grpx/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grpx/dsl.hpp"
#include "grpx/error.hpp"
#include "grpx/graphs.hpp"

namespace grpx {

namespace {

std::string list(const std::vector<Elem>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::string sub(const SubgroupLattice& l, std::size_t i) {
  std::ostringstream os;
  os << '#' << i << " (order " << l.order(i) << ')';
  return os.str();
}

// Some subgroup K >= H with d(K) = min_up_d(H).
std::size_t smallest_d_above(const SubgroupLattice& l, std::size_t h) {
  std::size_t best = l.top();
  l.up(h).for_each([&](std::size_t k) {
    if (l.d(k) == l.min_up_d(h) && l.d(best) != l.min_up_d(h)) best = k;
  });
  return best;
}

// One element generating each cyclic subgroup, by lattice index.
std::vector<Elem> cyclic_generators(const SubgroupLattice& l) {
  std::vector<Elem> gen(l.size(), 0);
  const auto& g = l.group();
  for (Elem x = 0; x < g.order(); ++x) {
    const auto c = l.cyclic_of(x);
    if (gen[c] == 0) gen[c] = x;
  }
  return gen;
}

class GeneratingSetSearch {
 public:
  GeneratingSetSearch(const SubgroupLattice& l, std::size_t target, std::uint32_t size, std::uint64_t budget)
      : l_(l), target_(target), size_(size), budget_(budget) {
    l.down(target).for_each([&](std::size_t c) {
      if (c != 0 && l.is_cyclic(c)) cyc_.push_back(static_cast<std::uint32_t>(c));
    });
  }

  std::optional<std::vector<std::uint32_t>> run() {
    std::vector<std::uint32_t> fam;
    if (dfs(fam, 0, 0)) return fam;
    return std::nullopt;
  }

 private:
  bool independent_with(const std::vector<std::uint32_t>& fam, std::uint32_t c) const {
    if (l_.leq(c, l_.join_of(fam))) return false;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::size_t j = c;
      for (std::size_t k = 0; k < fam.size(); ++k)
        if (k != i) j = l_.join(j, fam[k]);
      if (l_.leq(fam[i], j)) return false;
    }
    return true;
  }

  bool dfs(std::vector<std::uint32_t>& fam, std::size_t start, std::size_t joined) {
    if (!budget_.charge()) throw Error(ErrorCode::SearchBudgetExceeded, "generating set search exceeded its budget");
    if (fam.size() == size_) return joined == target_;
    if (joined == target_) return false;
    for (std::size_t a = start; a < cyc_.size(); ++a) {
      const auto c = cyc_[a];
      if (!independent_with(fam, c)) continue;
      fam.push_back(c);
      if (dfs(fam, a + 1, l_.join(joined, c))) return true;
      fam.pop_back();
    }
    return false;
  }

  const SubgroupLattice& l_;
  std::size_t target_;
  std::uint32_t size_;
  Budget budget_;
  std::vector<std::uint32_t> cyc_;
};

Bitset omega_one_of(const SubgroupLattice& l, std::size_t i, std::uint32_t p) {
  const auto& g = l.group();
  std::vector<Elem> low;
  l.members(i).for_each([&](std::size_t x) {
    if (g.power(static_cast<Elem>(x), p) == g.identity()) low.push_back(static_cast<Elem>(x));
  });
  return closure(g, low);
}

std::size_t pth_power_count(const FiniteGroup& g, std::uint32_t p) {
  Bitset seen(g.order());
  for (Elem x = 0; x < g.order(); ++x) seen.set(g.power(x, p));
  return seen.count();
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.max_cardinality() != b.max_cardinality()) return false;
  for (std::size_t k = 1; k <= a.max_cardinality(); ++k) {
    if (a.face_count(k) != b.face_count(k)) return false;
    for (std::size_t i = 0; i < a.face_count(k); ++i)
      if (!b.contains(a.face(k, i))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> max_minimal_generating_all(const SubgroupLattice& l, std::uint64_t budget) {
  std::vector<std::uint32_t> m(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) m[i] = max_minimal_generating(l, i, budget);
  return m;
}

std::optional<std::vector<Elem>> independent_generating_set(const SubgroupLattice& l, std::size_t i, std::uint32_t size,
                                                            std::uint64_t budget) {
  if (size == 0) {
    if (i == 0) return std::vector<Elem>{};
    return std::nullopt;
  }
  auto fam = GeneratingSetSearch(l, i, size, budget).run();
  if (!fam) return std::nullopt;
  const auto gen = cyclic_generators(l);
  std::vector<Elem> out;
  for (auto c : *fam) out.push_back(gen[c]);
  std::sort(out.begin(), out.end());
  return out;
}

LatticeCheck sigma_equals_tilde_direct(const SubgroupLattice& l, std::uint64_t budget) {
  const auto m = max_minimal_generating_all(l, budget);
  LatticeCheck r;
  for (std::size_t h = 0; h < l.size(); ++h) {
    if (m[h] <= l.min_up_d(h)) continue;
    const std::size_t k = smallest_d_above(l, h);
    r.holds = false;
    r.subgroups = {h, k};
    r.elements = independent_generating_set(l, h, m[h], budget).value_or(std::vector<Elem>{});
    std::ostringstream os;
    os << "H=" << sub(l, h) << " with m(H)=" << m[h] << " inside K=" << sub(l, k) << " with d(K)=" << l.d(k)
       << "; X=" << list(r.elements) << " is independent but not strongly independent";
    r.detail = os.str();
    return r;
  }
  return r;
}

LatticeCheck b_group_check(const SubgroupLattice& l, std::uint64_t budget) {
  LatticeCheck r;
  const auto top = l.top();
  const auto m = max_minimal_generating(l, top, budget);
  if (m != l.d(top)) {
    r.holds = false;
    r.subgroups = {top};
    r.elements = independent_generating_set(l, top, m, budget).value_or(std::vector<Elem>{});
    std::ostringstream os;
    os << "d(G)=" << l.d(top) << " m(G)=" << m << " via " << list(r.elements);
    r.detail = os.str();
  }
  return r;
}

LatticeCheck basis_property_check(const SubgroupLattice& l, std::uint64_t budget) {
  LatticeCheck r;
  for (std::size_t h = 0; h < l.size(); ++h) {
    const auto m = max_minimal_generating(l, h, budget);
    if (m == l.d(h)) continue;
    r.holds = false;
    r.subgroups = {h};
    r.elements = independent_generating_set(l, h, m, budget).value_or(std::vector<Elem>{});
    std::ostringstream os;
    os << "H=" << sub(l, h) << " d(H)=" << l.d(h) << " m(H)=" << m << " via " << list(r.elements);
    r.detail = os.str();
    return r;
  }
  return r;
}

LatticeCheck monotone_check(const SubgroupLattice& l) {
  LatticeCheck r;
  for (std::size_t h = 0; h < l.size(); ++h) {
    if (l.d(h) <= l.min_up_d(h)) continue;
    const auto k = smallest_d_above(l, h);
    r.holds = false;
    r.subgroups = {h, k};
    std::ostringstream os;
    os << "H=" << sub(l, h) << " with d(H)=" << l.d(h) << " inside K=" << sub(l, k) << " with d(K)=" << l.d(k);
    r.detail = os.str();
    return r;
  }
  return r;
}

std::string to_string(NonNilpotentStructure::Branch b) {
  return b == NonNilpotentStructure::Branch::PowerAction ? "power action" : "homocyclic";
}

std::optional<NonNilpotentStructure> non_nilp_classification(const SubgroupLattice& l) {
  const auto& g = l.group();
  if (is_nilpotent(g)) return std::nullopt;
  const auto primes = prime_factors(g.order());
  if (primes.size() != 2) return std::nullopt;
  for (int swap = 0; swap < 2; ++swap) {
    const auto p = static_cast<std::uint32_t>(primes[swap]), q = static_cast<std::uint32_t>(primes[1 - swap]);
    std::size_t p_part = 1;
    for (auto n = g.order(); n % p == 0; n /= p) p_part *= p;
    const std::size_t q_part = g.order() / p_part;

    std::optional<std::size_t> P, Q;
    std::size_t p_count = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l.order(i) == p_part) {
        ++p_count;
        P = i;
      }
      if (l.order(i) == q_part && !Q) Q = i;
    }
    if (p_count != 1 || !l.is_abelian(*P) || !l.is_cyclic(*Q)) continue;

    const auto pm = l.members(*P).to_vector();
    const auto qm = l.members(*Q).to_vector();
    bool frobenius = true;
    for (auto y : qm) {
      if (y == g.identity()) continue;
      for (auto x : pm)
        if (x != g.identity() && g.conj(x, y) == x) frobenius = false;
      if (!frobenius) break;
    }
    if (!frobenius) continue;

    NonNilpotentStructure s;
    s.p = p;
    s.q = q;
    s.P = *P;
    s.Q = *Q;
    for (auto y : qm)
      if (g.element_order(y) == q_part) s.alpha = y;

    // Order of x -> x^alpha as an automorphism of P.
    Elem a = s.alpha;
    for (std::uint64_t k = 1;; ++k, a = g.mul(a, s.alpha)) {
      if (std::all_of(pm.begin(), pm.end(), [&](Elem x) { return g.conj(x, a) == x; })) {
        s.alpha_order = k;
        break;
      }
    }

    std::uint32_t exp_p = 1;
    for (auto x : pm) exp_p = std::max(exp_p, g.element_order(x));
    std::optional<std::uint64_t> m;
    for (std::uint64_t c = 1; c < exp_p && !m; ++c) {
      if (c % p == 0) continue;
      if (std::all_of(pm.begin(), pm.end(),
                      [&](Elem x) { return g.conj(x, s.alpha) == g.power(x, static_cast<long long>(c)); }))
        m = c;
    }
    const bool power = m.has_value();
    bool homocyclic = false;
    if (l.d(*P) == 2 && (p - 1) % s.alpha_order != 0)
      homocyclic = is_homocyclic(induced_group(g, l.members(*P)), p);
    if (power == homocyclic) continue;
    s.branch = power ? NonNilpotentStructure::Branch::PowerAction : NonNilpotentStructure::Branch::Homocyclic;
    s.m = m;
    return s;
  }
  return std::nullopt;
}

bool Q3Report::agree() const {
  const bool d = direct.holds;
  if (d != (monotone && basis)) return false;
  if (classification && *classification != d) return false;
  if (complexes_equal && *complexes_equal != d) return false;
  return true;
}

Q3Report q3_characterization_check(const SubgroupLattice& l, std::uint64_t budget, std::size_t complex_order_cap) {
  Q3Report r;
  r.direct = sigma_equals_tilde_direct(l, budget);
  r.monotone = monotone_check(l).holds;
  r.basis = basis_property_check(l, budget).holds;
  if (!is_nilpotent(l.group())) r.classification = non_nilp_classification(l).has_value();
  if (l.group().order() <= complex_order_cap) {
    try {
      r.complexes_equal = same_faces(independence_complex(l), strong_independence_complex(l));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FaceBudgetExceeded) throw;
    }
  }
  return r;
}

bool sylows_modular_nonhamiltonian(const SubgroupLattice& l) {
  const auto& g = l.group();
  if (!is_nilpotent(g)) return false;
  for (auto p : prime_factors(g.order())) {
    const auto s = characteristic_subgroup(l, {SubgroupKind::Sylow, 1, static_cast<std::uint32_t>(p)});
    const auto sl = enumerate_subgroups(induced_group(g, s.members));
    if (!is_modular_lattice(sl) || is_hamiltonian(sl)) return false;
  }
  return true;
}

std::vector<std::string> abelian_group_specs(std::uint64_t n) {
  if (n == 1) return {"C(1)"};
  // Per prime, every partition of the exponent gives a list of cyclic orders.
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
  for (auto p : prime_factors(n)) {
    const unsigned e = valuation(n, p);
    std::vector<std::vector<std::uint64_t>> options;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
      if (left == 0) {
        std::vector<std::uint64_t> orders;
        for (auto k : parts) {
          std::uint64_t q = 1;
          for (unsigned i = 0; i < k; ++i) q *= p;
          orders.push_back(q);
        }
        options.push_back(orders);
        return;
      }
      for (unsigned k = std::min(left, cap); k >= 1; --k) {
        parts.push_back(k);
        rec(left - k, k);
        parts.pop_back();
      }
    };
    rec(e, e);
    per_prime.push_back(options);
  }
  std::vector<std::string> out;
  std::vector<std::uint64_t> pick;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == per_prime.size()) {
      std::ostringstream os;
      for (std::size_t k = 0; k < pick.size(); ++k) os << (k ? " x " : "") << "C(" << pick[k] << ")";
      out.push_back(os.str());
      return;
    }
    for (const auto& option : per_prime[i]) {
      pick.insert(pick.end(), option.begin(), option.end());
      combine(i + 1);
      pick.resize(pick.size() - option.size());
    }
  };
  combine(0);
  return out;
}

std::optional<AbelianPartner> abelian_partner(const SubgroupLattice& l, std::uint64_t budget) {
  const auto& g = l.group();
  if (!sylows_modular_nonhamiltonian(l)) return std::nullopt;

  AbelianPartner r;
  if (g.is_abelian()) {
    // The group itself, with identity certificates.
    const auto census = order_statistics(g);
    for (const auto& spec : abelian_group_specs(g.order()))
      if (order_statistics(build_group(spec)) == census) r.spec = spec;
    r.lattice = std::make_shared<SubgroupLattice>(l);
    r.lattice_map.resize(l.size());
    std::iota(r.lattice_map.begin(), r.lattice_map.end(), 0u);
    std::vector<std::uint32_t> id(g.order());
    std::iota(id.begin(), id.end(), 0u);
    r.sigma.status = r.strong.status = SearchStatus::Found;
    r.sigma.value = r.strong.value = id;
    return r;
  }

  std::vector<std::pair<std::string, std::shared_ptr<const SubgroupLattice>>> candidates;
  for (const auto& spec : abelian_group_specs(g.order()))
    candidates.emplace_back(spec, std::make_shared<SubgroupLattice>(enumerate_subgroups(build_group(spec))));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.second->size() < b.second->size(); });
  for (const auto& [spec, cl] : candidates) {
    if (cl->size() != l.size()) continue;
    auto iso = lattice_isomorphism(l, *cl, true, budget);
    if (iso.budget_exceeded()) throw Error(ErrorCode::SearchBudgetExceeded, "lattice search for " + spec);
    if (!iso.found()) continue;
    r.spec = spec;
    r.lattice = cl;
    r.lattice_map = *iso.value;
    r.sigma = group_complex_isomorphism(l, *cl, ComplexKind::Independence, {}, budget).outcome;
    r.strong = group_complex_isomorphism(l, *cl, ComplexKind::Strong, {}, budget).outcome;
    return r;
  }
  return std::nullopt;
}

bool GraphsConsistency::decided() const {
  return !power.budget_exceeded() && !enhanced.budget_exceeded() && !directed.budget_exceeded();
}

bool GraphsConsistency::agree() const {
  return power.found() == enhanced.found() && enhanced.found() == directed.found() && orders_preserved.value_or(true);
}

GraphsConsistency eq_graphs_consistency(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t budget) {
  GraphsConsistency r;
  // No order colors here: the searches must not presuppose the answer.
  r.power = graph_isomorphism(power_graph(a), power_graph(b), {}, {}, budget);
  r.enhanced = graph_isomorphism(enhanced_power_graph(a), enhanced_power_graph(b), {}, {}, budget);
  r.directed = graph_isomorphism(directed_power_graph(a), directed_power_graph(b), {}, {}, budget);
  if (r.directed.found()) {
    const auto& map = *r.directed.value;
    bool same = true;
    for (Elem x = 0; x < a.order(); ++x) same = same && a.element_order(x) == b.element_order(map[x]);
    r.orders_preserved = same;
  }
  return r;
}

bool LemmaSuite::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const LemmaResult& r) { return r.holds; });
}

LemmaSuite conditional_lemma_suite(const SubgroupLattice& g1, const SubgroupLattice& g2,
                                   const std::vector<std::uint32_t>& witness, ComplexKind kind) {
  const auto& a = g1.group();
  const auto& b = g2.group();
  const auto p1 = p_group_prime(a), p2 = p_group_prime(b);
  if (!p1 || p1 != p2) throw Error(ErrorCode::NotAPGroup, "both groups must be p-groups for the same p");
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "the first group must be abelian");
  if (witness.size() != a.order() || !is_complex_isomorphism(build_complex(g1, kind), build_complex(g2, kind), witness))
    throw Error(ErrorCode::InvalidInput, "witness is not an isomorphism of complexes");
  const std::uint32_t p = *p1;
  LemmaSuite suite;
  auto add = [&](std::string name, bool holds, std::string detail) {
    suite.results.push_back({std::move(name), holds, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail = "every 2-generated H has |Omega_1(H)| <= p^2";
    for (std::size_t h = 0; h < g2.size() && ok; ++h)
      if (g2.d(h) == 2 && omega_one_of(g2, h, p).count() > std::size_t{p} * p) {
        ok = false;
        detail = "H=" + sub(g2, h) + " has |Omega_1(H)|=" + std::to_string(omega_one_of(g2, h, p).count());
      }
    add("omega1-bound", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "d(H) <= d(Omega_1(H)) for every H";
    for (std::size_t h = 0; h < g2.size() && ok; ++h) {
      const auto o = g2.find(omega_one_of(g2, h, p));
      if (g2.d(h) > g2.d(*o)) {
        ok = false;
        detail = "H=" + sub(g2, h) + " d(H)=" + std::to_string(g2.d(h)) + " > d(Omega_1(H))=" + std::to_string(g2.d(*o));
      }
    }
    if (!ok && kind == ComplexKind::Strong) {
      // Only claimed for the independence complex.
      ok = true;
      detail = "not claimed for the strong complex; " + detail;
    }
    add("laffey", ok, detail);
  }
  {
    std::optional<std::size_t> q8;
    for (std::size_t h = 0; h < g2.size() && !q8; ++h) {
      if (g2.order(h) != 8 || g2.is_abelian(h)) continue;
      std::size_t involutions = 0;
      g2.members(h).for_each([&](std::size_t x) { involutions += b.element_order(static_cast<Elem>(x)) == 2; });
      if (involutions == 1) q8 = h;
    }
    add("no-q8", !q8, q8 ? "H=" + sub(g2, *q8) + " is quaternion" : "no quaternion subgroup");
  }
  {
    const bool powerful = is_powerful(b, p);
    if (p == 2)
      add("powerful", true, std::string("p = 2, not claimed; powerful: ") + (powerful ? "yes" : "no"));
    else
      add("powerful", powerful, powerful ? "G2 is powerful" : "G2 is not powerful");
  }
  {
    const auto na = pth_power_count(a, p), nb = pth_power_count(b, p);
    add("pth-powers", na == nb, std::to_string(na) + " vs " + std::to_string(nb) + " p-th powers");
  }
  {
    bool ok = true;
    std::string detail = "|phi(y)| = |y| for every y";
    if (g1.is_cyclic(g1.top())) {
      detail = "G1 cyclic, not claimed";
    } else {
      for (Elem y = 0; y < a.order() && ok; ++y)
        if (a.element_order(y) != b.element_order(witness[y])) {
          ok = false;
          detail = "y=" + std::to_string(y) + " of order " + std::to_string(a.element_order(y)) + " maps to order " +
                   std::to_string(b.element_order(witness[y]));
        }
    }
    add("order-preserving", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "every 2-generated subgroup is metacyclic";
    for (std::size_t h = 0; h < g2.size() && ok; ++h)
      if (g2.d(h) == 2 && !is_metacyclic(g2, h)) {
        ok = false;
        detail = "H=" + sub(g2, h) + " is not metacyclic";
      }
    add("two-generated-metacyclic", ok, detail);
  }
  {
    const bool modular = is_modular_lattice(g2), ham = is_hamiltonian(g2);
    add("modular-nonhamiltonian", modular && !ham,
        std::string("modular: ") + (modular ? "yes" : "no") + ", hamiltonian: " + (ham ? "yes" : "no"));
  }
  return suite;
}

StrongToP strong_to_p_check(const SubgroupLattice& l, std::size_t cap) {
  const auto& g = l.group();
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "strong_to_p_check needs an abelian group");
  StrongToP r;
  const auto strong = strong_independence_complex(l);
  const auto primes = prime_factors(g.order());

  auto p_part = [&](Elem x, std::uint64_t p) {
    std::uint64_t m = g.element_order(x);
    while (m % p == 0) m /= p;
    return g.power(x, static_cast<long long>(m));
  };

  std::vector<Elem> pick;
  std::function<void(Elem)> rec = [&](Elem start) {
    if (!pick.empty()) {
      ++r.sets_checked;
      const bool lhs = strong.contains(pick);
      bool rhs = false;
      for (auto p : primes) {
        std::vector<Elem> xp;
        for (auto x : pick) xp.push_back(p_part(x, p));
        std::sort(xp.begin(), xp.end());
        xp.erase(std::unique(xp.begin(), xp.end()), xp.end());
        if (xp.size() == pick.size() && strong.contains(xp)) rhs = true;
      }
      if (lhs != rhs && r.lemma_holds) {
        r.lemma_holds = false;
        r.counterexample = pick;
      }
    }
    if (pick.size() == cap) return;
    for (Elem x = start; x < g.order(); ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(1);

  // Membership in maximal cyclic subgroups versus twins in the strong complex.
  const auto maximal = maximal_cyclic_subgroups(g);
  std::vector<std::vector<char>> in(g.order(), std::vector<char>(maximal.size()));
  for (std::size_t c = 0; c < maximal.size(); ++c) maximal[c].for_each([&](std::size_t x) { in[x][c] = 1; });

  // Twins: never together in a face, and swapping one for the other keeps faces.
  auto twins = [&](Elem x, Elem y) {
    if (strong.contains(std::vector<Elem>{x, y})) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 1; k <= strong.max_cardinality(); ++k)
        for (std::size_t i = 0; i < strong.face_count(k); ++i) {
          auto f = strong.face(k, i);
          if (std::find(f.begin(), f.end(), x) == f.end() || std::find(f.begin(), f.end(), y) != f.end()) continue;
          std::vector<Elem> moved(f.begin(), f.end());
          std::replace(moved.begin(), moved.end(), x, y);
          std::sort(moved.begin(), moved.end());
          if (!strong.contains(moved)) return false;
        }
      std::swap(x, y);
    }
    return true;
  };
  for (Elem x = 1; x < g.order() && r.classes_agree; ++x)
    for (Elem y = x + 1; y < g.order(); ++y)
      if ((in[x] == in[y]) != twins(x, y)) {
        r.classes_agree = false;
        if (r.counterexample.empty()) r.counterexample = {x, y};
        break;
      }
  return r;
}

}  // namespace grpx
