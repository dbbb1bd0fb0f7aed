#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpx/bitset.hpp"
#include "grpx/group.hpp"
#include "grpx/search.hpp"

namespace grpx {

struct Subgroup {
  Bitset members;
  /// A generating set, not necessarily minimal.
  std::vector<Elem> generators;

  std::size_t order() const { return members.count(); }
  bool contains(Elem x) const { return members.test(x); }
};

/// Closure of X together with the identity.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& x);
Bitset closure(const FiniteGroup& g, const std::vector<Elem>& x);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// The subgroup as a group in its own right; embedding[i] is the element of g
/// that plays the role of i.
FiniteGroup induced_group(const FiniteGroup& g, const Bitset& members, std::vector<Elem>* embedding = nullptr);
/// G/N from the coset table; projection[x] is the coset of x.
FiniteGroup quotient_group(const FiniteGroup& g, const Bitset& normal, std::vector<Elem>* projection = nullptr);

/// All subgroups of one group, sorted by (order, member list). Index 0 is the
/// trivial subgroup and the last index is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  /// Builds the lattice from a complete subgroup list. When `up` is given it is
  /// trusted as the containment relation, and `generators` likewise (used by
  /// the cache).
  SubgroupLattice(FiniteGroup g, std::vector<Bitset> members, std::vector<Bitset> up = {},
                  std::vector<std::vector<Elem>> generators = {});

  const FiniteGroup& group() const { return g_; }
  std::size_t size() const { return subs_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return subs_.size() - 1; }

  const Subgroup& subgroup(std::size_t i) const { return subs_[i]; }
  const Bitset& members(std::size_t i) const { return subs_[i].members; }
  std::size_t order(std::size_t i) const { return orders_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  /// Indices of subgroups containing i (including i).
  const Bitset& up(std::size_t i) const { return up_[i]; }
  /// Indices of subgroups contained in i (including i).
  const Bitset& down(std::size_t i) const { return down_[i]; }
  const std::vector<std::uint32_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }
  const std::vector<std::uint32_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }

  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  /// Smallest subgroup containing every subgroup in the set.
  std::size_t join_of(const std::vector<std::uint32_t>& ids) const;

  std::optional<std::size_t> find(const Bitset& members) const;
  /// Index of <x>.
  std::size_t cyclic_of(Elem x) const { return cyclic_of_[x]; }
  /// Index of <X>.
  std::size_t generated(const std::vector<Elem>& x) const;

  bool is_cyclic(std::size_t i) const { return cyclic_[i]; }
  bool is_normal(std::size_t i) const { return normal_[i]; }
  bool is_abelian(std::size_t i) const { return abelian_[i]; }
  /// Minimum number of generators.
  std::uint32_t d(std::size_t i) const { return d_[i]; }
  /// Minimum of d over all subgroups containing i.
  std::uint32_t min_up_d(std::size_t i) const { return min_up_d_[i]; }
  /// Intersection of the maximal subgroups of subgroup i.
  std::size_t frattini(std::size_t i) const { return frattini_[i]; }

  friend bool operator==(const SubgroupLattice& a, const SubgroupLattice& b);

 private:
  void build_containment();
  void build_derived();
  std::uint32_t search_d(std::size_t i) const;

  FiniteGroup g_;
  std::vector<Subgroup> subs_;
  std::vector<std::size_t> orders_;
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<std::uint32_t>> lower_covers_, upper_covers_;
  std::vector<std::uint32_t> cyclic_of_;
  std::vector<char> cyclic_, normal_, abelian_;
  std::vector<std::uint32_t> d_, min_up_d_;
  std::vector<std::size_t> frattini_;
};

/// Cyclic extension for solvable groups, join closure of cyclic subgroups
/// otherwise.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultOrderCap);

std::uint32_t min_generators(const FiniteGroup& g, const Subgroup& h);
std::uint32_t min_generators(const SubgroupLattice& l, std::size_t i);
/// Largest independent generating set of subgroup i.
std::uint32_t max_minimal_generating(const SubgroupLattice& l, std::size_t i,
                                     std::uint64_t budget = default_budget());
std::uint32_t max_minimal_generating(const FiniteGroup& g, const Subgroup& h,
                                     std::uint64_t budget = default_budget());

enum class SubgroupKind { Frattini, Center, Derived, Gamma, Omega, Mho, Sylow };

struct CharacteristicSpec {
  SubgroupKind kind;
  /// gamma index i, or n for omega / mho.
  std::uint32_t level = 1;
  std::uint32_t prime = 0;
};

Subgroup characteristic_subgroup(const SubgroupLattice& l, CharacteristicSpec spec);
Bitset center(const FiniteGroup& g);
Bitset derived_subgroup(const FiniteGroup& g);
/// gamma_1 = G, gamma_{i+1} = [gamma_i, G].
Bitset lower_central_term(const FiniteGroup& g, std::uint32_t i);
/// <x : x^(p^n) = 1> and <x^(p^n)>.
Bitset omega(const FiniteGroup& g, std::uint32_t p, std::uint32_t n);
Bitset mho(const FiniteGroup& g, std::uint32_t p, std::uint32_t n);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
/// If |G| is a power of a prime p, returns p.
std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g);

/// (H1 v H2) ^ H3 = H1 v (H2 ^ H3) for all H1 <= H3.
bool is_modular_lattice(const SubgroupLattice& l);
/// Every subgroup normal.
bool is_dedekind(const SubgroupLattice& l);
bool is_hamiltonian(const SubgroupLattice& l);
bool is_metacyclic(const SubgroupLattice& l, std::size_t i);
bool is_metacyclic(const SubgroupLattice& l);
bool is_powerful(const FiniteGroup& g, std::uint32_t p);
bool is_homocyclic(const FiniteGroup& g, std::uint32_t p);

struct IwasawaWitness {
  std::size_t a;  // lattice index of the abelian normal subgroup
  Elem b;
  std::uint32_t s;
};
std::optional<IwasawaWitness> iwasawa_decomposition(const SubgroupLattice& l, std::uint32_t p);

/// An order-preserving bijection of subgroup indices. With index_preserving,
/// |alpha(H)| = |H| as well.
SearchOutcome<std::vector<std::uint32_t>> lattice_isomorphism(const SubgroupLattice& a, const SubgroupLattice& b,
                                                              bool index_preserving,
                                                              std::uint64_t budget = default_budget());

/// Number of non-Frattini factors in one chief series.
std::uint32_t chief_non_frattini_count(const SubgroupLattice& l);
/// Maximum of d over all subgroups.
std::uint32_t rank(const SubgroupLattice& l);

struct StructureReport {
  std::size_t order = 0;
  bool is_abelian = false, is_nilpotent = false, is_cyclic = false, is_dedekind = false, is_hamiltonian = false,
       is_modular_lattice = false, is_metacyclic = false, is_solvable = false;
  std::optional<bool> is_powerful, is_homocyclic;
  std::uint32_t d = 0, m = 0, rank = 0, exponent = 1;
  std::size_t subgroup_count = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> sylow;  // (p, lattice index)
  std::size_t frattini = 0, center = 0, derived = 0;
  std::vector<std::size_t> lower_central;
};

StructureReport structure_report(const SubgroupLattice& l);
std::string to_text(const StructureReport& r);

}  // namespace grpx
