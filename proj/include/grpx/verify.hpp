#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpx/complexes.hpp"
#include "grpx/corpus.hpp"
#include "grpx/lattice.hpp"
#include "grpx/search.hpp"

namespace grpx {

/// m(H) for every subgroup H, indexed like the lattice.
std::vector<std::uint32_t> max_minimal_generating_all(const SubgroupLattice& l, std::uint64_t budget = default_budget());

/// Independent generating set of subgroup i with exactly `size` elements, if any.
std::optional<std::vector<Elem>> independent_generating_set(const SubgroupLattice& l, std::size_t i, std::uint32_t size,
                                                            std::uint64_t budget = default_budget());

/// Outcome of a quantifier over the lattice. On failure `subgroups` names the
/// offending subgroups and `elements` may carry a concrete subset.
struct LatticeCheck {
  bool holds = true;
  std::vector<std::size_t> subgroups;
  std::vector<Elem> elements;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// m(H) <= d(K) for all H <= K. A failure comes with H, K and an independent
/// generating set of H of size m(H) that is not strongly independent.
LatticeCheck sigma_equals_tilde_direct(const SubgroupLattice& l, std::uint64_t budget = default_budget());
/// d(G) = m(G).
LatticeCheck b_group_check(const SubgroupLattice& l, std::uint64_t budget = default_budget());
/// Every subgroup is a B-group.
LatticeCheck basis_property_check(const SubgroupLattice& l, std::uint64_t budget = default_budget());
/// H <= K implies d(H) <= d(K).
LatticeCheck monotone_check(const SubgroupLattice& l);

struct NonNilpotentStructure {
  enum class Branch { PowerAction, Homocyclic };
  std::uint32_t p = 0, q = 0;
  std::size_t P = 0, Q = 0;  // lattice indices
  Elem alpha = 0;            // generator of Q
  Branch branch = Branch::PowerAction;
  /// x^alpha = x^m on P for the power branch.
  std::optional<std::uint64_t> m;
  /// Order of the automorphism induced by alpha.
  std::uint64_t alpha_order = 0;
};
std::string to_string(NonNilpotentStructure::Branch b);

/// G = PQ Frobenius with P abelian normal Sylow p, Q cyclic Sylow q, and
/// exactly one of: alpha acts as a power map, or P is homocyclic with d(P) = 2
/// and |alpha| does not divide p - 1. Nilpotent groups yield nullopt.
std::optional<NonNilpotentStructure> non_nilp_classification(const SubgroupLattice& l);

struct Q3Report {
  LatticeCheck direct;
  bool monotone = false, basis = false;
  /// Only for non-nilpotent groups.
  std::optional<bool> classification;
  /// Face-set equality of the two complexes, when they fit the face budget.
  std::optional<bool> complexes_equal;

  bool agree() const;
};
Q3Report q3_characterization_check(const SubgroupLattice& l, std::uint64_t budget = default_budget(),
                                   std::size_t complex_order_cap = 1000);

struct AbelianPartner {
  std::string spec;  // construction text, e.g. "C(9) x C(3)"
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<std::uint32_t> lattice_map;
  /// Vertex maps G -> partner; empty when the search gave up.
  SearchOutcome<std::vector<std::uint32_t>> sigma, strong;
};

/// Every Sylow subgroup is modular and not hamiltonian (G nilpotent).
bool sylows_modular_nonhamiltonian(const SubgroupLattice& l);
/// Abelian groups with an index-preserving lattice isomorphism to G, tried in
/// order of lattice size, plus complex certificates. nullopt when G is not
/// nilpotent with modular nonhamiltonian Sylows, or no candidate matched.
std::optional<AbelianPartner> abelian_partner(const SubgroupLattice& l, std::uint64_t budget = default_budget());
/// Every abelian group of order n as a product of cyclic groups.
std::vector<std::string> abelian_group_specs(std::uint64_t n);

struct GraphsConsistency {
  SearchOutcome<std::vector<std::uint32_t>> power, enhanced, directed;
  /// The directed certificate keeps element orders.
  std::optional<bool> orders_preserved;

  bool decided() const;
  bool agree() const;
};
GraphsConsistency eq_graphs_consistency(const FiniteGroup& a, const FiniteGroup& b,
                                        std::uint64_t budget = default_budget());

struct LemmaResult {
  std::string name;
  bool holds = true;
  std::string detail;
};
struct LemmaSuite {
  std::vector<LemmaResult> results;
  bool all_pass() const;
};
/// Consequences for a p-group G2 whose complex of the given kind is isomorphic
/// to that of an abelian p-group G1 via `witness` (a vertex map G1 -> G2).
/// Throws InvalidInput when the premises fail.
LemmaSuite conditional_lemma_suite(const SubgroupLattice& g1, const SubgroupLattice& g2,
                                   const std::vector<std::uint32_t>& witness, ComplexKind kind = ComplexKind::Independence);

struct StrongToP {
  bool lemma_holds = true;
  /// Partition into same-maximal-cyclic-subgroups classes equals the partition
  /// into strong-complex twins (no common face, interchangeable in every other
  /// face), on the non-identity elements.
  bool classes_agree = true;
  std::size_t sets_checked = 0;
  std::vector<Elem> counterexample;

  bool ok() const { return lemma_holds && classes_agree; }
};
/// For abelian G: X strongly independent iff X_p is, with |X_p| = |X|, for
/// some prime p. Every subset up to `cap` elements is tried.
StrongToP strong_to_p_check(const SubgroupLattice& l, std::size_t cap = 3);

// Corpus runner.

enum class CheckStatus { Pass, Fail, SkippedBudget };
std::string_view to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct ReportEntry {
  std::string check;
  std::string anchor;
  std::vector<std::string> groups;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  double millis = 0;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  std::string to_table() const;
  /// [{"check", "anchor", "groups", "status", "witness", "millis"}, ...]
  std::string to_json() const;
};

using LatticeSource = std::function<std::shared_ptr<const SubgroupLattice>(const CorpusEntry&)>;

struct CorpusCheck {
  std::string name;
  std::string anchor;
  std::string suite;
  /// One-group checks run on every selected entry accepted by `applies`.
  std::function<bool(const CorpusEntry&)> applies;
  /// Two-group checks run on these key pairs when both are selected.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::function<CheckOutcome(const std::vector<const SubgroupLattice*>&, std::uint64_t budget)> run;
};

/// The built-in checks grouped into suites.
const std::vector<CorpusCheck>& standard_checks();
std::vector<std::string> suite_names();

struct RunOptions {
  /// nullopt runs the whole corpus; an empty list runs nothing.
  std::optional<std::vector<std::string>> groups;
  /// Empty runs every suite.
  std::vector<std::string> suites;
  std::uint64_t budget = default_budget();
  /// Defaults to building each lattice once per run.
  LatticeSource source;
};

VerificationReport run_corpus(const std::vector<CorpusCheck>& checks, const RunOptions& opt = {});
VerificationReport run_corpus(const RunOptions& opt = {});

}  // namespace grpx
