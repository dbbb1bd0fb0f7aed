#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grpx/group.hpp"
#include "grpx/lattice.hpp"
#include "grpx/search.hpp"

namespace grpx {

enum class ComplexKind { Independence, Strong };
std::string_view to_string(ComplexKind k);

/// Faces keyed by cardinality. Vertices are all group elements; the identity
/// is a vertex but {1} is not a face. Each level is sorted lexicographically
/// and every face is a sorted list of element indices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(ComplexKind kind, std::size_t vertex_count, std::uint64_t group_hash)
      : kind_(kind), n_(vertex_count), hash_(group_hash), levels_(1) {}

  ComplexKind kind() const { return kind_; }
  std::size_t vertex_count() const { return n_; }
  std::uint64_t group_hash() const { return hash_; }
  /// Cardinality cap used during enumeration.
  std::uint32_t rank_bound() const { return rank_bound_; }

  std::size_t max_cardinality() const { return levels_.size() - 1; }
  std::size_t face_count(std::size_t k) const { return k >= 1 && k < levels_.size() ? levels_[k].size() / k : 0; }
  std::size_t face_count() const;
  std::span<const Elem> face(std::size_t k, std::size_t i) const { return {levels_[k].data() + i * k, k}; }
  /// Face given as a sorted list.
  bool contains(std::span<const Elem> face) const;
  bool is_vertex_face(Elem v) const { return contains(std::span<const Elem>(&v, 1)); }
  /// Faces not contained in a larger face.
  std::vector<std::vector<Elem>> facets() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend class ComplexBuilder;
  ComplexKind kind_ = ComplexKind::Independence;
  std::size_t n_ = 0;
  std::uint64_t hash_ = 0;
  std::uint32_t rank_bound_ = 0;
  std::vector<std::vector<Elem>> levels_;
};

struct ComplexOptions {
  std::size_t face_budget = 10'000'000;
  /// 0 means the natural bound (d(G) for the strong complex, rank(G) for
  /// p-groups, otherwise until a level comes out empty).
  std::uint32_t max_cardinality = 0;
};

/// No element lies in the subgroup generated by the others.
bool is_independent(const FiniteGroup& g, const std::vector<Elem>& x);
bool is_independent(const SubgroupLattice& l, const std::vector<Elem>& x);
/// Independent and every subgroup containing <X> needs at least |X| generators.
bool is_strongly_independent(const SubgroupLattice& l, const std::vector<Elem>& x);
/// Same test without a lattice: walks the overgroups of <X> upward.
bool is_strongly_independent(const FiniteGroup& g, const std::vector<Elem>& x);

SimplicialComplex independence_complex(const SubgroupLattice& l, const ComplexOptions& opt = {});
SimplicialComplex strong_independence_complex(const SubgroupLattice& l, const ComplexOptions& opt = {});
SimplicialComplex build_complex(const SubgroupLattice& l, ComplexKind kind, const ComplexOptions& opt = {});

/// f_k for k = 1..max_cardinality (index 0 holds f_1).
std::vector<std::size_t> f_vector(const SimplicialComplex& c);

/// Vertex bijection a -> b mapping faces onto faces in every cardinality.
SearchOutcome<std::vector<std::uint32_t>> complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                              std::uint64_t budget = default_budget());
bool is_complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                            const std::vector<std::uint32_t>& map);

/// Complexes of two groups. Refutes early when the order censuses differ, then
/// falls back to f-vectors and the full search.
struct GroupComplexIso {
  SearchOutcome<std::vector<std::uint32_t>> outcome;
  /// Why the pair was refuted without search, empty otherwise.
  std::string refuted_by;
};
GroupComplexIso group_complex_isomorphism(const SubgroupLattice& a, const SubgroupLattice& b, ComplexKind kind,
                                          const ComplexOptions& opt = {}, std::uint64_t budget = default_budget());

using Rational = boost::multiprecision::cpp_rational;
/// l_r = sum over subgroups H with d(H) = r of (|H| / p^r)^r, r = 1..rank.
std::vector<Rational> ell_sequence(const SubgroupLattice& l, std::uint32_t p);

/// (p^5 - 1, C(p^5 - 1, 2) - ((p^5 - 1) / (p - 1)) * C(p - 1, 2)).
std::pair<std::uint64_t, std::uint64_t> exponent_p_counts(std::uint64_t p);

/// One face per line after a '#' header with the group hash, kind and f-vector.
std::string export_faces(const SimplicialComplex& c);
/// {"group", "kind", "f_vector", "rank_bound"}
std::string export_json(const SimplicialComplex& c, const std::string& group_name);

/// The complement of the 1-skeleton of the independence complex is the power
/// graph, and that of the strong complex is the enhanced power graph. Both are
/// compared edge for edge on the vertex set G.
struct SkeletonCheck {
  bool power = false, enhanced = false;
  bool ok() const { return power && enhanced; }
};
SkeletonCheck skeleton_complement_check(const SubgroupLattice& l);

}  // namespace grpx
