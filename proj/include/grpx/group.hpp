#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpx/bitset.hpp"
#include "grpx/search.hpp"

namespace grpx {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10000;
/// Table entries are 16-bit; no cap may exceed this.
inline constexpr std::size_t kMaxOrder = 65535;

/// A finite group given by its full multiplication table. The identity is
/// always element 0. Instances are immutable and share their storage, so
/// copying is cheap.
class FiniteGroup {
 public:
  FiniteGroup();

  std::size_t order() const { return d_->n; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const { return d_->table[static_cast<std::size_t>(a) * d_->n + b]; }
  Elem inv(Elem a) const { return d_->inverses[a]; }
  std::uint32_t element_order(Elem a) const { return d_->orders[a]; }
  Elem power(Elem a, long long k) const;
  /// x^y = y^-1 x y
  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  /// [x,y] = x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  std::span<const std::uint16_t> row(Elem a) const {
    return {d_->table.data() + static_cast<std::size_t>(a) * d_->n, d_->n};
  }
  const std::vector<std::uint32_t>& orders() const { return d_->orders; }
  const std::vector<Elem>& inverses() const { return d_->inverses; }

  /// A generating set; the construction's own generators when it has them.
  const std::vector<Elem>& generators() const { return d_->generators; }
  /// Relabeling applied on ingestion: input_label[i] is the caller's label of element i.
  const std::vector<Elem>& input_labels() const { return d_->input_labels; }

  bool is_abelian() const { return d_->abelian; }
  std::uint32_t exponent() const { return d_->exponent; }
  /// FNV-1a over the table; identifies the group's labelled table for caching.
  std::uint64_t hash() const { return d_->hash; }

  /// Builds a group from a table that the caller guarantees is a group table
  /// with identity 0. Only orders, inverses and caches are computed.
  static FiniteGroup from_trusted_table(std::size_t n, std::vector<std::uint16_t> table,
                                        std::vector<Elem> generators = {},
                                        std::vector<Elem> input_labels = {});

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<std::uint16_t> table{0};
    std::vector<Elem> inverses{0};
    std::vector<std::uint32_t> orders{1};
    std::vector<Elem> generators;
    std::vector<Elem> input_labels;
    bool abelian = true;
    std::uint32_t exponent = 1;
    std::uint64_t hash = 0;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A map between two groups, carried with both endpoints.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  bool is_automorphism() const { return is_bijective() && is_homomorphism(); }
};

GroupHom identity_hom(const FiniteGroup& g);

/// Permutation of {0..degree-1} in image form: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

FiniteGroup group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table);
/// Reads the text table format: n, then n rows of n integers.
FiniteGroup read_cayley_table(const std::string& text);
std::string write_cayley_table(const FiniteGroup& g);

/// Closure of the generators under composition; (p*q)(i) = q(p(i)).
FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::size_t cap = kDefaultOrderCap);

FiniteGroup make_cyclic(std::size_t n);
/// Element (a,b) has index a*|B| + b.
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                std::size_t cap = kDefaultOrderCap);
/// Pairs (n,h) with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2); indexing as in
/// make_direct_product. action[h] is the automorphism of N attached to h.
FiniteGroup make_semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                                    const std::vector<GroupHom>& action,
                                    std::size_t cap = kDefaultOrderCap);
/// Extends automorphisms attached to the generators of `acting` to a full
/// action, checking that the assignment defines a homomorphism H -> Aut(N).
std::vector<GroupHom> action_from_generators(const FiniteGroup& normal, const FiniteGroup& acting,
                                             const std::vector<GroupHom>& generator_images);

std::uint32_t element_order(const FiniteGroup& g, Elem x);

/// Map count[order] = number of elements of that order.
std::map<std::uint32_t, std::size_t> order_statistics(const FiniteGroup& g);

/// Returns an isomorphism G -> H if one exists. The map is validated before it
/// is returned.
SearchOutcome<GroupHom> group_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                          std::uint64_t budget = default_budget());

// Number-theory helpers shared by several modules.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// If n = p^k with p prime, returns p; otherwise nullopt. n = 1 yields nullopt.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);
/// Largest k with p^k dividing n.
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace grpx
