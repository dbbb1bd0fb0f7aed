#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grpx/group.hpp"

namespace grpx {

/// A word as a list of (generator index, exponent) factors.
using PcWord = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Refined consistent polycyclic presentation of a p-group. Every relative
/// order is p. Relations not listed are trivial.
struct PcPresentation {
  std::uint32_t prime = 2;
  std::vector<std::string> names;
  /// power[i] is the word equal to g_i^p, in generators after i.
  std::map<std::uint32_t, PcWord> power;
  /// comm[{j, i}] with i < j is the word equal to [g_j, g_i], in generators after j.
  std::map<std::pair<std::uint32_t, std::uint32_t>, PcWord> comm;

  std::size_t size() const { return names.size(); }
};

/// Realizes the presentation by collection. Element index is the base-p number
/// of the normal-word exponents with g_1 most significant; generator g_i is the
/// element p^(k-1-i).
FiniteGroup group_from_pc_presentation(const PcPresentation& pcp, std::size_t cap = kDefaultOrderCap);

}  // namespace grpx
