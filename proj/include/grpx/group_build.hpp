#pragma once

#include <array>
#include <optional>
#include <vector>

#include "grpx/group.hpp"

// Table builders shared by the group constructors. Not part of the public API.
namespace grpx::detail {

/// Builds the full table of a group from its right-regular generator actions.
/// right_mult[g][x] is x * gen_g. The generators must reach every element.
std::vector<std::uint16_t> table_from_right_actions(std::size_t n,
                                                    const std::vector<std::vector<Elem>>& right_mult,
                                                    const char* what);

/// First triple (x, a, y) with (x a) y != x (a y) for a in gens, if any.
std::optional<std::array<Elem, 3>> light_associativity_violation(std::size_t n,
                                                                 const std::vector<std::uint16_t>& table,
                                                                 const std::vector<Elem>& gens);

}  // namespace grpx::detail
