#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grpx/group.hpp"
#include "grpx/pc_presentation.hpp"

namespace grpx {

struct ConstructionSpec;
using SpecPtr = std::shared_ptr<const ConstructionSpec>;

/// How the acting group's single generator acts on the normal subgroup.
struct ActionSpec {
  enum class Kind { Power, Matrix, Images };
  Kind kind = Kind::Power;
  long long power = 1;
  /// Column j is the image of basis vector e_j.
  std::vector<std::vector<long long>> matrix;
  /// Images of the normal subgroup's generators as words like "g1*g2^2" or "1".
  std::vector<std::string> images;

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

struct ConstructionSpec {
  enum class Kind { Cyclic, Direct, Semidirect, Pc, Perm, Named };
  Kind kind = Kind::Cyclic;
  std::uint64_t n = 1;          // Cyclic order, Perm degree
  SpecPtr left, right;          // Direct factors; Semidirect normal and acting groups
  ActionSpec action;
  PcPresentation pc;
  std::vector<Permutation> perms;
  std::string name;             // Named

  friend bool operator==(const ConstructionSpec& a, const ConstructionSpec& b);
};

/// Parses the construction language:
///   expr   := term { "x" term }
///   term   := "C(" INT ")" | "SD(" expr "," expr "," action ")" | "PC{" INT ";" names ";" rels "}"
///           | "Perm(" INT ";" cycles { "," cycles } ")" | NAME | "(" expr ")"
///   action := "pow(" INT ")" | "mat[" row { ";" row } "]" | "imgs{" word { "," word } "}"
/// Names are checked against the corpus.
ConstructionSpec parse_construction(const std::string& text);
std::string print_construction(const ConstructionSpec& spec);
FiniteGroup build_group(const ConstructionSpec& spec, std::size_t cap = kDefaultOrderCap);
/// parse_construction followed by build_group.
FiniteGroup build_group(const std::string& text, std::size_t cap = kDefaultOrderCap);

}  // namespace grpx
