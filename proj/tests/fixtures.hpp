#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "grpx/corpus.hpp"
#include "grpx/dsl.hpp"
#include "grpx/lattice.hpp"

// Corpus groups and lattices built once per test binary.
namespace fixture {

inline const grpx::FiniteGroup& group(const std::string& key) {
  static std::map<std::string, std::unique_ptr<grpx::FiniteGroup>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) {
    const auto* e = grpx::find_corpus_entry(key);
    slot = std::make_unique<grpx::FiniteGroup>(grpx::build_group(e ? e->spec : key));
  }
  return *slot;
}

inline const grpx::SubgroupLattice& lattice(const std::string& key) {
  static std::map<std::string, std::unique_ptr<grpx::SubgroupLattice>> cache;
  static std::mutex mu;
  const auto& g = group(key);
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<grpx::SubgroupLattice>(grpx::enumerate_subgroups(g));
  return *slot;
}

}  // namespace fixture
