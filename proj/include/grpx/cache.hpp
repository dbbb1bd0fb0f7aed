#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "grpx/lattice.hpp"

namespace grpx {

inline constexpr std::uint32_t kLatticeCacheVersion = 2;

/// GRPX_CACHE, else $XDG_CACHE_HOME/grpx, else ~/.cache/grpx.
std::filesystem::path cache_dir();
/// File for g's lattice inside `dir`, named by the group hash.
std::filesystem::path lattice_cache_path(const FiniteGroup& g, const std::filesystem::path& dir);

/// Writes to a temporary file in the same directory, then renames it into place.
void save_lattice(const SubgroupLattice& l, const std::filesystem::path& file);
/// Throws CacheVersionMismatch, CorruptCache (bad magic, checksum, sizes or a
/// different group hash) or Io.
SubgroupLattice load_lattice(const FiniteGroup& g, const std::filesystem::path& file);

struct CachedLattice {
  enum class Source { Loaded, Computed, Recomputed };
  std::shared_ptr<const SubgroupLattice> lattice;
  Source source = Source::Computed;
  /// Why a stale file was discarded.
  std::string reason;
};

/// Loads g's lattice from the cache, or enumerates and stores it. Unreadable
/// files are recomputed and overwritten; write failures are ignored.
CachedLattice cached_lattice(const FiniteGroup& g, const std::optional<std::filesystem::path>& dir = std::nullopt);

/// Saves l under `dir`, reloads it and compares members and containment bit for bit.
bool cache_roundtrip(const SubgroupLattice& l, const std::filesystem::path& dir);

}  // namespace grpx
