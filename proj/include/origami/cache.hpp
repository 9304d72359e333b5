#pragma once

#include <filesystem>
#include <optional>

#include "origami/orbit.hpp"

namespace origami {

/// Orbit graphs stored as JSON files keyed by the canonical basepoint and the
/// tool version. Writes go to a temporary file that is then renamed.
class OrbitCache {
 public:
  explicit OrbitCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// ORIGAMI_CACHE_DIR, if set and non-empty.
  static std::optional<OrbitCache> from_environment();

  std::filesystem::path path_for(const Origami& o) const;
  /// The stored graph, re-based at `o`; nullopt on a miss or a stale entry.
  std::optional<OrbitGraph> load(const Origami& o) const;
  void store(const OrbitGraph& g) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace origami
