#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "origami/moves.hpp"
#include "origami/origami.hpp"

namespace origami {

struct OrbitEdge {
  int from = 0;
  int to = 0;
  Move move = Move::T;
  /// φ with nodes[to] = φ⁻¹ · move(nodes[from]) · φ.
  Permutation relabel;
};

/// SL(2,Z)-orbit of an origami under the moves T, T⁻¹, J, J⁻¹.
///
/// Nodes are canonical forms sorted lexicographically, so the graph does not
/// depend on which element of the orbit it was started from (apart from
/// `basepoint`). Every node carries exactly one outgoing edge per move, stored
/// in (from, move) order.
struct OrbitGraph {
  std::vector<Origami> nodes;
  std::vector<OrbitEdge> edges;
  int basepoint = 0;
  /// T-orbits, each listed in T-order from its smallest node index; sorted by
  /// that first index.
  std::vector<std::vector<int>> cusps;

  std::size_t size() const { return nodes.size(); }
  /// Node index of the canonical form of `o`, if it is in the orbit.
  std::optional<int> find(const Origami& o) const;
  const OrbitEdge& edge(int from, Move m) const;
  std::vector<int> cusp_sizes() const;  // in cusp order
  /// Index into `cusps` for each node.
  std::vector<int> cusp_of() const;
};

inline constexpr std::size_t default_orbit_budget = 1'000'000;

/// Breadth-first closure under {T, T⁻¹, J, J⁻¹} with canonical-form
/// deduplication. Throws Error(orbit_overflow) past `budget` nodes.
OrbitGraph orbit(const Origami& o, std::size_t budget = default_orbit_budget);

/// A word fixing the basepoint up to simultaneous conjugacy.
struct StabilizerWord {
  MoveWord word;
  /// ψ with apply_word(base, word) = ψ⁻¹ · base · ψ.
  Permutation relabel;
};

/// Schreier generators of the basepoint stabilizer (the Veech group, up to
/// ±I) from a BFS spanning tree over the T and J edges: one freely reduced word
/// per non-tree T/J edge, so the count is 2·|nodes| − |nodes| + 1.
std::vector<StabilizerWord> stabilizer_words(const OrbitGraph& g);

nlohmann::json to_json(const OrbitGraph& g);
/// Rebuilds a graph from its JSON form and checks the edge relabels against the
/// moves; throws Error(validation_failed) on any mismatch.
OrbitGraph orbit_from_json(const nlohmann::json& j);

}  // namespace origami
