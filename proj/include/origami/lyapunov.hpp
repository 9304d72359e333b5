#pragma once

#include <cstdint>
#include <vector>

#include "origami/homology.hpp"
#include "origami/orbit.hpp"

namespace origami {

/// Action of one orbit edge on homology. `chain` is the 2N × 2N chain map
/// C₁(source) → C₁(target) including the canonical relabeling; `h1` is the
/// induced 2g × 2g integer matrix in the coordinates of the two models.
struct EdgeHomologyMap {
  int from = -1;
  int to = -1;
  Move move = Move::T;
  IntMatrix chain;
  IntMatrix h1;
};

/// Builds and validates the edge map from `source` to `target`, where
/// target.origami() = apply_move(source.origami(), m).conjugated(relabel).
/// Checks that relations go to boundaries, cycles to cycles, that the H₁
/// matrix preserves the intersection form, and that Σσ, Σζ transform by the
/// move's SL(2,Z) matrix. Throws Error(validation_failed) otherwise.
EdgeHomologyMap edge_homology_map(const HomologyModel& source, const HomologyModel& target, Move m, const Permutation& relabel);

/// T and J maps of a single origami (no relabeling), validated as above.
EdgeHomologyMap t_chain_map(const Origami& o);
EdgeHomologyMap j_chain_map(const Origami& o);

/// Homology models for every node of an orbit and validated maps for every
/// edge (slot from·4 + move, as in OrbitGraph).
struct OrbitCocycle {
  std::vector<HomologyModel> models;
  std::vector<EdgeHomologyMap> edges;
  int genus = 1;
};

OrbitCocycle build_cocycle(const OrbitGraph& g);

struct WalkConfig {
  std::uint64_t steps = 1'000'000;  // continued-fraction digits per trajectory
  std::uint64_t seed = 1;
  std::uint64_t renorm_interval = 10;
  std::uint64_t digit_cap = 10'000;
  std::uint64_t trajectories = 8;
};

struct LyapunovEstimate {
  std::vector<double> estimates;  // λ₁ ≥ … ≥ λ_g, normalized by the base rate
  std::vector<double> stderrs;
  std::vector<double> full_spectrum;  // all 2g normalized rates, descending
  double base_rate = 0.0;             // base log-growth per digit
  std::vector<std::vector<double>> per_trajectory;
  const char* kernel = "";
};

/// Random continued-fraction walk on the orbit graph: for x uniform in (0,1)
/// with digits a₁, a₂, … the walk applies T^{a₁}, then J T^{−a₂} J⁻¹, then
/// T^{a₃}, and so on, i.e. the Gauss coding T^{a₁} L^{a₂} T^{a₃} ⋯ of the
/// geodesic towards x. The homology frame is re-orthonormalized every
/// renorm_interval digits; exponents are log-growth rates divided by the
/// growth rate of the 2 × 2 product.
LyapunovEstimate estimate_exponents(const OrbitGraph& g, const OrbitCocycle& cocycle, const WalkConfig& cfg);
LyapunovEstimate estimate_exponents(const OrbitGraph& g, const WalkConfig& cfg);

}  // namespace origami
