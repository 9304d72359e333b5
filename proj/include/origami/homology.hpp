#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/cylinders.hpp"
#include "origami/linalg.hpp"
#include "origami/moves.hpp"
#include "origami/origami.hpp"

namespace origami {

/// Cellular homology of an origami with integer coefficients.
///
/// 1-chains live on 2N edges: σᵢ (bottom edge of square i, rightward) at index
/// i−1 and ζᵢ (left edge of square i, upward) at index N+i−1. Vertices are
/// classes of bottom-left corners under BL(v(h(i))) ~ BL(h(v(i))).
///
/// H₁ gets an integral basis from a tree–cotree decomposition: a spanning
/// tree of the 1-skeleton, a spanning tree of the dual graph on the remaining
/// edges, and one loop per leftover edge. Coordinates of a cycle are read off
/// by integer cocycles dual to those loops, so every class has an exact
/// integer coordinate vector of length 2g.
class HomologyModel {
 public:
  explicit HomologyModel(Origami o);

  const Origami& origami() const { return origami_; }
  int squares() const { return origami_.squares(); }
  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  int vertex_count() const { return vertex_count_; }
  /// Vertex class (0-based) of the bottom-left corner of square i (1-based).
  int vertex_of(int square) const { return bl_vertex_[static_cast<std::size_t>(square - 1)]; }

  std::size_t sigma_index(int square) const { return static_cast<std::size_t>(square - 1); }
  std::size_t zeta_index(int square) const { return static_cast<std::size_t>(squares() + square - 1); }
  IntVector sigma(int square) const;
  IntVector zeta(int square) const;
  IntVector zero_chain() const { return IntVector(2 * static_cast<std::size_t>(squares()), 0); }

  /// ∂₂: 2N × N, column j is σⱼ + ζ_{h(j)} − σ_{v(j)} − ζⱼ.
  const IntMatrix& boundary2() const { return boundary2_; }
  /// ∂₁: V × 2N.
  const IntMatrix& boundary1() const { return boundary1_; }

  bool is_cycle(const IntVector& chain) const;
  /// Integer H₁ coordinates of a cycle; throws if the chain is not a cycle.
  IntVector coordinates(const IntVector& cycle) const;
  /// Basis loops as 1-chains (2g of them).
  const std::vector<IntVector>& basis() const { return basis_; }
  /// 2g × 2N matrix of the coordinate cocycles.
  const IntMatrix& cocycles() const { return cocycles_; }

  /// Algebraic intersection number of two 1-cycles. ⟨σ, ζ⟩ = +1 on the torus.
  std::int64_t intersect_chains(const IntVector& a, const IntVector& b) const;
  /// Gram matrix of the intersection form on the basis.
  const IntMatrix& gram() const { return gram_; }
  /// xᵀ Ω y for coordinate vectors.
  std::int64_t pair(const IntVector& x, const IntVector& y) const;

 private:
  IntVector pushoff(const IntVector& b) const;

  Origami origami_;
  int genus_ = 1;
  int vertex_count_ = 0;
  std::vector<int> bl_vertex_;
  IntMatrix boundary2_;
  IntMatrix boundary1_;
  std::vector<IntVector> basis_;
  IntMatrix cocycles_;
  IntMatrix gram_;
  std::vector<std::vector<int>> sectors_;  // ccw bottom-left sectors per vertex (0-based squares)
};

// ---------------------------------------------------------------------------
// Chain maps of the moves.

/// Chain map C₁(o) → C₁(move(o)) as a 2N × 2N integer matrix. T sends
/// σᵢ ↦ σ'ᵢ and ζᵢ ↦ σ'ᵢ + ζ'_{h(i)}; J sends σᵢ ↦ ζ'_{v⁻¹(i)} and ζᵢ ↦ −σ'ᵢ;
/// the inverse moves use the inverse maps.
IntMatrix move_chain_map(const Origami& source, Move m);

/// Chain map of the relabeling o ↦ o.conjugated(φ): square j becomes φ⁻¹(j).
IntMatrix relabel_chain_map(const Permutation& phi);

/// Pulls a chain of apply_word(o, word) back to o through the inverse moves.
IntVector pull_back(const Origami& o, const MoveWord& word, const IntVector& chain);

// ---------------------------------------------------------------------------
// Waist curves and derived invariants.

/// Waist class of cylinder `index` of `dec`, as a 1-chain of `m.origami()`.
/// Horizontal: Σσ over the bottom row. Vertical: Σζ over one column (upward).
/// Other directions: Σσ over the bottom row in the frame, pulled back.
IntVector waist_chain(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index);
/// H₁ coordinates of the waist class.
IntVector waist_class(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index);
/// Waist chain of a specific row of a horizontal or vertical cylinder.
IntVector waist_chain_of_row(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index, std::size_t row);

/// Rank over Q of the waist classes; throws Error(internal) if their span is
/// not isotropic.
int homological_dimension(const HomologyModel& m, const CylinderDecomposition& dec);
bool is_lagrangian(const HomologyModel& m, const CylinderDecomposition& dec);

/// E_ij = number of rectangles (height of Aᵢ by width of Bⱼ) in which
/// horizontal cylinder i meets vertical cylinder j.
IntMatrix intersection_matrix_geometric(const Origami& o);
/// E_ij = |⟨waist(Aᵢ), waist(Bⱼ)⟩|. Throws for equal (or opposite) directions.
IntMatrix intersection_matrix(const HomologyModel& m, const Direction& a, const Direction& b);
IntMatrix intersection_matrix(const HomologyModel& m, const CylinderDecomposition& a, const CylinderDecomposition& b);

struct RankBound {
  int rank = 0;
  Direction a, b;
  std::size_t pairs_checked = 0;
};

/// Lower bound for the homological rank: max rank E over pairs of distinct
/// primitive directions with |p|,|q| ≤ max_denom.
RankBound homological_rank_lb(const HomologyModel& m, std::int64_t max_denom);

/// Report of the parabolic eigenvector identities for two transverse
/// directions A and B. Lengths are measured in the affine frame with axes
/// along A and B: x, y are circumferences and heights of the A-cylinders, ξ
/// the heights and η the circumferences of the B-cylinders (heights divided by
/// d = |det(A,B)|, which is 1 for horizontal/vertical).
struct ParabolicReport {
  IntMatrix E;
  QVector x, y, xi, eta;
  std::vector<std::int64_t> m, n;  // D_m, D_n diagonals
  Rational a, b, t;
  bool ok = false;
  std::string failure;  // first failing identity, empty when ok
};

ParabolicReport parabolic_eigen_check(const HomologyModel& m, const Direction& a, const Direction& b);

/// Σ heightᵢ · waist(Cᵢ) in H₁ coordinates.
IntVector poincare_dual(const HomologyModel& m, const CylinderDecomposition& dec);

struct TautologicalPlane {
  IntVector horizontal;  // dual of the horizontal foliation
  IntVector vertical;
  std::int64_t pairing = 0;  // ⟨horizontal, vertical⟩
};

/// Span of the two Poincaré duals; throws Error(internal) if degenerate.
TautologicalPlane tautological_plane(const HomologyModel& m);

}  // namespace origami
