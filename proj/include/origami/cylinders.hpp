#pragma once

#include <vector>

#include "origami/moves.hpp"
#include "origami/origami.hpp"
#include "origami/rational.hpp"

namespace origami {

/// A maximal cylinder, measured in square units of the frame in which its
/// direction is horizontal.
struct Cylinder {
  /// h-cycles from bottom to top (columns, left to right, for vertical
  /// cylinders). Row k+1 is the elementwise v-image of row k.
  std::vector<std::vector<int>> rows;
  int width = 0;
  int height = 0;
  Rational modulus;  // height / width

  std::vector<int> squares() const;  // sorted
};

/// Primitive direction (p, q) with gcd(p, q) = 1.
struct Direction {
  std::int64_t p = 1;
  std::int64_t q = 0;

  static Direction horizontal() { return {1, 0}; }
  static Direction vertical() { return {0, 1}; }
  /// Same unoriented line: (p,q) and (-p,-q) coincide.
  bool same_line(const Direction& o) const { return (p == o.p && q == o.q) || (p == -o.p && q == -o.q); }
  friend bool operator==(const Direction&, const Direction&) = default;
};

struct CylinderDecomposition {
  Direction direction;
  /// Moves taking the input origami to the frame where `direction` is
  /// horizontal. Square labels in `cylinders` belong to that frame; the moves
  /// never relabel, so label i there is the square sharing the bottom edge
  /// label i of the chain bookkeeping.
  MoveWord frame;
  std::vector<Cylinder> cylinders;

  Rational modulus_sum() const;
  int area() const;  // Σ width·height
};

/// True when the seam on top of `row` carries no cone point: v(h(i)) == h(v(i))
/// for every square i of the row.
bool seam_is_regular(const Origami& o, const std::vector<int>& row);

CylinderDecomposition horizontal_cylinders(const Origami& o);
/// Horizontal cylinders of the J-image, rows reported as upward columns.
CylinderDecomposition vertical_cylinders(const Origami& o);
/// Cylinders in direction (p, q). The frame is the Euclidean word of a matrix
/// M ∈ SL(2,Z) with M·(p,q)ᵀ = (1,0)ᵀ.
CylinderDecomposition direction_cylinders(const Origami& o, std::int64_t p, std::int64_t q);
/// Same, with a caller-chosen frame matrix (must send (p,q) to (1,0)).
CylinderDecomposition direction_cylinders(const Origami& o, std::int64_t p, std::int64_t q, const Mat2& frame);

/// A matrix in SL(2,Z) sending (p,q) to (1,0).
Mat2 frame_matrix(std::int64_t p, std::int64_t q);

/// Primitive directions (p,q) with max(|p|,|q|) ≤ bound, one per unoriented
/// line: q > 0, or q == 0 and p == 1.
std::vector<Direction> primitive_directions(std::int64_t bound);

}  // namespace origami
