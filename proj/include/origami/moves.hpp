#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

/// Generators of SL(2,Z) acting on origamis. T = [[1,1],[0,1]],
/// J = [[0,-1],[1,0]].
enum class Move { T, T_inv, J, J_inv };

const char* move_name(Move m);  // "T", "T^-1", "J", "J^-1"
Move parse_move(const std::string& name);
Move inverse(Move m);

/// 2×2 integer matrix [[a,b],[c,d]].
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 matrix_of(Move m);

/// Time-ordered move sequence: element 0 is applied first.
using MoveWord = std::vector<Move>;

/// Matrix of a time-ordered word: mat(w[k-1]) ⋯ mat(w[0]).
Mat2 matrix_of(const MoveWord& w);

/// A time-ordered word whose matrix equals m (det must be 1). Built by the
/// Euclidean algorithm on the first column.
MoveWord word_for(const Mat2& m);

/// T(h,v) = (h, v h⁻¹); J(h,v) = (v⁻¹, h); inverses accordingly.
Origami apply_move(const Origami& o, Move m);
Origami apply_word(const Origami& o, const MoveWord& w);

inline Origami t_move(const Origami& o) { return apply_move(o, Move::T); }
inline Origami j_move(const Origami& o) { return apply_move(o, Move::J); }

std::string to_string(const MoveWord& w);

}  // namespace origami
