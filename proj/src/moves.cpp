#include "origami/moves.hpp"

#include <cstdlib>

#include "origami/error.hpp"

namespace origami {

const char* move_name(Move m) {
  switch (m) {
    case Move::T: return "T";
    case Move::T_inv: return "T^-1";
    case Move::J: return "J";
    case Move::J_inv: return "J^-1";
  }
  return "?";
}

Move parse_move(const std::string& name) {
  if (name == "T") return Move::T;
  if (name == "T^-1") return Move::T_inv;
  if (name == "J") return Move::J;
  if (name == "J^-1") return Move::J_inv;
  throw Error(ErrorCode::invalid_argument, "unknown move '" + name + "'");
}

Move inverse(Move m) {
  switch (m) {
    case Move::T: return Move::T_inv;
    case Move::T_inv: return Move::T;
    case Move::J: return Move::J_inv;
    case Move::J_inv: return Move::J;
  }
  return m;
}

Mat2 matrix_of(Move m) {
  switch (m) {
    case Move::T: return {1, 1, 0, 1};
    case Move::T_inv: return {1, -1, 0, 1};
    case Move::J: return {0, -1, 1, 0};
    case Move::J_inv: return {0, 1, -1, 0};
  }
  return {};
}

Mat2 matrix_of(const MoveWord& w) {
  Mat2 m;
  for (Move x : w) m = matrix_of(x) * m;
  return m;
}

MoveWord word_for(const Mat2& target) {
  if (target.det() != 1) throw Error(ErrorCode::invalid_argument, "word_for: matrix is not in SL(2,Z)");
  // Left-multiply by generators until the identity is reached; `reducers`
  // records them in application order, so target = inv(r_0) ⋯ inv(r_k).
  MoveWord reducers;
  Mat2 m = target;
  auto left = [&](Move g) {
    m = matrix_of(g) * m;
    reducers.push_back(g);
  };
  while (m.c != 0) {
    const std::int64_t q = m.a / m.c;
    for (std::int64_t k = 0; k < std::llabs(q); ++k) left(q > 0 ? Move::T_inv : Move::T);
    left(Move::J);
  }
  if (m.a == -1) {
    left(Move::J);
    left(Move::J);
  }
  const std::int64_t b = m.b;
  for (std::int64_t k = 0; k < std::llabs(b); ++k) left(b > 0 ? Move::T_inv : Move::T);

  MoveWord word;
  word.reserve(reducers.size());
  for (auto it = reducers.rbegin(); it != reducers.rend(); ++it) word.push_back(inverse(*it));
  return word;
}

Origami apply_move(const Origami& o, Move m) {
  const auto& h = o.h();
  const auto& v = o.v();
  switch (m) {
    case Move::T: return Origami(h, compose(v, h.inverse()));
    case Move::T_inv: return Origami(h, compose(v, h));
    case Move::J: return Origami(v.inverse(), h);
    case Move::J_inv: return Origami(v, h.inverse());
  }
  throw Error(ErrorCode::internal, "apply_move: bad move");
}

Origami apply_word(const Origami& o, const MoveWord& w) {
  Origami x = o;
  for (Move m : w) x = apply_move(x, m);
  return x;
}

std::string to_string(const MoveWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += move_name(w[i]);
  }
  return s.empty() ? "id" : s;
}

}  // namespace origami
