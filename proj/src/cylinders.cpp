#include "origami/cylinders.hpp"

#include <algorithm>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

std::vector<int> Cylinder::squares() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

Rational CylinderDecomposition::modulus_sum() const {
  Rational s(0);
  for (const auto& c : cylinders) s += c.modulus;
  return s;
}

int CylinderDecomposition::area() const {
  int a = 0;
  for (const auto& c : cylinders) a += c.width * c.height;
  return a;
}

bool seam_is_regular(const Origami& o, const std::vector<int>& row) {
  const auto& h = o.h();
  const auto& v = o.v();
  return std::all_of(row.begin(), row.end(), [&](int i) { return v(h(i)) == h(v(i)); });
}

CylinderDecomposition horizontal_cylinders(const Origami& o) {
  const auto rows = o.h().cycles();
  const auto n_rows = rows.size();
  std::vector<int> row_of(static_cast<std::size_t>(o.squares()) + 1, -1);
  for (std::size_t r = 0; r < n_rows; ++r)
    for (int i : rows[r]) row_of[static_cast<std::size_t>(i)] = static_cast<int>(r);

  // next[r]: the row stacked on top of r inside the same cylinder, or -1.
  std::vector<int> next(n_rows, -1);
  std::vector<bool> has_prev(n_rows, false);
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!seam_is_regular(o, rows[r])) continue;
    const int above = row_of[static_cast<std::size_t>(o.v()(rows[r].front()))];
    next[r] = above;
    has_prev[static_cast<std::size_t>(above)] = true;
  }

  CylinderDecomposition dec;
  dec.direction = Direction::horizontal();
  std::vector<bool> used(n_rows, false);
  auto build = [&](std::size_t start) {
    Cylinder cyl;
    std::vector<int> row = rows[start];
    std::size_t r = start;
    while (true) {
      used[r] = true;
      cyl.rows.push_back(row);
      const int nx = next[r];
      if (nx < 0 || used[static_cast<std::size_t>(nx)]) break;
      for (int& i : row) i = o.v()(i);
      r = static_cast<std::size_t>(nx);
    }
    cyl.width = static_cast<int>(cyl.rows.front().size());
    cyl.height = static_cast<int>(cyl.rows.size());
    cyl.modulus = Rational(cyl.height, cyl.width);
    dec.cylinders.push_back(std::move(cyl));
  };
  for (std::size_t r = 0; r < n_rows; ++r)
    if (!has_prev[r]) build(r);
  // Rows left over close up into cylinders without any singular seam (tori).
  for (std::size_t r = 0; r < n_rows; ++r)
    if (!used[r]) build(r);

  if (dec.area() != o.squares()) throw Error(ErrorCode::internal, "horizontal_cylinders: area not conserved");
  return dec;
}

CylinderDecomposition vertical_cylinders(const Origami& o) {
  auto dec = horizontal_cylinders(j_move(o));
  dec.direction = Direction::vertical();
  dec.frame = {Move::J};
  // In the J frame rows follow v⁻¹; report columns in upward order.
  for (auto& cyl : dec.cylinders)
    for (auto& col : cyl.rows) {
      std::reverse(col.begin(), col.end());
      std::rotate(col.begin(), std::min_element(col.begin(), col.end()), col.end());
    }
  return dec;
}

Mat2 frame_matrix(std::int64_t p, std::int64_t q) {
  // Extended Euclid: a·p + b·q = 1, then M = [[a, b], [-q, p]].
  std::int64_t old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
    old_t -= quot * t;
    std::swap(old_t, t);
  }
  if (old_r == -1) {
    old_s = -old_s;
    old_t = -old_t;
    old_r = 1;
  }
  if (old_r != 1) throw Error(ErrorCode::invalid_argument, "direction (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  return Mat2{old_s, old_t, -q, p};
}

CylinderDecomposition direction_cylinders(const Origami& o, std::int64_t p, std::int64_t q, const Mat2& frame) {
  if (frame.det() != 1) throw Error(ErrorCode::invalid_argument, "direction_cylinders: frame matrix not in SL(2,Z)");
  if (frame.a * p + frame.b * q != 1 || frame.c * p + frame.d * q != 0)
    throw Error(ErrorCode::invalid_argument, "direction_cylinders: frame does not send the direction to (1,0)");
  const MoveWord word = word_for(frame);
  auto dec = horizontal_cylinders(apply_word(o, word));
  dec.direction = {p, q};
  dec.frame = word;
  return dec;
}

CylinderDecomposition direction_cylinders(const Origami& o, std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::invalid_argument, "direction (0,0) is not a direction");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::invalid_argument, "direction (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  return direction_cylinders(o, p, q, frame_matrix(p, q));
}

std::vector<Direction> primitive_directions(std::int64_t bound) {
  std::vector<Direction> out{Direction::horizontal()};
  for (std::int64_t q = 1; q <= bound; ++q)
    for (std::int64_t p = -bound; p <= bound; ++p)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

}  // namespace origami
