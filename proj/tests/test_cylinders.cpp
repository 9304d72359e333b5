#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "origami/cylinders.hpp"
#include "origami/error.hpp"
#include "random_origami.hpp"

using namespace origami;

namespace {

using Shape = std::vector<std::pair<int, int>>;

Shape shapes(const CylinderDecomposition& d) {
  Shape s;
  for (const auto& c : d.cylinders) s.emplace_back(c.width, c.height);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::vector<int>> square_sets(const CylinderDecomposition& d) {
  std::vector<std::vector<int>> s;
  for (const auto& c : d.cylinders) s.push_back(c.squares());
  std::sort(s.begin(), s.end());
  return s;
}

bool partitions(const CylinderDecomposition& d, int n) {
  std::vector<int> all;
  for (const auto& c : d.cylinders) {
    for (const auto& r : c.rows)
      if (static_cast<int>(r.size()) != c.width) return false;
    const auto sq = c.squares();
    all.insert(all.end(), sq.begin(), sq.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) expect[static_cast<std::size_t>(i)] = i + 1;
  return all == expect;
}

}  // namespace

TEST_CASE("moves on R0") {
  const auto r = fixtures::r_family();
  CHECK(t_move(r[0]) == r[1]);
  CHECK(j_move(r[0]) == r[4]);
  CHECK(t_move(Origami::torus()) == Origami::torus());
  for (Move m : {Move::T, Move::T_inv, Move::J, Move::J_inv}) {
    CHECK(apply_move(apply_move(r[3], m), inverse(m)) == r[3]);
    CHECK(stratum(apply_move(r[3], m)) == stratum(r[3]));
  }
}

TEST_CASE("move words and their matrices") {
  CHECK(matrix_of(Move::T) == Mat2{1, 1, 0, 1});
  CHECK(matrix_of(Move::J) == Mat2{0, -1, 1, 0});
  CHECK(matrix_of(MoveWord{Move::J, Move::J, Move::J, Move::J}) == Mat2{1, 0, 0, 1});
  for (const Mat2 m : {Mat2{2, 1, 1, 1}, Mat2{1, 0, -3, 1}, Mat2{-5, 2, -3, 1}, Mat2{0, 1, -1, 0}, Mat2{-1, 0, 0, -1}})
    CHECK(matrix_of(word_for(m)) == m);
}

TEST_CASE("horizontal cylinders of the orbit representatives") {
  const auto r = fixtures::r_family();
  const auto r0 = horizontal_cylinders(r[0]);
  CHECK(shapes(r0) == Shape{{2, 1}, {4, 1}});
  CHECK(r0.modulus_sum() == Rational(3, 4));
  const auto r4 = horizontal_cylinders(r[4]);
  CHECK(r4.cylinders.size() == 4);
  CHECK(r4.modulus_sum() == Rational(3));
  const auto r6 = horizontal_cylinders(r[6]);
  CHECK(shapes(r6) == Shape{{3, 1}, {3, 1}});
  CHECK(r6.modulus_sum() == Rational(2, 3));
  const auto t = horizontal_cylinders(Origami::torus());
  CHECK(shapes(t) == Shape{{1, 1}});
  CHECK(t.cylinders[0].modulus == Rational(1));
}

TEST_CASE("a tall cylinder stacks rows") {
  // 2 × 2 torus: every seam is regular, one cylinder of height 2.
  const auto o = fixtures::make("(1,2)(3,4)", "(1,3)(2,4)", 4);
  const auto d = horizontal_cylinders(o);
  CHECK(shapes(d) == Shape{{2, 2}});
  CHECK(d.cylinders[0].rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("vertical cylinders") {
  using S = std::vector<std::vector<int>>;
  CHECK(square_sets(vertical_cylinders(fixtures::r0())) == S{{1, 5}, {2}, {3, 6}, {4}});
  CHECK(square_sets(vertical_cylinders(fixtures::s0())) == S{{1, 3}, {2}});
  CHECK(shapes(vertical_cylinders(Origami::torus())) == Shape{{1, 1}});
  // Columns are reported bottom to top.
  for (const auto& c : vertical_cylinders(fixtures::r0()).cylinders)
    if (c.width == 2) CHECK((c.rows[0] == std::vector<int>{1, 5} || c.rows[0] == std::vector<int>{3, 6}));
}

TEST_CASE("direction cylinders") {
  CHECK(shapes(direction_cylinders(Origami::torus(), 1, 1)) == Shape{{1, 1}});
  CHECK(square_sets(direction_cylinders(fixtures::r0(), 1, 0)) == square_sets(horizontal_cylinders(fixtures::r0())));
  CHECK(direction_cylinders(fixtures::r0(), 1, 1).area() == 6);
  CHECK_THROWS_AS(direction_cylinders(fixtures::r0(), 2, 4), Error);
  CHECK_THROWS_AS(direction_cylinders(fixtures::r0(), 0, 0), Error);
}

TEST_CASE("decomposition does not depend on the choice of frame") {
  const auto r0 = fixtures::r0();
  for (const auto& d : primitive_directions(3)) {
    const Mat2 m = frame_matrix(d.p, d.q);
    // Another frame sending (p,q) to (1,0): compose with a power of T.
    const Mat2 other = Mat2{1, 3, 0, 1} * m;
    CHECK(shapes(direction_cylinders(r0, d.p, d.q, m)) == shapes(direction_cylinders(r0, d.p, d.q, other)));
  }
}

TEST_CASE("J-duality of vertical and horizontal decompositions") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const auto o = fixtures::random_origami(2 + t % 9, rng);
    CHECK(shapes(vertical_cylinders(o)) == shapes(horizontal_cylinders(j_move(o))));
  }
}

TEST_CASE("partition and maximality on random origamis") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const auto o = fixtures::random_origami(1 + t % 12, rng);
    const auto d = horizontal_cylinders(o);
    CHECK(partitions(d, o.squares()));
    for (const auto& c : d.cylinders) {
      for (std::size_t k = 0; k + 1 < c.rows.size(); ++k) CHECK(seam_is_regular(o, c.rows[k]));
      // A cylinder whose top seam is regular must close up on itself (a torus).
      if (seam_is_regular(o, c.rows.back())) CHECK(std::all_of(c.rows.begin(), c.rows.end(), [&](const auto& r) { return seam_is_regular(o, r); }));
    }
  }
}
