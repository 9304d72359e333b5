#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "origami/error.hpp"
#include "origami/homology.hpp"
#include "random_origami.hpp"

using namespace origami;

namespace {

bool antisymmetric(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != -m(c, r)) return false;
  return true;
}

bool unimodular(const IntMatrix& m) {
  const auto inv = smith_invariants(m);
  if (inv.size() != m.rows()) return false;
  for (auto d : inv)
    if (d != 1) return false;
  return true;
}

IntVector chain_over(const HomologyModel& m, const std::vector<int>& squares, bool vertical) {
  IntVector c = m.zero_chain();
  for (int i : squares) c[vertical ? m.zeta_index(i) : m.sigma_index(i)] += 1;
  return c;
}

}  // namespace

TEST_CASE("torus homology") {
  const HomologyModel m(Origami::torus());
  CHECK(m.rank() == 2);
  CHECK(m.vertex_count() == 1);
  CHECK(m.basis() == std::vector<IntVector>{m.sigma(1), m.zeta(1)});
  CHECK(m.intersect_chains(m.sigma(1), m.zeta(1)) == 1);
  CHECK(m.intersect_chains(m.zeta(1), m.sigma(1)) == -1);
  CHECK(m.intersect_chains(m.sigma(1), m.sigma(1)) == 0);
}

TEST_CASE("ranks and boundary maps") {
  CHECK(HomologyModel(fixtures::r0()).rank() == 6);
  CHECK(HomologyModel(fixtures::s0()).rank() == 4);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const HomologyModel m(fixtures::random_origami(1 + t % 12, rng));
    const auto n = static_cast<std::size_t>(m.squares());
    // rank H1 = dim ker ∂1 − rank ∂2 over Q.
    const auto r1 = rank(m.boundary1());
    const auto r2 = rank(m.boundary2());
    CHECK(static_cast<int>(2 * n - r1 - r2) == m.rank());
    CHECK(r2 == n - 1);
    CHECK(static_cast<int>(r1) == m.vertex_count() - 1);
    for (const auto& b : m.basis()) CHECK(m.is_cycle(b));
    for (std::size_t c = 0; c < n; ++c) CHECK(m.coordinates(m.boundary2().col(c)) == IntVector(static_cast<std::size_t>(m.rank()), 0));
  }
}

TEST_CASE("vertex classes match corner turning") {
  // Independent count: cycles of the commutator, one per cone point.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const auto o = fixtures::random_origami(2 + t % 10, rng);
    CHECK(HomologyModel(o).vertex_count() == static_cast<int>(vertex_cycles(o).size()));
  }
}

TEST_CASE("coordinates reject non-cycles") { CHECK_THROWS_AS(HomologyModel(fixtures::r0()).coordinates(HomologyModel(fixtures::r0()).sigma(1)), Error); }

TEST_CASE("intersection form is antisymmetric and unimodular") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const HomologyModel m(fixtures::random_origami(1 + t % 12, rng));
    CHECK(antisymmetric(m.gram()));
    CHECK(unimodular(m.gram()));
  }
}

TEST_CASE("pairing of chains only depends on classes") {
  const HomologyModel m(fixtures::r0());
  const auto& b = m.basis();
  // Adding a boundary to either argument leaves the pairing unchanged.
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      IntVector shifted = b[j];
      const auto d = m.boundary2().col((i + j) % 6);
      for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += d[k];
      CHECK(m.intersect_chains(b[i], shifted) == m.gram()(i, j));
      CHECK(m.intersect_chains(shifted, b[i]) == m.gram()(j, i));
    }
}

TEST_CASE("waist classes of R0") {
  const auto o = fixtures::r0();
  const HomologyModel m(o);
  const auto hor = horizontal_cylinders(o);
  const auto ver = vertical_cylinders(o);
  // Any row of a cylinder gives the same class.
  const auto tall = fixtures::make("(1,2)(3,4)", "(1,3)(2,4)", 4);
  const HomologyModel mt(tall);
  const auto dt = horizontal_cylinders(tall);
  CHECK(mt.coordinates(waist_chain_of_row(mt, dt, 0, 0)) == mt.coordinates(waist_chain_of_row(mt, dt, 0, 1)));

  // Horizontal cylinder (1,2,3,4) against the column {2}.
  std::size_t wide = hor.cylinders[0].width == 4 ? 0 : 1;
  std::size_t col2 = 0;
  for (std::size_t j = 0; j < ver.cylinders.size(); ++j)
    if (ver.cylinders[j].squares() == std::vector<int>{2}) col2 = j;
  CHECK(m.pair(waist_class(m, hor, wide), waist_class(m, ver, col2)) == 1);

  CHECK(homological_dimension(m, ver) == 3);
  CHECK(is_lagrangian(m, ver));
  CHECK(homological_dimension(m, hor) == 2);
  CHECK_FALSE(is_lagrangian(m, hor));
  // γ(1,5) and γ(3,6) are homologous.
  CHECK(m.coordinates(chain_over(m, {1, 5}, true)) == m.coordinates(chain_over(m, {3, 6}, true)));
  // Oracle for the horizontal rank: the two row sums are independent.
  CHECK(rank(from_columns({m.coordinates(chain_over(m, {1, 2, 3, 4}, false)), m.coordinates(chain_over(m, {5, 6}, false))}, 6)) == 2);

  const HomologyModel torus(Origami::torus());
  CHECK(homological_dimension(torus, horizontal_cylinders(Origami::torus())) == 1);
  CHECK(is_lagrangian(torus, horizontal_cylinders(Origami::torus())));
}

TEST_CASE("intersection matrices") {
  const auto o = fixtures::r0();
  const HomologyModel m(o);
  const IntMatrix expect{{1, 1, 1, 1}, {1, 0, 1, 0}};
  CHECK(intersection_matrix_geometric(o) == expect);
  CHECK(intersection_matrix(m, Direction::horizontal(), Direction::vertical()) == expect);
  CHECK(rank(expect) == 2);
  CHECK(intersection_matrix_geometric(Origami::torus()) == IntMatrix{{1}});
  CHECK_THROWS_AS(intersection_matrix(m, Direction{1, 1}, Direction{-1, -1}), Error);
  const IntMatrix prym3{{0, 0, 1}, {0, 1, 0}, {1, 1, 0}};
  CHECK(rank(prym3) == 3);
}

TEST_CASE("geometric and algebraic intersection matrices agree") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 40; ++t) {
    const auto o = fixtures::random_origami(1 + t % 12, rng);
    const HomologyModel m(o);
    CHECK(intersection_matrix(m, Direction::horizontal(), Direction::vertical()) == intersection_matrix_geometric(o));
  }
}

TEST_CASE("rank of E is bounded by the homological dimensions") {
  const auto o = fixtures::r0();
  const HomologyModel m(o);
  for (const auto& a : primitive_directions(2))
    for (const auto& b : primitive_directions(2)) {
      if (a.same_line(b)) continue;
      const auto da = direction_cylinders(o, a.p, a.q);
      const auto db = direction_cylinders(o, b.p, b.q);
      const auto r = static_cast<int>(rank(intersection_matrix(m, da, db)));
      CHECK(r <= std::min(homological_dimension(m, da), homological_dimension(m, db)));
    }
}

TEST_CASE("homological rank lower bound") {
  CHECK(homological_rank_lb(HomologyModel(Origami::torus()), 1).rank == 1);
  const HomologyModel m(fixtures::r0());
  const auto one = homological_rank_lb(m, 1);
  const auto three = homological_rank_lb(m, 3);
  CHECK(one.rank <= three.rank);
  CHECK(three.rank == 2);
  CHECK(static_cast<int>(rank(intersection_matrix(m, three.a, three.b))) == three.rank);
}

TEST_CASE("parabolic identities") {
  const auto t = parabolic_eigen_check(HomologyModel(Origami::torus()), Direction::horizontal(), Direction::vertical());
  CHECK(t.ok);
  CHECK(t.E == IntMatrix{{1}});
  CHECK(t.a == Rational(1));
  CHECK(t.b == Rational(1));
  CHECK(t.t == Rational(1));
  const auto r = parabolic_eigen_check(HomologyModel(fixtures::r0()), Direction::horizontal(), Direction::vertical());
  CHECK(r.ok);
  CHECK(r.a == Rational(4));
  CHECK(r.b == Rational(2));
  CHECK(r.t == Rational(8));
  CHECK(r.m == std::vector<std::int64_t>{1, 2});
  const auto s = parabolic_eigen_check(HomologyModel(fixtures::s0()), Direction::horizontal(), Direction::vertical());
  CHECK(s.ok);
  CHECK(s.t == Rational(4));
  const auto g = parabolic_eigen_check(HomologyModel(fixtures::r0()), Direction{1, 1}, Direction{-1, 2});
  CHECK(g.ok);
}

TEST_CASE("Poincare duals and the tautological plane") {
  const HomologyModel torus(Origami::torus());
  CHECK(poincare_dual(torus, horizontal_cylinders(Origami::torus())) == IntVector{1, 0});
  const auto o = fixtures::r0();
  const HomologyModel m(o);
  const auto hor = horizontal_cylinders(o);
  IntVector expect = waist_class(m, hor, 0);
  const auto second = waist_class(m, hor, 1);
  for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += second[k];
  CHECK(poincare_dual(m, hor) == expect);
  const auto plane = tautological_plane(m);
  // ⟨Σσ, Σζ⟩ counts one crossing per square.
  CHECK(plane.pairing == 6);
  const auto r4 = fixtures::r_family()[4];
  const HomologyModel m4(r4);
  const auto d4 = horizontal_cylinders(r4);
  CHECK(d4.cylinders.size() == 4);
  IntVector sum(6, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto w = waist_class(m4, d4, i);
    for (std::size_t k = 0; k < 6; ++k) sum[k] += w[k];
  }
  CHECK(poincare_dual(m4, d4) == sum);
}

TEST_CASE("chain maps of the moves") {
  const auto o = fixtures::r0();
  const HomologyModel src(o);
  const auto n = static_cast<std::size_t>(o.squares());
  // T sends the square relation r_i to r'_{h(i)}.
  const HomologyModel dst(t_move(o));
  const IntMatrix phi = move_chain_map(o, Move::T);
  for (int i = 1; i <= 6; ++i)
    CHECK(phi * src.boundary2().col(static_cast<std::size_t>(i - 1)) == dst.boundary2().col(static_cast<std::size_t>(o.h()(i) - 1)));
  // Each move followed by its inverse is the identity on chains.
  for (Move m : {Move::T, Move::T_inv, Move::J, Move::J_inv})
    CHECK(move_chain_map(apply_move(o, m), inverse(m)) * move_chain_map(o, m) == IntMatrix::identity(2 * n));
  IntMatrix j4 = IntMatrix::identity(2 * n);
  Origami x = o;
  for (int k = 0; k < 4; ++k) {
    j4 = move_chain_map(x, Move::J) * j4;
    x = j_move(x);
  }
  CHECK(j4 == IntMatrix::identity(2 * n));
}
