#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "origami/error.hpp"
#include "origami/permutation.hpp"
#include "random_origami.hpp"

using namespace origami;

TEST_CASE("compose applies the right factor first") {
  const auto h = Permutation::parse_cycles("(1,2,3,4)(5,6)");
  const auto v = Permutation::parse_cycles("(1,5)(2)(3,6)(4)");
  CHECK(compose(v, h.inverse()) == Permutation::parse_cycles("(1,4,6)(2,5,3)"));
  CHECK(compose(Permutation::identity(6), h) == h);
  CHECK(compose(h, h.inverse()).is_identity());
  CHECK_THROWS_AS(compose(h, Permutation::identity(5)), Error);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto p = Permutation::random(9, rng), q = Permutation::random(9, rng), r = Permutation::random(9, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("cycles are listed min-first and include fixed points") {
  using C = std::vector<std::vector<int>>;
  CHECK(Permutation::parse_cycles("(1,2)(3)").cycles() == C{{1, 2}, {3}});
  CHECK(Permutation::identity(3).cycles() == C{{1}, {2}, {3}});
  CHECK(Permutation::parse_cycles("(1,4,6)(2,5,3)").cycles() == C{{1, 4, 6}, {2, 5, 3}});
  CHECK(Permutation::parse_cycles("(3,1)(2)").to_cycle_string() == "(1,3)(2)");
}

TEST_CASE("cycle parsing errors carry distinct codes") {
  auto code_of = [](const std::string& text, int n) {
    try {
      Permutation::parse_cycles(text, n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code_of("(1,2", 0) == ErrorCode::malformed_cycles);
  CHECK(code_of("(1,x)", 0) == ErrorCode::malformed_cycles);
  CHECK(code_of("(1,2)(2,3)", 0) == ErrorCode::not_a_bijection);
  CHECK(code_of("(1,5)", 3) == ErrorCode::label_out_of_range);
  CHECK(code_of("(0,1)", 0) == ErrorCode::label_out_of_range);
}

TEST_CASE("canonical pair of the torus is trivial") {
  const auto c = canonical_pair(Permutation::identity(1), Permutation::identity(1));
  CHECK(c.h.is_identity());
  CHECK(c.v.is_identity());
  CHECK(c.relabel.is_identity());
}

TEST_CASE("canonical pair returns the conjugate it claims") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto o = fixtures::random_origami(1 + t % 9, rng);
    const auto c = canonical_pair(o.h(), o.v());
    CHECK(conjugate(o.h(), c.relabel) == c.h);
    CHECK(conjugate(o.v(), c.relabel) == c.v);
    const auto again = canonical_pair(c.h, c.v);
    CHECK(again.h == c.h);
    CHECK(again.v == c.v);
  }
}

TEST_CASE("canonical pair rejects intransitive input") {
  CHECK_THROWS_AS(canonical_pair(Permutation::parse_cycles("(1,2)(3)"), Permutation::identity(3)), Error);
}

// Oracle: try every relabeling of six squares.
static bool conjugate_by_brute_force(const Origami& a, const Origami& b) {
  std::vector<int> img(6);
  std::iota(img.begin(), img.end(), 1);
  do {
    if (a.conjugated(Permutation(img)) == b) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

TEST_CASE("R0 and R4 are not simultaneously conjugate") {
  const auto r = fixtures::r_family();
  CHECK_FALSE(conjugate_by_brute_force(r[0], r[4]));
  CHECK_FALSE(r[0].canonical() == r[4].canonical());
  const auto phi = Permutation::parse_cycles("(1,3,5)(2,6)");
  CHECK(conjugate_by_brute_force(r[0], r[0].conjugated(phi)));
}

TEST_CASE("canonical form agrees with brute-force conjugacy on six squares") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto a = fixtures::random_origami(6, rng);
    const auto b = fixtures::random_origami(6, rng);
    CHECK((a.canonical() == b.canonical()) == conjugate_by_brute_force(a, b));
  }
}
