#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "origami/error.hpp"
#include "origami/spectrum.hpp"

using namespace origami;

namespace {

CoveringMap r0_over_s0() { return CoveringMap{fixtures::s0(), fixtures::r0(), {1, 2, 1, 2, 3, 3}, 2}; }

std::int64_t gcd_all(const CyclicCoverSpec& s) {
  std::int64_t g = s.N;
  for (auto x : s.a) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST_CASE("R0 covers S0") {
  const auto c = r0_over_s0();
  CHECK(verify_covering(c).ok);
  CHECK(is_unramified(c));
  CHECK(stratum(c.base).name() == "H(2)");
  CHECK(stratum(c.cover).name() == "H(2,2)");
  CHECK(inherited_exponents(c) == std::vector<Rational>{Rational(1), Rational(1, 3)});
  auto bad = c;
  bad.proj[4] = 1;
  const auto check = verify_covering(bad);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.reason.empty());
  CHECK_THROWS_AS(is_unramified(bad), Error);
  CHECK_THROWS_AS(inherited_exponents(bad), Error);
}

TEST_CASE("cyclic covers") {
  const auto c = cyclic_cover(fixtures::s0(), {0, 1, 1}, {0, 0, 0}, 2);
  CHECK(verify_covering(c).ok);
  CHECK(c.cover.canonical() == fixtures::r0().canonical());
  CHECK(is_unramified(c));

  try {
    cyclic_cover(fixtures::s0(), {0, 0, 0}, {0, 0, 0}, 2);
    FAIL("expected a disconnected cover");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::disconnected_cover);
    CHECK(std::string(e.what()).find("{1,2,3} {4,5,6}") != std::string::npos);
  }

  const auto t = cyclic_cover(Origami::torus(), {1}, {0}, 2);
  CHECK(t.cover.squares() == 2);
  CHECK(verify_covering(t).ok);
  CHECK(is_unramified(t));
  CHECK(inherited_exponents(t) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("cyclic covers of the L are unramified") {
  // S0 has one vertex, so every edge is a loop and the holonomy around the
  // vertex cancels: the cone point lifts to two cone points of angle 6π.
  const auto c = cyclic_cover(fixtures::s0(), {1, 0, 0}, {0, 0, 0}, 2);
  CHECK(verify_covering(c).ok);
  CHECK(is_unramified(c));
  CHECK(vertex_cycles(c.cover).size() == 2);
  CHECK(stratum(c.cover).name() == "H(2,2)");
  const auto d = cyclic_cover(fixtures::s0(), {1, 0, 0}, {0, 1, 0}, 3);
  CHECK(is_unramified(d));
  CHECK(vertex_cycles(d.cover).size() == 3);
}

TEST_CASE("eigenspace dimensions") {
  const auto m3 = mq_spec(3);
  CHECK(m3.N == 6);
  CHECK(m3.a == std::array<std::int64_t, 4>{1, 1, 1, 3});
  CHECK(dim_V10(m3, 3) == 1);
  CHECK(dim_V10(m3, 1) == 2);
  CHECK(genus_from_dims(m3) == 4);
  // The two conventions are related by k = N − j.
  for (std::int64_t j = 1; j < 6; ++j) CHECK(dim_V10(m3, j, DimConvention::direct) == dim_V10(m3, 6 - j, DimConvention::as_printed));
  const auto m5 = mq_spec(5);
  CHECK(m5.a == std::array<std::int64_t, 4>{1, 1, 3, 5});
  CHECK(genus_from_dims(m5) == 7);
  CHECK(riemann_hurwitz_genus(m5) == 7);
  CHECK_THROWS_AS(dim_V10(m5, 0), Error);
  CHECK_THROWS_AS(dim_V10(m5, 10), Error);
  CHECK_THROWS_AS(mq_spec(4), Error);
  CHECK_THROWS_AS(mq_spec(1), Error);
  CHECK_THROWS_AS(validate(CyclicCoverSpec{6, {1, 1, 1, 1}}), Error);
  CHECK_THROWS_AS(validate(CyclicCoverSpec{6, {2, 2, 4, 4}}), Error);
}

TEST_CASE("positive exponents of M_q") {
  const auto p3 = positive_exponent_count(mq_spec(3));
  CHECK(p3.distinct_count() == 1);
  CHECK(p3.values == std::vector<Rational>{Rational(1)});
  const auto p5 = positive_exponent_count(mq_spec(5));
  CHECK(p5.qualifying == std::vector<std::int64_t>{3, 5, 7});
  CHECK(p5.values == std::vector<Rational>{Rational(1), Rational(3, 5), Rational(3, 5)});
  CHECK(p5.distinct_count() == 2);
  CHECK(p5.distinct.at(Rational(3, 5)) == 2);
  const auto p9 = positive_exponent_count(mq_spec(9));
  CHECK(p9.distinct_count() == 3);
  CHECK(p9.distinct.count(Rational(5, 9)) == 1);
  CHECK(p9.distinct.count(Rational(7, 9)) == 1);
  CHECK(positive_exponent_count(mq_spec(7)).distinct_count() == 2);
  for (std::int64_t qv = 3; qv <= 21; qv += 2) {
    const auto s = mq_spec(qv);
    CHECK(genus_from_dims(s) == (3 * qv - 1) / 2);
    std::vector<std::int64_t> expect;
    for (std::int64_t k = 1; k < 2 * qv; k += 2)
      if (2 * k > qv && 2 * k < 3 * qv) expect.push_back(k);
    CHECK(positive_exponent_count(s).qualifying == expect);
    // Distinct values: 1 + #{1 ≤ j < q/4}.
    int small = 0;
    for (std::int64_t j = 1; 4 * j < qv; ++j) ++small;
    CHECK(positive_exponent_count(s).distinct_count() == 1 + small);
  }
}

TEST_CASE("eigenspace dimensions against Riemann-Hurwitz on random specs") {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 50) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 40)(rng);
    std::uniform_int_distribution<std::int64_t> pick(1, n - 1);
    CyclicCoverSpec s{n, {pick(rng), pick(rng), pick(rng), 0}};
    const std::int64_t rest = ((-(s.a[0] + s.a[1] + s.a[2])) % n + n) % n;
    if (rest == 0) continue;
    s.a[3] = rest;
    if (gcd_all(s) != 1) continue;
    ++tested;
    CHECK(genus_from_dims(s) == riemann_hurwitz_genus(s));
    for (std::int64_t k = 1; k < n; ++k) {
      bool degenerate = false;
      for (auto x : s.a) degenerate |= (k * x) % n == 0;
      if (!degenerate) CHECK(dim_V10(s, k) + dim_V10(s, n - k) == 2);
      CHECK(cyclic_exponent(s, k) == cyclic_exponent(s, n - k));
      CHECK(cyclic_exponent(s, k) > Rational(0));
      CHECK((cyclic_exponent(s, k) == Rational(1)) == (2 * k == n));
    }
  }
}
