#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "origami/error.hpp"
#include "origami/kernels.hpp"
#include "origami/lyapunov.hpp"

using namespace origami;

TEST_CASE("torus edge maps") {
  const auto t = t_chain_map(Origami::torus());
  CHECK(t.h1 == IntMatrix{{1, 1}, {0, 1}});
  const auto j = j_chain_map(Origami::torus());
  CHECK(j.h1 == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("edge maps validate on random origamis") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    std::vector<int> hi(static_cast<std::size_t>(2 + k % 7));
    const auto o = [&] {
      while (true) {
        auto h = Permutation::random(2 + k % 7, rng), v = Permutation::random(2 + k % 7, rng);
        if (is_transitive(h, v)) return Origami(h, v);
      }
    }();
    CHECK_NOTHROW(t_chain_map(o));
    CHECK_NOTHROW(j_chain_map(o));
  }
}

TEST_CASE("a wrong chain map is rejected") {
  // Pretend the T move was J: the relabel check catches it.
  const HomologyModel a(fixtures::r0());
  const HomologyModel b(t_move(fixtures::r0()));
  CHECK_THROWS_AS(edge_homology_map(a, b, Move::J, Permutation::identity(6)), Error);
}

TEST_CASE("orbit cocycle of R0") {
  const auto g = orbit(fixtures::r0());
  const auto c = build_cocycle(g);
  CHECK(c.genus == 3);
  CHECK(c.edges.size() == 36);
  // Going around a cusp and J⁴ return to the start node; the composite acts
  // on homology as an automorphism preserving the form.
  for (std::size_t x = 0; x < g.size(); ++x) {
    IntMatrix prod = IntMatrix::identity(6);
    int node = static_cast<int>(x);
    for (int k = 0; k < 4; ++k) {
      const auto& e = c.edges[static_cast<std::size_t>(node) * 4 + static_cast<std::size_t>(Move::J)];
      prod = e.h1 * prod;
      node = e.to;
    }
    CHECK(node == static_cast<int>(x));
    CHECK(prod.transpose() * c.models[x].gram() * prod == c.models[x].gram());
  }
}

TEST_CASE("kernels agree with the scalar reference") {
  if (!kernels::avx2_supported()) return;
  const auto& s = kernels::scalar_kernels();
  const auto& v = kernels::avx2_kernels();
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (std::size_t n = 1; n <= 17; ++n) {
    std::vector<double> a(n * n), x(n * n), y1(n * n), y2(n * n);
    for (auto& e : a) e = gauss(rng);
    for (auto& e : x) e = gauss(rng);
    s.matmul(a.data(), x.data(), y1.data(), n);
    v.matmul(a.data(), x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n * n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-12));
    CHECK(s.dot(a.data(), x.data(), n) == doctest::Approx(v.dot(a.data(), x.data(), n)).epsilon(1e-12));
    auto z1 = x, z2 = x;
    s.axpy(0.37, a.data(), z1.data(), n);
    v.axpy(0.37, a.data(), z2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(z1[i] == doctest::Approx(z2[i]).epsilon(1e-12));
    s.scale(-1.5, z1.data(), n);
    v.scale(-1.5, z2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(z1[i] == doctest::Approx(z2[i]).epsilon(1e-12));
  }
}

TEST_CASE("short walks") {
  WalkConfig cfg;
  cfg.steps = 20'000;
  cfg.trajectories = 4;
  const auto torus = estimate_exponents(orbit(Origami::torus()), cfg);
  REQUIRE(torus.estimates.size() == 1);
  CHECK(std::abs(torus.estimates[0] - 1.0) < 0.02);
  // Base growth per Gauss step is π²/(12 log 2) ≈ 1.1866.
  CHECK(std::abs(torus.base_rate - 1.1866) < 0.05);

  const auto l = estimate_exponents(orbit(fixtures::s0()), cfg);
  REQUIRE(l.estimates.size() == 2);
  CHECK(std::abs(l.estimates[0] - 1.0) < 0.02);
  CHECK(std::abs(l.estimates[1] - 1.0 / 3.0) < 0.05);
  // Symplectic symmetry of the full spectrum.
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(l.full_spectrum[i] + l.full_spectrum[3 - i]) < 0.05);

  const auto again = estimate_exponents(orbit(fixtures::s0()), cfg);
  CHECK(again.estimates == l.estimates);
  cfg.seed = 2;
  CHECK(estimate_exponents(orbit(fixtures::s0()), cfg).estimates != l.estimates);
}

TEST_CASE("walk configuration is validated") {
  WalkConfig cfg;
  cfg.steps = 0;
  CHECK_THROWS_AS(estimate_exponents(orbit(Origami::torus()), cfg), Error);
}
