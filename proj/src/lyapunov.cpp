#include "origami/lyapunov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "origami/error.hpp"
#include "origami/kernels.hpp"

namespace origami {

namespace {

bool is_zero(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

IntVector all_sigma(const HomologyModel& m) {
  IntVector c = m.zero_chain();
  for (int i = 1; i <= m.squares(); ++i) c[m.sigma_index(i)] = 1;
  return c;
}

IntVector all_zeta(const HomologyModel& m) {
  IntVector c = m.zero_chain();
  for (int i = 1; i <= m.squares(); ++i) c[m.zeta_index(i)] = 1;
  return c;
}

IntVector combine(std::int64_t x, const IntVector& u, std::int64_t y, const IntVector& w) {
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = x * u[i] + y * w[i];
  return out;
}

void fail(const std::string& what, Move m) {
  throw Error(ErrorCode::validation_failed, std::string("edge map for ") + move_name(m) + ": " + what);
}

}  // namespace

EdgeHomologyMap edge_homology_map(const HomologyModel& source, const HomologyModel& target, Move m, const Permutation& relabel) {
  if (!(apply_move(source.origami(), m).conjugated(relabel) == target.origami())) fail("target is not the relabelled image", m);
  EdgeHomologyMap out;
  out.move = m;
  out.chain = relabel_chain_map(relabel) * move_chain_map(source.origami(), m);

  if (!is_zero(target.boundary1() * (out.chain * source.boundary2()))) fail("square relations do not map to boundaries", m);
  if (!is_zero(target.cocycles() * (out.chain * source.boundary2()))) fail("square relations do not map to boundaries", m);
  const IntMatrix loops = from_columns(source.basis(), 2 * static_cast<std::size_t>(source.squares()));
  const IntMatrix image = out.chain * loops;
  if (!is_zero(target.boundary1() * image)) fail("cycles do not map to cycles", m);
  out.h1 = target.cocycles() * image;
  if (!(out.h1.transpose() * target.gram() * out.h1 == source.gram())) fail("intersection form not preserved", m);

  const Mat2 a = matrix_of(m);
  const IntVector th = target.coordinates(all_sigma(target));
  const IntVector tv = target.coordinates(all_zeta(target));
  if (target.cocycles() * (out.chain * all_sigma(source)) != combine(a.a, th, a.c, tv) ||
      target.cocycles() * (out.chain * all_zeta(source)) != combine(a.b, th, a.d, tv))
    fail("tautological plane not acted on by the move matrix", m);
  return out;
}

EdgeHomologyMap t_chain_map(const Origami& o) {
  const Permutation id = Permutation::identity(o.squares());
  return edge_homology_map(HomologyModel(o), HomologyModel(t_move(o)), Move::T, id);
}

EdgeHomologyMap j_chain_map(const Origami& o) {
  const Permutation id = Permutation::identity(o.squares());
  return edge_homology_map(HomologyModel(o), HomologyModel(j_move(o)), Move::J, id);
}

OrbitCocycle build_cocycle(const OrbitGraph& g) {
  OrbitCocycle out;
  out.models.reserve(g.size());
  for (const auto& o : g.nodes) out.models.emplace_back(o);
  out.genus = out.models.front().genus();
  for (const auto& e : g.edges) {
    auto map = edge_homology_map(out.models[static_cast<std::size_t>(e.from)], out.models[static_cast<std::size_t>(e.to)], e.move, e.relabel);
    map.from = e.from;
    map.to = e.to;
    out.edges.push_back(std::move(map));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Dense = std::vector<double>;  // column-major n × n

Dense to_dense(const IntMatrix& m) {
  const std::size_t n = m.rows();
  Dense d(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) d[c * n + r] = static_cast<double>(m(r, c));
  return d;
}

// Precomputed walk tables: dense edge matrices and, per node and direction,
// the powers P^(2^k) of the full cusp loop.
struct WalkTables {
  std::size_t n = 0;
  std::vector<Dense> edge;
  std::vector<std::vector<Dense>> loop_pow;  // index node·2 + (0 for T, 1 for T⁻¹)
  std::vector<int> cusp_len;
};

WalkTables make_tables(const OrbitGraph& g, const OrbitCocycle& cocycle, std::uint64_t digit_cap, const kernels::KernelSet& k) {
  WalkTables t;
  t.n = static_cast<std::size_t>(2 * cocycle.genus);
  const std::size_t n = t.n;
  for (const auto& e : cocycle.edges) t.edge.push_back(to_dense(e.h1));
  const auto cusp_of = g.cusp_of();
  t.cusp_len.resize(g.size());
  t.loop_pow.resize(2 * g.size());
  Dense tmp(n * n);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const int c = static_cast<int>(g.cusps[static_cast<std::size_t>(cusp_of[x])].size());
    t.cusp_len[x] = c;
    const std::uint64_t max_q = digit_cap / static_cast<std::uint64_t>(c);
    const int levels = max_q == 0 ? 0 : std::bit_width(max_q);
    for (int dir = 0; dir < 2; ++dir) {
      const Move m = dir == 0 ? Move::T : Move::T_inv;
      Dense p(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1.0;
      int node = static_cast<int>(x);
      for (int s = 0; s < c; ++s) {
        const std::size_t slot = static_cast<std::size_t>(node) * 4 + static_cast<std::size_t>(m);
        k.matmul(t.edge[slot].data(), p.data(), tmp.data(), n);
        std::swap(p, tmp);
        node = g.edges[slot].to;
      }
      if (node != static_cast<int>(x)) throw Error(ErrorCode::internal, "cusp loop does not close");
      auto& pows = t.loop_pow[2 * x + static_cast<std::size_t>(dir)];
      if (levels > 0) pows.push_back(p);
      for (int lv = 1; lv < levels; ++lv) {
        k.matmul(pows.back().data(), pows.back().data(), tmp.data(), n);
        pows.push_back(tmp);
      }
    }
  }
  return t;
}

struct Trajectory {
  std::vector<double> rates;  // per frame column, per digit
  double base_rate = 0.0;
};

Trajectory run_trajectory(const OrbitGraph& g, const WalkTables& t, const WalkConfig& cfg, std::uint64_t seed,
                          const kernels::KernelSet& k) {
  const std::size_t n = t.n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto fresh = [&] {
    double u = 0.0;
    while (u <= 0.0) u = unit(rng);
    return u;
  };

  int node = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
  Dense frame(n * n, 0.0), tmp(n * n);
  for (std::size_t i = 0; i < n; ++i) frame[i * n + i] = 1.0;
  std::vector<double> logs(n, 0.0);
  double base_log = 0.0;
  double bu = 1.0 / std::sqrt(2.0), bv = bu;

  auto apply = [&](const Dense& m) {
    k.matmul(m.data(), frame.data(), tmp.data(), n);
    std::swap(frame, tmp);
  };
  auto step = [&](Move m) {
    const std::size_t slot = static_cast<std::size_t>(node) * 4 + static_cast<std::size_t>(m);
    apply(t.edge[slot]);
    node = g.edges[slot].to;
  };
  auto power = [&](Move m, std::uint64_t a) {
    const auto c = static_cast<std::uint64_t>(t.cusp_len[static_cast<std::size_t>(node)]);
    std::uint64_t q = a / c;
    const auto& pows = t.loop_pow[2 * static_cast<std::size_t>(node) + (m == Move::T ? 0 : 1)];
    for (std::size_t lv = 0; q != 0; ++lv, q >>= 1)
      if (q & 1) apply(pows[lv]);
    for (std::uint64_t r = 0; r < a % c; ++r) step(m);
  };
  auto renormalize = [&] {
    for (std::size_t j = 0; j < n; ++j) {
      double* col = frame.data() + j * n;
      for (std::size_t i = 0; i < j; ++i) {
        const double* prev = frame.data() + i * n;
        k.axpy(-k.dot(prev, col, n), prev, col, n);
      }
      const double norm = std::sqrt(k.dot(col, col, n));
      logs[j] += std::log(norm);
      k.scale(1.0 / norm, col, n);
    }
  };

  // Frame growth since the last renormalization is bounded by Σ 2·log(1 + a);
  // renormalize early once that could reach 10⁸.
  const double growth_guard = std::log(1e8);
  double growth = 0.0;
  std::uint64_t since = 0;
  double x = fresh();
  for (std::uint64_t s = 0; s < cfg.steps; ++s) {
    const double inv = 1.0 / x;
    std::uint64_t a;
    if (!std::isfinite(inv) || inv >= static_cast<double>(cfg.digit_cap) + 1.0) {
      a = cfg.digit_cap;
      x = fresh();
    } else {
      a = static_cast<std::uint64_t>(inv);
      // Gauss map with rounding-level random jitter so the floating-point
      // orbit cannot settle on a cycle.
      x = (inv - static_cast<double>(a)) * (1.0 + 0x1p-40 * (unit(rng) - 0.5));
      if (!(x > 0.0 && x < 1.0)) x = fresh();
    }
    const double ad = static_cast<double>(a);
    if (s % 2 == 0) {
      power(Move::T, a);
      bu += ad * bv;
    } else {
      step(Move::J);
      power(Move::T_inv, a);
      step(Move::J_inv);
      bv += ad * bu;
    }
    const double bn = std::hypot(bu, bv);
    base_log += std::log(bn);
    bu /= bn;
    bv /= bn;

    growth += 2.0 * std::log1p(ad);
    if (++since >= cfg.renorm_interval || growth >= growth_guard) {
      renormalize();
      since = 0;
      growth = 0.0;
    }
  }
  if (since > 0) renormalize();

  Trajectory out;
  const double steps = static_cast<double>(cfg.steps);
  for (double l : logs) out.rates.push_back(l / steps);
  out.base_rate = base_log / steps;
  return out;
}

}  // namespace

LyapunovEstimate estimate_exponents(const OrbitGraph& g, const OrbitCocycle& cocycle, const WalkConfig& cfg) {
  if (cfg.steps < 2 || cfg.trajectories < 1 || cfg.renorm_interval < 1 || cfg.digit_cap < 1)
    throw Error(ErrorCode::invalid_argument, "lyapunov: steps >= 2 and positive trajectories, renorm interval and digit cap required");
  if (cocycle.edges.size() != g.edges.size()) throw Error(ErrorCode::invalid_argument, "lyapunov: cocycle does not match the orbit graph");
  const auto& k = kernels::active_kernels();
  const WalkTables tables = make_tables(g, cocycle, cfg.digit_cap, k);
  const std::size_t n = tables.n;
  const std::size_t genus = n / 2;

  LyapunovEstimate out;
  out.kernel = k.name;
  std::vector<double> full_sum(n, 0.0);
  double base_sum = 0.0;
  for (std::uint64_t tr = 0; tr < cfg.trajectories; ++tr) {
    const Trajectory run = run_trajectory(g, tables, cfg, splitmix64(cfg.seed ^ splitmix64(tr + 1)), k);
    if (!(run.base_rate > 0.0)) throw Error(ErrorCode::internal, "lyapunov: base product did not grow");
    std::vector<double> normalized;
    for (double r : run.rates) normalized.push_back(r / run.base_rate);
    std::sort(normalized.begin(), normalized.end(), std::greater<>());
    for (std::size_t i = 0; i < n; ++i) full_sum[i] += normalized[i];
    base_sum += run.base_rate;
    out.per_trajectory.emplace_back(normalized.begin(), normalized.begin() + static_cast<std::ptrdiff_t>(genus));
  }
  const double count = static_cast<double>(cfg.trajectories);
  for (double s : full_sum) out.full_spectrum.push_back(s / count);
  out.base_rate = base_sum / count;
  for (std::size_t i = 0; i < genus; ++i) {
    double mean = 0.0;
    for (const auto& tr : out.per_trajectory) mean += tr[i];
    mean /= count;
    double var = 0.0;
    for (const auto& tr : out.per_trajectory) var += (tr[i] - mean) * (tr[i] - mean);
    out.estimates.push_back(mean);
    out.stderrs.push_back(cfg.trajectories > 1 ? std::sqrt(var / (count - 1.0) / count) : 0.0);
  }
  return out;
}

LyapunovEstimate estimate_exponents(const OrbitGraph& g, const WalkConfig& cfg) {
  return estimate_exponents(g, build_cocycle(g), cfg);
}

}  // namespace origami
