#include "origami/covers.hpp"

#include <algorithm>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

CoverCheck verify_covering(const CoveringMap& c) {
  const int n = c.base.squares();
  const int m = c.cover.squares();
  if (c.degree < 1 || m != n * c.degree) return {false, "cover size is not degree × base size"};
  if (static_cast<int>(c.proj.size()) != m) return {false, "projection has the wrong length"};
  std::vector<int> fibre(static_cast<std::size_t>(n) + 1, 0);
  for (int x : c.proj) {
    if (x < 1 || x > n) return {false, "projection leaves the base"};
    ++fibre[static_cast<std::size_t>(x)];
  }
  for (int i = 1; i <= n; ++i)
    if (fibre[static_cast<std::size_t>(i)] != c.degree) return {false, "fibre over square " + std::to_string(i) + " has the wrong size"};
  auto p = [&](int i) { return c.proj[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= m; ++i) {
    if (p(c.cover.h()(i)) != c.base.h()(p(i))) return {false, "proj∘h ≠ h∘proj at square " + std::to_string(i)};
    if (p(c.cover.v()(i)) != c.base.v()(p(i))) return {false, "proj∘v ≠ v∘proj at square " + std::to_string(i)};
  }
  return {true, ""};
}

bool is_unramified(const CoveringMap& c) {
  const auto check = verify_covering(c);
  if (!check.ok) throw Error(ErrorCode::not_a_covering, "not a covering: " + check.reason);
  std::vector<std::size_t> base_len(static_cast<std::size_t>(c.base.squares()) + 1, 0);
  for (const auto& cyc : vertex_cycles(c.base))
    for (int s : cyc) base_len[static_cast<std::size_t>(s)] = cyc.size();
  for (const auto& cyc : vertex_cycles(c.cover))
    if (cyc.size() != base_len[static_cast<std::size_t>(c.proj[static_cast<std::size_t>(cyc.front() - 1)])]) return false;
  return true;
}

CoveringMap cyclic_cover(const Origami& base, const std::vector<int>& incr_h, const std::vector<int>& incr_v, int d) {
  const int n = base.squares();
  if (d < 2) throw Error(ErrorCode::invalid_argument, "cyclic cover degree must be at least 2");
  if (static_cast<int>(incr_h.size()) != n || static_cast<int>(incr_v.size()) != n)
    throw Error(ErrorCode::size_mismatch, "increment arrays must have one entry per base square");
  const int m = n * d;
  auto mod = [d](int x) { return ((x % d) + d) % d; };
  std::vector<int> h(static_cast<std::size_t>(m)), v(static_cast<std::size_t>(m)), proj(static_cast<std::size_t>(m));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < n; ++i) {
      const auto at = static_cast<std::size_t>(i + k * n);
      h[at] = base.h().at0(i) + mod(k + incr_h[static_cast<std::size_t>(i)]) * n;
      v[at] = base.v().at0(i) + mod(k + incr_v[static_cast<std::size_t>(i)]) * n;
      proj[at] = i + 1;
    }
  const Permutation ph = Permutation::from_zero_based(h);
  const Permutation pv = Permutation::from_zero_based(v);
  if (!is_transitive(ph, pv)) {
    std::vector<int> comp(static_cast<std::size_t>(m), -1);
    std::string parts;
    int count = 0;
    for (int s = 0; s < m; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> stack{s}, members;
      comp[static_cast<std::size_t>(s)] = count;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        members.push_back(x + 1);
        for (int y : {ph.at0(x), pv.at0(x)})
          if (comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = count;
            stack.push_back(y);
          }
      }
      std::sort(members.begin(), members.end());
      parts += " {";
      for (std::size_t t = 0; t < members.size(); ++t) parts += (t ? "," : "") + std::to_string(members[t]);
      parts += "}";
      ++count;
    }
    throw Error(ErrorCode::disconnected_cover, "cyclic cover is disconnected:" + parts);
  }
  return CoveringMap{base, Origami(ph, pv), std::move(proj), d};
}

void validate(const CyclicCoverSpec& s) {
  if (s.N < 2) throw Error(ErrorCode::invalid_argument, "cyclic cover: N must be at least 2");
  std::int64_t sum = 0, g = s.N;
  for (auto x : s.a) {
    if (x <= 0 || x >= s.N) throw Error(ErrorCode::invalid_argument, "cyclic cover: exponents must satisfy 0 < a < N");
    sum += x;
    g = std::gcd(g, x);
  }
  if (sum % s.N != 0) throw Error(ErrorCode::invalid_argument, "cyclic cover: exponents must sum to 0 mod N");
  if (g != 1) throw Error(ErrorCode::invalid_argument, "cyclic cover: gcd(N, a) must be 1");
}

int dim_V10(const CyclicCoverSpec& s, std::int64_t j, DimConvention convention) {
  validate(s);
  if (j < 1 || j >= s.N) throw Error(ErrorCode::invalid_argument, "cyclic cover: index out of range 1..N-1");
  const std::int64_t k = convention == DimConvention::direct ? s.N - j : j;
  Rational total(-1);
  for (auto x : s.a) total += Rational(k * x, s.N).frac();
  if (!total.is_integer() || total < Rational(0)) throw Error(ErrorCode::internal, "cyclic cover: non-integral eigenspace dimension");
  return static_cast<int>(total.num());
}

int genus_from_dims(const CyclicCoverSpec& s) {
  int g = 0;
  for (std::int64_t j = 1; j < s.N; ++j) g += dim_V10(s, j);
  return g;
}

int riemann_hurwitz_genus(const CyclicCoverSpec& s) {
  validate(s);
  std::int64_t ramification = 0;
  for (auto x : s.a) ramification += s.N - std::gcd(x, s.N);
  const std::int64_t twice = ramification - 2 * s.N + 2;
  if (twice % 2 != 0) throw Error(ErrorCode::internal, "Riemann-Hurwitz: odd Euler characteristic");
  return static_cast<int>(twice / 2);
}

Rational cyclic_exponent(const CyclicCoverSpec& s, std::int64_t k) {
  const Rational f = Rational(k, s.N).frac();
  return Rational(2) * std::min(f, Rational(1) - f);
}

PositiveExponents positive_exponent_count(const CyclicCoverSpec& s) {
  if (genus_from_dims(s) != riemann_hurwitz_genus(s))
    throw Error(ErrorCode::internal, "cyclic cover: eigenspace dimensions disagree with Riemann-Hurwitz");
  PositiveExponents out;
  for (std::int64_t k = 1; k < s.N; ++k)
    if (dim_V10(s, k) == 1 && dim_V10(s, s.N - k) == 1) {
      out.qualifying.push_back(k);
      const Rational value = cyclic_exponent(s, k);
      out.values.push_back(value);
      ++out.distinct[value];
    }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

CyclicCoverSpec mq_spec(std::int64_t q) {
  if (q < 3 || q % 2 == 0) throw Error(ErrorCode::invalid_argument, "M_q needs an odd q >= 3");
  CyclicCoverSpec s{2 * q, {1, 1, q - 2, q}};
  validate(s);
  return s;
}

}  // namespace origami
