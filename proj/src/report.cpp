#include "origami/report.hpp"

#include <algorithm>

#include "origami/error.hpp"

namespace origami::report {

using nlohmann::json;

json rational(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal(10)}}; }

json rationals(const std::vector<Rational>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(rational(r));
  return out;
}

Rational rational_from_json(const json& j) {
  try {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::validation_failed, std::string("rational json: ") + e.what());
  }
}

json matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

json analyze(const Origami& o) {
  const Stratum s = stratum(o);
  const auto hor = horizontal_cylinders(o);
  const auto ver = vertical_cylinders(o);
  return json{{"origami", to_json(o)},
              {"squares", o.squares()},
              {"stratum", s.name()},
              {"zero_orders", s.zero_orders},
              {"genus", s.genus},
              {"vertices", vertex_cycles(o)},
              {"horizontal_cylinders", hor.cylinders.size()},
              {"vertical_cylinders", ver.cylinders.size()},
              {"canonical", to_json(o.canonical())}};
}

json cylinders(const CylinderDecomposition& d) {
  json cyls = json::array();
  for (const auto& c : d.cylinders)
    cyls.push_back({{"rows", c.rows}, {"width", c.width}, {"height", c.height}, {"modulus", rational(c.modulus)}});
  return json{{"direction", {d.direction.p, d.direction.q}},
              {"frame", to_string(d.frame)},
              {"cylinders", cyls},
              {"modulus_sum", rational(d.modulus_sum())},
              {"area", d.area()}};
}

json ekz(const EkzBreakdown& b) {
  json cusps = json::array();
  std::vector<int> sizes;
  for (const auto& c : b.cusps) {
    cusps.push_back({{"size", c.size}, {"contribution", rational(c.contribution)}});
    sizes.push_back(static_cast<int>(c.size));
  }
  return json{{"stratum", b.stratum.name()},       {"orbit_size", b.orbit_size},
              {"cusp_sizes", sizes},               {"cusps", cusps},
              {"zero_order_term", rational(b.zero_order)}, {"cylinder_average", rational(b.cylinder_average)},
              {"sum", rational(b.sum)}};
}

json exponents(const ExponentReport& r) {
  json list = json::array();
  for (const auto& e : r.exponents) list.push_back({{"value", rational(e.value)}, {"provenance", to_string(e.provenance)}});
  json out{{"exponents", list}, {"sum", rational(r.sum)}};
  out["deduced"] = r.deduced ? rational(*r.deduced) : json(nullptr);
  return out;
}

json parabolic(const ParabolicReport& r) {
  return json{{"E", matrix(r.E)},     {"x", rationals(r.x)},   {"y", rationals(r.y)},     {"xi", rationals(r.xi)},
              {"eta", rationals(r.eta)}, {"m", r.m},            {"n", r.n},                {"a", rational(r.a)},
              {"b", rational(r.b)},   {"t", rational(r.t)},    {"ok", r.ok},              {"failure", r.failure}};
}

json cyclic(const CyclicCoverSpec& s) {
  validate(s);
  json dims = json::array();
  for (std::int64_t j = 1; j < s.N; ++j) dims.push_back({{"k", j}, {"dim", dim_V10(s, j)}});
  const auto pos = positive_exponent_count(s);
  json distinct = json::array();
  for (auto it = pos.distinct.rbegin(); it != pos.distinct.rend(); ++it)
    distinct.push_back({{"value", rational(it->first)}, {"multiplicity", it->second}});
  return json{{"N", s.N},
              {"a", s.a},
              {"genus", genus_from_dims(s)},
              {"riemann_hurwitz_genus", riemann_hurwitz_genus(s)},
              {"dims", dims},
              {"qualifying_k", pos.qualifying},
              {"values", rationals(pos.values)},
              {"with_multiplicity", pos.with_multiplicity()},
              {"distinct_values", distinct},
              {"distinct_count", pos.distinct_count()}};
}

json lyapunov(const LyapunovEstimate& e, const WalkConfig& cfg) {
  return json{{"estimates", e.estimates},
              {"stderr", e.stderrs},
              {"full_spectrum", e.full_spectrum},
              {"base_rate", e.base_rate},
              {"kernel", e.kernel},
              {"config",
               {{"steps", cfg.steps},
                {"trajectories", cfg.trajectories},
                {"seed", cfg.seed},
                {"digit_cap", cfg.digit_cap},
                {"renorm_interval", cfg.renorm_interval}}}};
}

std::vector<int> sorted_cusp_sizes(const OrbitGraph& g) {
  auto sizes = g.cusp_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::string bracket_list(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

}  // namespace origami::report
