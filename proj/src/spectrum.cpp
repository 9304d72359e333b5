#include "origami/spectrum.hpp"

#include <algorithm>

#include "origami/cylinders.hpp"
#include "origami/error.hpp"

namespace origami {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ekz: return "ekz";
    case Provenance::cover_inheritance: return "cover-inheritance";
    case Provenance::deduced: return "deduced";
    case Provenance::tautological: return "tautological";
  }
  return "?";
}

std::vector<Rational> ExponentReport::values() const {
  std::vector<Rational> out;
  for (const auto& e : exponents) out.push_back(e.value);
  return out;
}

Rational zero_order_term(const Stratum& s) {
  Rational total(0);
  for (int m : s.zero_orders) total += Rational(m * (m + 2), m + 1);
  return total / Rational(12);
}

Rational cylinder_term(const Origami& o) { return horizontal_cylinders(o).modulus_sum(); }

EkzBreakdown ekz_breakdown(const OrbitGraph& g) {
  EkzBreakdown out;
  out.stratum = stratum(g.nodes[static_cast<std::size_t>(g.basepoint)]);
  out.orbit_size = g.size();
  out.zero_order = zero_order_term(out.stratum);
  Rational total(0);
  for (const auto& cusp : g.cusps) {
    const Rational c = cylinder_term(g.nodes[static_cast<std::size_t>(cusp.front())]);
    out.cusps.push_back({cusp.size(), c});
    total += Rational(static_cast<std::int64_t>(cusp.size())) * c;
  }
  out.cylinder_average = total / Rational(static_cast<std::int64_t>(g.size()));
  out.sum = out.zero_order + out.cylinder_average;
  return out;
}

Rational ekz_sum_naive(const OrbitGraph& g) {
  Rational total(0);
  for (const auto& o : g.nodes) total += cylinder_term(o);
  return zero_order_term(stratum(g.nodes.front())) + total / Rational(static_cast<std::int64_t>(g.size()));
}

Rational ekz_sum(const OrbitGraph& g) { return ekz_breakdown(g).sum; }

Rational ekz_sum(const Origami& o, std::size_t budget) { return ekz_sum(orbit(o, budget)); }

Rational deduce_exponent(const Rational& sum, const std::vector<Rational>& known, std::optional<int> genus) {
  if (genus && static_cast<int>(known.size()) != *genus - 1)
    throw Error(ErrorCode::invalid_argument, "deduce: need exactly genus - 1 known exponents");
  Rational rest = sum;
  Rational upper(1);
  bool top_seen = false;
  for (const auto& k : known) {
    if (k < Rational(0) || k > Rational(1)) throw Error(ErrorCode::inconsistent_spectrum, "deduce: known exponent " + k.str() + " outside [0,1]");
    rest -= k;
    if (k == Rational(1) && !top_seen)
      top_seen = true;
    else
      upper = std::min(upper, k);
  }
  if (rest < Rational(0) || rest > upper)
    throw Error(ErrorCode::inconsistent_spectrum, "deduce: remaining exponent " + rest.str() + " outside [0, " + upper.str() + "]");
  return rest;
}

std::vector<Rational> base_spectrum(const Stratum& s) {
  if (s.zero_orders.empty()) return {Rational(1)};
  if (s.zero_orders == std::vector<int>{2}) return {Rational(1), Rational(1, 3)};
  if (s.zero_orders == std::vector<int>{1, 1}) return {Rational(1), Rational(1, 2)};
  throw Error(ErrorCode::unsupported_stratum, "no base spectrum known for " + s.name());
}

std::vector<Rational> inherited_exponents(const CoveringMap& c) {
  const auto check = verify_covering(c);
  if (!check.ok) throw Error(ErrorCode::not_a_covering, "not a covering: " + check.reason);
  return base_spectrum(stratum(c.base));
}

std::vector<Rational> teichmuller_spectrum(const std::vector<Rational>& kz, int sigma) {
  if (kz.empty() || kz.front() != Rational(1)) throw Error(ErrorCode::invalid_argument, "spectrum must start with 1");
  if (!std::is_sorted(kz.begin(), kz.end(), std::greater<>()))
    throw Error(ErrorCode::invalid_argument, "spectrum must be sorted descending");
  if (sigma < 1) throw Error(ErrorCode::invalid_argument, "number of zeros must be at least 1");
  std::vector<Rational> upper{Rational(2)};
  for (std::size_t i = 1; i < kz.size(); ++i) upper.push_back(Rational(1) + kz[i]);
  for (int i = 1; i < sigma; ++i) upper.push_back(Rational(1));
  for (std::size_t i = kz.size(); i-- > 1;) upper.push_back(Rational(1) - kz[i]);
  std::vector<Rational> out = upper;
  out.push_back(Rational(0));
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out.push_back(Rational(0) - *it);
  return out;
}

}  // namespace origami
