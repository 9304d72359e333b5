#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "origami/covers.hpp"
#include "origami/cylinders.hpp"
#include "origami/homology.hpp"
#include "origami/lyapunov.hpp"
#include "origami/spectrum.hpp"

// JSON views of results, shared by the CLI and its tests. Rationals are
// {"num": p, "den": q, "decimal": "…"} with a 10-significant-digit decimal.
namespace origami::report {

inline constexpr const char* tool_version = "0.1.0";

nlohmann::json rational(const Rational& r);
nlohmann::json rationals(const std::vector<Rational>& rs);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json matrix(const IntMatrix& m);

nlohmann::json analyze(const Origami& o);
nlohmann::json cylinders(const CylinderDecomposition& d);
nlohmann::json ekz(const EkzBreakdown& b);
nlohmann::json exponents(const ExponentReport& r);
nlohmann::json parabolic(const ParabolicReport& r);
nlohmann::json cyclic(const CyclicCoverSpec& s);
nlohmann::json lyapunov(const LyapunovEstimate& e, const WalkConfig& cfg);

/// Cusp sizes sorted descending, e.g. [4,3,2].
std::vector<int> sorted_cusp_sizes(const OrbitGraph& g);
/// "[4,3,2]"
std::string bracket_list(const std::vector<int>& xs);

}  // namespace origami::report
