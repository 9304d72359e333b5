#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "origami/origami.hpp"
#include "origami/rational.hpp"

namespace origami {

/// A square-level covering map: proj[i-1] is the base square under cover
/// square i.
struct CoveringMap {
  Origami base;
  Origami cover;
  std::vector<int> proj;
  int degree = 1;
};

struct CoverCheck {
  bool ok = false;
  std::string reason;  // first violated condition
};

/// proj∘h' = h∘proj, proj∘v' = v∘proj, and every fibre has `degree` squares.
CoverCheck verify_covering(const CoveringMap& c);

/// Every vertex of the cover has the cone angle of its image. Throws
/// Error(not_a_covering) if the map does not verify.
bool is_unramified(const CoveringMap& c);

/// Cover on pairs (i, k), k ∈ Z/d, labelled i + k·N:
/// h'(i,k) = (h(i), k + incr_h[i]), v'(i,k) = (v(i), k + incr_v[i]).
/// Increments are indexed by 0-based base square. Throws
/// Error(disconnected_cover) listing the components if the result is not
/// connected.
CoveringMap cyclic_cover(const Origami& base, const std::vector<int>& incr_h, const std::vector<int>& incr_v, int d);

/// Branch data of a cyclic cover of the sphere w^N = Π (z − zᵤ)^{aᵤ} over
/// four points.
struct CyclicCoverSpec {
  std::int64_t N = 2;
  std::array<std::int64_t, 4> a{};
};

/// Checks 0 < aᵤ < N, Σaᵤ ≡ 0 (mod N) and gcd(N, a) = 1.
void validate(const CyclicCoverSpec& s);

enum class DimConvention {
  as_printed,  // argument k, returns dim V_{N−k}
  direct,      // argument j, returns dim V_j
};

/// Σᵤ {k·aᵤ/N} − 1 with {integer} = 0.
int dim_V10(const CyclicCoverSpec& s, std::int64_t j, DimConvention convention = DimConvention::direct);

/// Σⱼ dim V_j over 1 ≤ j < N.
int genus_from_dims(const CyclicCoverSpec& s);
/// 2 − 2g = 2N − Σᵤ (N − gcd(aᵤ, N)).
int riemann_hurwitz_genus(const CyclicCoverSpec& s);

/// λ(k) = 2·min({k/N}, 1 − {k/N}).
Rational cyclic_exponent(const CyclicCoverSpec& s, std::int64_t k);

struct PositiveExponents {
  std::vector<std::int64_t> qualifying;  // k with dim V_k = dim V_{N−k} = 1
  std::vector<Rational> values;          // λ(k) for each qualifying k, descending
  std::map<Rational, int> distinct;      // value ↦ multiplicity
  int with_multiplicity() const { return static_cast<int>(qualifying.size()); }
  int distinct_count() const { return static_cast<int>(distinct.size()); }
};

PositiveExponents positive_exponent_count(const CyclicCoverSpec& s);

/// M_q: N = 2q, a = (1, 1, q−2, q), from w^{2q} = z^{q−2}(z² − 1). q odd ≥ 3.
CyclicCoverSpec mq_spec(std::int64_t q);

}  // namespace origami
