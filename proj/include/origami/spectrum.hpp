#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/covers.hpp"
#include "origami/orbit.hpp"
#include "origami/origami.hpp"
#include "origami/rational.hpp"

namespace origami {

enum class Provenance { ekz, cover_inheritance, deduced, tautological };
const char* to_string(Provenance p);

struct ExponentEntry {
  Rational value;
  Provenance provenance = Provenance::tautological;
};

/// Kontsevich–Zorich exponents known for one surface, descending.
struct ExponentReport {
  std::vector<ExponentEntry> exponents;
  Rational sum;
  std::optional<Rational> deduced;
  std::vector<Rational> values() const;
};

/// (1/12)·Σ m(m+2)/(m+1) over the zero orders.
Rational zero_order_term(const Stratum& s);

/// Modulus sum Σ h/w over the horizontal cylinders.
Rational cylinder_term(const Origami& o);

struct CuspTerm {
  std::size_t size = 0;
  Rational contribution;  // cylinder_term of any member
};

/// Pieces of the sum formula λ₁ + … + λ_g = zero_order_term + mean cylinder_term.
struct EkzBreakdown {
  Stratum stratum;
  std::size_t orbit_size = 0;
  std::vector<CuspTerm> cusps;  // in orbit cusp order
  Rational zero_order;
  Rational cylinder_average;
  Rational sum;
};

/// Per-cusp evaluation: members of a T-orbit share their horizontal cylinders.
EkzBreakdown ekz_breakdown(const OrbitGraph& g);
/// Sum over every node separately; must agree with the per-cusp evaluation.
Rational ekz_sum_naive(const OrbitGraph& g);
Rational ekz_sum(const OrbitGraph& g);
Rational ekz_sum(const Origami& o, std::size_t budget = default_orbit_budget);

/// The one missing exponent: sum − Σ known. When `genus` is given the known
/// list must have genus − 1 entries. Throws Error(inconsistent_spectrum) unless
/// the result lies in [0, min(known without the leading 1)].
Rational deduce_exponent(const Rational& sum, const std::vector<Rational>& known, std::optional<int> genus = std::nullopt);

/// Known spectra of genus ≤ 2 base surfaces: H(2) {1, 1/3}, H(1,1) {1, 1/2},
/// torus {1}. Throws Error(unsupported_stratum) otherwise.
std::vector<Rational> base_spectrum(const Stratum& s);

/// The base spectrum, which is contained in the spectrum of the cover. Throws
/// Error(not_a_covering) for a map that does not verify.
std::vector<Rational> inherited_exponents(const CoveringMap& c);

/// Spectrum of the Teichmüller flow: 2, 1+λ₂..1+λ_g, 1 (σ−1 times),
/// 1−λ_g..1−λ₂, 0 and the negatives, length 4g + 2σ − 3.
std::vector<Rational> teichmuller_spectrum(const std::vector<Rational>& kz, int sigma);

}  // namespace origami
