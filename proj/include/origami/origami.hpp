#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "origami/permutation.hpp"

namespace origami {

/// Zero orders of a translation surface and its genus. The torus is H(0):
/// an empty zero set with genus 1.
struct Stratum {
  std::vector<int> zero_orders;  // descending
  int genus = 1;

  /// "H(2,2)", "H(0)" for the torus.
  std::string name() const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// A square-tiled translation surface: h(i) is the square to the right of
/// square i, v(i) the square on top. The pair acts transitively on {1..N}.
class Origami {
 public:
  /// Validates sizes and transitivity.
  Origami(Permutation h, Permutation v);

  static Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }

  const Permutation& h() const { return h_; }
  const Permutation& v() const { return v_; }
  int squares() const { return h_.size(); }

  /// Simultaneous conjugate (φ⁻¹hφ, φ⁻¹vφ).
  Origami conjugated(const Permutation& phi) const;
  /// Canonical representative under simultaneous conjugacy.
  Origami canonical() const;

  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami&, const Origami&) = default;

 private:
  Permutation h_;
  Permutation v_;
};

/// Cycles of the commutator v⁻¹h⁻¹vh (h applied first). A cycle of length ℓ
/// is a cone point of angle 2πℓ, i.e. a zero of order ℓ−1.
std::vector<std::vector<int>> vertex_cycles(const Origami& o);

Stratum stratum(const Origami& o);

/// Parses the text format: lines "h = <cycles>", "v = <cycles>", optional
/// "n = <N>". Blank lines and '#' comments are ignored.
Origami parse_origami(const std::string& text);
/// Serializes to the text format with n, h and v lines (1-cycles printed).
std::string serialize(const Origami& o);

/// {"n":N,"h":[images],"v":[images]} with 1-based images.
nlohmann::json to_json(const Origami& o);
Origami origami_from_json(const nlohmann::json& j);

/// Reads a file in either the text or the JSON format.
Origami load_origami(const std::string& path);

}  // namespace origami
