#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace origami {

/// A bijection of {1..N}.
///
/// Labels are 1-based at every public boundary. Internally images are stored
/// 0-based; `operator()` and `images()` speak 1-based, `at0()` speaks 0-based.
class Permutation {
 public:
  Permutation() = default;
  /// Builds from 1-based images; throws Error(not_a_bijection / label_out_of_range).
  explicit Permutation(std::vector<int> images_one_based);

  static Permutation identity(int n);
  static Permutation from_zero_based(std::vector<int> images);
  /// Parses cycle notation such as "(1,2,3,4)(5,6)". Fixed points may be
  /// omitted; `n` pads the domain (0 means "largest label seen").
  static Permutation parse_cycles(const std::string& text, int n = 0);
  static Permutation random(int n, std::mt19937_64& rng);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  int at0(int i) const { return img_[static_cast<std::size_t>(i)]; }
  std::span<const int> zero_based() const { return img_; }
  std::vector<int> images() const;

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles with minimal point first, sorted by minimal point; 1-cycles kept.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation with 1-cycles printed: "(1,2)(3)".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// (p ∘ q)(i) = p(q(i)): apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);

/// φ⁻¹ p φ.
Permutation conjugate(const Permutation& p, const Permutation& phi);

/// True when the group generated by the given permutations acts transitively.
bool is_transitive(const Permutation& h, const Permutation& v);

struct CanonicalPair {
  Permutation h;
  Permutation v;
  /// φ with h = φ⁻¹ h_in φ and v = φ⁻¹ v_in φ (maps new label to old label).
  Permutation relabel;
};

/// Canonical representative of (h, v) under simultaneous conjugacy: the
/// lexicographically minimal encoding among the BFS relabelings started from
/// every square with generator order (h, v). Throws on non-transitive input.
CanonicalPair canonical_pair(const Permutation& h, const Permutation& v);

}  // namespace origami
