#pragma once

#include <array>
#include <string>

#include "origami/origami.hpp"

namespace fixtures {

inline origami::Origami make(const std::string& h, const std::string& v, int n) {
  return origami::Origami(origami::Permutation::parse_cycles(h, n), origami::Permutation::parse_cycles(v, n));
}

inline const char* const kHR0 = "(1,2,3,4)(5,6)";

// The nine six-square surfaces of the H(2,2) example orbit, in the order
// R0..R8 of its published edge table.
inline std::array<origami::Origami, 9> r_family() {
  return {
      make(kHR0, "(1,5)(2)(3,6)(4)", 6),
      make(kHR0, "(1,4,6)(2,5,3)", 6),
      make(kHR0, "(1,6,3,5)(2,4)", 6),
      make(kHR0, "(1,2,6)(3,4,5)", 6),
      make("(1,5)(2)(3,6)(4)", kHR0, 6),
      make("(1,5)(2)(3,6)(4)", "(1,6,4)(2,3,5)", 6),
      make("(1,6,4)(2,3,5)", kHR0, 6),
      make("(1,6,4)(2,3,5)", "(1)(2,6)(3)(4,5)", 6),
      make("(1,6,4)(2,3,5)", "(1,5,3,6)(2,4)", 6),
  };
}

inline origami::Origami r0() { return r_family()[0]; }

// Three-square L in H(2).
inline origami::Origami s0() { return make("(1,2)(3)", "(1,3)(2)", 3); }

}  // namespace fixtures
