#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmupp/formula.hpp"

namespace lmu {

struct Equation {
  FoTerm left, right;
};

struct Equations {
  std::vector<Equation> list;

  // One equation "lhs = rhs" per line; blank lines and '#' comments skipped.
  static Equations parse(std::string_view text);
  std::string print() const;
};

// or(B1,x) = B1, or(B0,x) = x, or(x,B1) = B1, or(x,B0) = x
Equations or_equations();

inline constexpr int kDefaultEqDepth = 8;

// Bounded search for a ~E b: rewriting steps in either direction at any
// position, searched from both ends until the combined step count exceeds
// depth. Variables of a rewritten side that the match leaves unbound range
// over the subterms of a and b. True answers are always correct.
bool eq_modulo(const FoTerm& a, const FoTerm& b, const Equations& e, int depth = kDefaultEqDepth);

// Bounded check of the standing assumptions B0 !~ B1 and S^n(Z) !~ S^m(Z)
// for n != m <= max_n. Returns the offending pairs as "a ~ b" strings.
std::vector<std::string> sanity_violations(const Equations& e, int max_n, int depth = kDefaultEqDepth);

}  // namespace lmu
