#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmupp/explore.hpp"
#include "lmupp/mupp_term.hpp"

namespace lmu {

enum class MuppRule : std::uint8_t {
  CLam,
  CMu,
  S1,
  S2,
  S3,
  S4,
  S5,
  S6,
  Xi0,        // mu#a.u -> (xi#a u)
  XiLamVac,   // (xi#a \'x.u) -> (xi#a u)
  XiMuVac,    // (xi#a mu'#b.u) -> (xi#a u)
  XiHit,      // (xi#a (#a v)) -> v
  XiLeft,     // (xi#a (u v)) -> (xi#a u), u != #a
  XiRight,    // (xi#a (u v)) -> (xi#a v), u != #a
};

const char* to_string(MuppRule rule);
std::optional<MuppRule> mupp_rule_from_string(std::string_view name);

// Core: the plain rules on core terms, S2 substitutes \w.w.
// Modified: accepts \1, \2 and #delta; C_mu, S4, S5 build \1 abstractions
// and S2 substitutes \2.
// Weak: S6 is replaced by the xi rules; binders count as vacuous exactly
// when their variable does not occur in the body.
enum class MuppMode : std::uint8_t { Core, Modified, Weak };

struct Redex {
  MuppRule rule;
  Position at;
  MuppTerm reduct;
  // For S5/S6: position of the (#a v) occurrence the redex is keyed on.
  std::optional<Position> occurrence;
};

// Every redex of t, in pre-order of their positions. S6 redexes at the same
// position with alpha-equal reducts are reported once.
std::vector<Redex> redexes_mupp(const MuppTerm& t, MuppMode mode = MuppMode::Core);

// Replays an enumerated redex. With several S6 redexes at one position an
// occurrence must be given.
MuppTerm step(const MuppTerm& t, MuppRule rule, const Position& at, MuppMode mode = MuppMode::Core,
              const std::optional<Position>& occurrence = std::nullopt);

using MuppValues = ValueSet<MuppTerm>;
using MuppExplorer = Explorer<MuppTerm, Redex>;

MuppExplorer make_mupp_explorer(MuppMode mode);

MuppValues values(const MuppTerm& t, const Budget& budget = {}, MuppMode mode = MuppMode::Core);

// Normal forms reached with the xi rules that contain no xi symbol.
MuppValues weak_values(const MuppTerm& t, const Budget& budget = {});

// True iff t contains a xi symbol.
bool has_xi(const MuppTerm& t);

}  // namespace lmu
