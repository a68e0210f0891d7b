#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmupp/explore.hpp"
#include "lmupp/lmu_term.hpp"

namespace lmu {

enum class LmuRule : std::uint8_t { CLam, CMu, S1naming, S2vacuous, S3eta, Prime };

const char* to_string(LmuRule rule);

// Mu: rules c_lam, c_mu, s1, s2, s3. MuPlus adds the non-deterministic rule
// mu#a.[#b]u[y := [#a]v] ->' v.
enum class LmuMode : std::uint8_t { Mu, MuPlus };

struct LmuRedex {
  LmuRule rule;
  Position at;
  LmuTerm reduct;
  // For Prime: position of the mu#g.[#a]v node whose body is returned.
  std::optional<Position> occurrence;
};

// Every redex of t, in pre-order of their positions.
std::vector<LmuRedex> redexes_lmu(const LmuTerm& t, LmuMode mode = LmuMode::Mu);

struct NormalizeResult {
  std::optional<LmuTerm> normal;  // empty when fuel ran out
  std::size_t steps = 0;
  std::vector<LmuRedex> trace;    // filled only when requested
};

// Leftmost-outermost reduction in mode Mu.
NormalizeResult normalize_lmu(const LmuTerm& t, std::size_t fuel, bool keep_trace = false);

using LmuValues = ValueSet<LmuTerm>;
using LmuExplorer = Explorer<LmuTerm, LmuRedex>;

LmuExplorer make_lmu_explorer(LmuMode mode);

LmuValues values_lmu(const LmuTerm& t, const Budget& budget = {}, LmuMode mode = LmuMode::MuPlus);
inline LmuValues values_lmu_plus(const LmuTerm& t, const Budget& budget = {}) {
  return values_lmu(t, budget, LmuMode::MuPlus);
}

}  // namespace lmu
