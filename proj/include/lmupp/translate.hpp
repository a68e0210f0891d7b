#pragma once

#include <optional>
#include <vector>

#include "lmupp/engine_lmu.hpp"
#include "lmupp/engine_mupp.hpp"
#include "lmupp/typing.hpp"

namespace lmu {

// t*: x* = x, (\x.t)* = \x.t*, (t u)* = (t* u*), (mu#a.[#b]t)* = mu#a.(#b t*).
MuppTerm star(const LmuTerm& t);

// t°: the nine clauses from the modified syntax into lambda-mu. Fresh
// binders come from the name supply. Throws TermError on xi-extended input.
LmuTerm circ(const MuppTerm& t);

inline constexpr std::size_t kSimDepth = 20;
inline constexpr std::size_t kSimNodes = 20000;

inline Budget sim_budget() { return Budget{kSimNodes, kSimDepth, std::nullopt}; }

// A path u* -> ... -> v* in the core lambda-mu++ engine.
struct SimWitness {
  std::size_t steps = 0;
  std::vector<Redex> path;
};

// Checks that v is reachable from u in exactly n lambda-mu+ steps, then
// searches a path of length at least n from star(u) to star(v). Empty when
// either search fails within the budget, which is inconclusive.
std::optional<SimWitness> check_sim_star(const LmuTerm& u, const LmuTerm& v, std::size_t n,
                                         const Budget& budget = sim_budget());

// A common lambda-mu+ reduct of circ(u) and circ(v) with both paths.
struct JoinWitness {
  LmuTerm w;
  std::vector<LmuRedex> left, right;
};

// Checks that v is u or a one-step modified-mode reduct of u, then searches
// the lambda-mu+ graphs of circ(u) and circ(v) for a common alpha-class.
std::optional<JoinWitness> check_join_circ(const MuppTerm& u, const MuppTerm& v,
                                           const Budget& budget = sim_budget());

struct JoinOutcome {
  // Refuted: both graphs were explored completely without a common term.
  enum class Status { Joined, Refuted, Inconclusive, NotAStep };
  Status status = Status::Inconclusive;
  std::optional<JoinWitness> witness;
};

const char* to_string(JoinOutcome::Status s);

// check_join_circ with the reason for a missing witness.
JoinOutcome join_circ(const MuppTerm& u, const MuppTerm& v, const Budget& budget = sim_budget());

// Derivation translations. star_deriv turns Gamma |- t : A, Delta into
// Gamma, ~Delta |-' t* : A; circ_deriv turns Gamma |-' t : A into
// Gamma_lam |- t° : A, Gamma_mu, delta : _|_. Throw TransformError on nodes
// outside their scope.
Derivation star_deriv(const Derivation& d, const Equations& e = {}, const ValidateOptions& opts = {});
Derivation circ_deriv(const Derivation& d, const Equations& e = {}, const ValidateOptions& opts = {});

}  // namespace lmu
