#pragma once

#include <stdexcept>
#include <string>

#include "lmupp/engine_mupp.hpp"
#include "lmupp/typing.hpp"

namespace lmu {

// A derivation transformation that does not apply to the given input.
class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Renames free occurrences of a subject variable ("x", or "#a" for a
// mu-variable) in axioms, and mu-namings in lambda-mu derivations.
Derivation rename_subject_var(const Derivation& d, const std::string& from, const std::string& to);

// Replaces the free individual variable z by a in every formula and term of
// the derivation, renaming eigenvariables that would capture a.
Derivation subst_ind(const Derivation& d, const std::string& z, const FoTerm& a);
// Same for a predicate variable and an abstraction.
Derivation subst_pred(const Derivation& d, const std::string& pred, const PredAbstraction& g);

// Replaces every axiom for the free subject variable var by repl, whose
// root judgment is repl_j. Binders and eigenvariables of d that would
// capture something free in repl are renamed first.
Derivation subst_assumption(const Derivation& d, const std::string& var, const Derivation& repl, const Judgment& repl_j);

// Removes detours at the root: an elimination of a quantifier directly over
// its introduction, and rule 8 over an introduction (pushed inside). The
// subject and the conclusion formula are unchanged up to alpha.
Derivation expose(const Derivation& d, System system, const Equations& e, const ValidateOptions& opts = {});

// Derivation of r.reduct from a lambda-mu++ derivation d of the redex term,
// with the same conclusion formula and a smaller context. Covers C_lam,
// C_mu and S2-S6 in core syntax. Throws TransformError otherwise.
Derivation reduce_derivation(const Derivation& d, const Redex& r, const Equations& e, const ValidateOptions& opts = {});

}  // namespace lmu
