#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lmupp/syntax.hpp"

namespace lmu {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First-order term: an individual variable or a function symbol applied to
// arguments. Z, S, B0, B1 and or are built in; other symbols are accepted
// with whatever arity they are used at.
struct FoTerm {
  enum class Kind : std::uint8_t { Var, Fn };
  Kind kind = Kind::Var;
  std::string name;
  std::vector<FoTerm> args;

  static FoTerm var(std::string x);
  static FoTerm fn(std::string f, std::vector<FoTerm> args = {});
  static FoTerm zero() { return fn("Z"); }
  static FoTerm succ(FoTerm t);
  static FoTerm numeral(int n);  // S^n(Z)
  static FoTerm b0() { return fn("B0"); }
  static FoTerm b1() { return fn("B1"); }
  static FoTerm or_(FoTerm a, FoTerm b);

  bool is_var() const { return kind == Kind::Var; }

  friend bool operator==(const FoTerm&, const FoTerm&) = default;
  friend auto operator<=>(const FoTerm& a, const FoTerm& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.args <=> b.args;
  }
};

std::set<std::string> free_vars(const FoTerm& t);
FoTerm subst(const FoTerm& t, const std::map<std::string, FoTerm>& s);
FoTerm subst(const FoTerm& t, const std::string& x, const FoTerm& a);
std::string print(const FoTerm& t);
FoTerm parse_fo_term(std::string_view text);
// Throws FormulaError when a built-in symbol is applied with the wrong arity.
void check_arity(const FoTerm& t);

enum class FKind : std::uint8_t { Bottom, Atom, Imp, ForallInd, ForallPred };

// Second-order formula over bottom, implication and both quantifiers.
// Atom: name is the predicate variable, args its arguments (arity = size).
// ForallInd: name is the bound individual variable. ForallPred: name is the
// bound predicate variable with the given arity.
struct Formula {
  FKind kind = FKind::Bottom;
  std::string name;
  int arity = 0;
  std::vector<FoTerm> args;
  std::vector<Formula> sub;

  static Formula bottom();
  static Formula atom(std::string pred, std::vector<FoTerm> args = {});
  static Formula imp(Formula a, Formula b);
  static Formula imps(std::vector<Formula> premises, Formula conclusion);
  static Formula forall_ind(std::string x, Formula body);
  static Formula forall_pred(std::string pred, int arity, Formula body);
  static Formula neg(Formula a);
  static Formula exists(std::string x, Formula body);  // ~all x.~body

  const Formula& lhs() const { return sub.at(0); }
  const Formula& rhs() const { return sub.at(1); }
  const Formula& body() const { return sub.at(0); }
  bool is(FKind k) const { return kind == k; }
  // A -> _|_
  bool is_negation() const { return kind == FKind::Imp && rhs().is(FKind::Bottom); }

  friend bool operator==(const Formula&, const Formula&) = default;
};

// Ent[t] = ALL X^1. X(Z) -> (all y. X(y) -> X(S(y))) -> X(t)
Formula ent(const FoTerm& t);
// Bool[t] = ALL X^1. X(B1) -> X(B0) -> X(t)
Formula bool_type(const FoTerm& t);

std::set<std::string> free_ind(const Formula& a);
// Free predicate variables with the arities they are used at.
std::map<std::string, int> free_pred(const Formula& a);

Formula subst_ind(const Formula& a, const std::string& x, const FoTerm& t);
Formula subst_ind(const Formula& a, const std::map<std::string, FoTerm>& s);

// lambda params. body, the instance of a predicate variable in rule 7.
struct PredAbstraction {
  std::vector<std::string> params;
  Formula body;
};

// Replaces every free atom X(t1..tk) by body[params := t1..tk], avoiding
// capture. Throws FormulaError on an arity mismatch.
Formula subst_pred(const Formula& a, const std::string& pred, const PredAbstraction& g);

bool alpha_eq(const Formula& a, const Formula& b);

// ASCII grammar:
//   _|_   A -> B (right associative)   ~A   all x.A   ex x.A   ALL X^k.A
//   X(t,...)   X   Ent[t]   Bool[t]   (A)
// Terms: Z  S(t)  B0  B1  or(t,u), lowercase identifiers are variables.
Formula parse_formula(std::string_view text);
// Prints with the Ent/Bool/~/ex abbreviations; parse_formula reads it back.
std::string print(const Formula& a, Style style = Style::Ascii);

}  // namespace lmu
