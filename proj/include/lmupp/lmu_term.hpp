#pragma once

#include <memory>
#include <string>

#include "lmupp/mupp_term.hpp"

namespace lmu {

enum class LmuKind : std::uint8_t { Var, Lam, App, Mu };

struct LmuNode;

// Immutable lambda-mu term. Naming only occurs directly under a mu-binder,
// so Mu carries both the bound name and the naming: mu(a, b, t) is mu#a.[#b]t.
class LmuTerm {
 public:
  LmuTerm() = default;

  static LmuTerm var(std::string x);
  static LmuTerm lam(std::string x, LmuTerm body);
  static LmuTerm app(LmuTerm fun, LmuTerm arg);
  static LmuTerm apps(std::initializer_list<LmuTerm> terms);
  static LmuTerm mu(std::string binder, std::string naming, LmuTerm body);

  explicit operator bool() const { return node_ != nullptr; }

  LmuKind kind() const;
  const std::string& name() const;    // Var name, Lam binder, Mu binder
  const std::string& naming() const;  // Mu only
  const LmuTerm& body() const;        // Lam, Mu
  const LmuTerm& fun() const;
  const LmuTerm& arg() const;
  const LmuTerm& child(std::uint8_t index) const;
  int arity() const;

  const NameSet& free_lam() const;
  const NameSet& free_mu() const;  // delta is never reported
  std::size_t size() const;
  bool is(LmuKind k) const { return node_ && kind() == k; }
  bool same_node(const LmuTerm& other) const { return node_ == other.node_; }

 private:
  explicit LmuTerm(std::shared_ptr<const LmuNode> node) : node_(std::move(node)) {}
  static LmuTerm make(LmuKind kind, std::string name, std::string naming, LmuTerm c0, LmuTerm c1);
  std::shared_ptr<const LmuNode> node_;
};

struct LmuNode {
  LmuKind kind;
  std::string name, naming;
  LmuTerm c0, c1;
  NameSet free_lam, free_mu;
  std::size_t size;
};

FreeVars free_vars(const LmuTerm& t);

LmuTerm subst_lam(const LmuTerm& t, const std::string& x, const LmuTerm& v);
// Renames free namings [a] to [b].
LmuTerm rename_mu(const LmuTerm& t, const std::string& a, const std::string& b);

// Structural substitution t[a :=* v]: every naming [a]w referring to a free a
// becomes [a](w' v), where w' is w with the same substitution applied.
LmuTerm struct_subst(const LmuTerm& t, const std::string& a, const LmuTerm& v);

// A named term [naming]body, the body of a mu-abstraction.
struct Named {
  std::string naming;
  LmuTerm body;
};
Named struct_subst(const Named& n, const std::string& a, const LmuTerm& v);

std::string canonical(const LmuTerm& t);
bool alpha_eq(const LmuTerm& a, const LmuTerm& b);

const LmuTerm& subterm_at(const LmuTerm& t, const Position& pos);
LmuTerm replace_at(const LmuTerm& t, const Position& pos, LmuTerm replacement);

LmuTerm tidy(const LmuTerm& t);

}  // namespace lmu
