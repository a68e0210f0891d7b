#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "lmupp/names.hpp"
#include "lmupp/position.hpp"

namespace lmu {

class TermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MuppKind : std::uint8_t {
  Var,     // x
  MuVar,   // #a, also the constant #delta
  Lam,     // \x.t
  Lam1,    // \1x.t, x occurs exactly once in t
  Lam2,    // \2, the identity \2x.x
  LamVac,  // \'x.t, x does not occur in t
  Mu,      // mu #a.t
  MuVac,   // mu' #a.t, #a does not occur in t
  App,     // (t u)
  Xi,      // xi#a
};

// Well-formedness levels. Each level admits the constructors of the ones
// below it: core terms use only Var, MuVar, Lam, Mu, App; modified terms add
// Lam1, Lam2 and the constant delta; xi-extended terms add LamVac, MuVac, Xi.
enum class Level : std::uint8_t { Core = 0, Modified = 1, XiExtended = 2 };

const char* to_string(MuppKind kind);
const char* to_string(Level level);

struct MuppNode;

// Immutable lambda-mu++ term. Copies share structure; every node caches its
// free lambda- and mu-variables, its level and its size.
//
// In an application whose function is xi#a, the argument is treated as being
// in the scope of #a: (xi#a t) stands for the mu#a.t it was derived from.
class MuppTerm {
 public:
  MuppTerm() = default;  // empty handle, only meaningful as a placeholder

  static MuppTerm var(std::string x);
  static MuppTerm mu_var(std::string a);
  static MuppTerm delta();
  static MuppTerm lam(std::string x, MuppTerm body);
  static MuppTerm lam1(std::string x, MuppTerm body);
  static MuppTerm lam2();
  static MuppTerm lam_vac(std::string x, MuppTerm body);
  static MuppTerm mu(std::string a, MuppTerm body);
  static MuppTerm mu_vac(std::string a, MuppTerm body);
  static MuppTerm app(MuppTerm fun, MuppTerm arg);
  static MuppTerm apps(std::initializer_list<MuppTerm> terms);
  static MuppTerm xi(std::string a);

  // Rebuilds a node of the same shape as `like` with new name/children.
  static MuppTerm rebuild(MuppKind kind, const std::string& name, MuppTerm c0, MuppTerm c1);

  explicit operator bool() const { return node_ != nullptr; }

  MuppKind kind() const;
  // Variable name for Var/MuVar/Xi, bound name for binders; empty otherwise.
  const std::string& name() const;
  const MuppTerm& body() const;  // binders
  const MuppTerm& fun() const;   // App
  const MuppTerm& arg() const;   // App
  const MuppTerm& child(std::uint8_t index) const;
  int arity() const;  // number of children

  const NameSet& free_lam() const;
  const NameSet& free_mu() const;
  Level level() const;
  std::size_t size() const;

  bool is(MuppKind k) const { return node_ && kind() == k; }
  bool is_abstraction() const;  // Lam, Lam1, Lam2, LamVac
  bool is_mu_binder() const;    // Mu, MuVac
  bool is_binder() const;       // abstraction with a name, or mu binder
  bool is_mu_var(std::string_view a) const { return is(MuppKind::MuVar) && name() == a; }
  bool is_xi_app() const;       // (xi#a t)
  bool same_node(const MuppTerm& other) const { return node_ == other.node_; }

 private:
  explicit MuppTerm(std::shared_ptr<const MuppNode> node) : node_(std::move(node)) {}
  static MuppTerm make(MuppKind kind, std::string name, MuppTerm c0, MuppTerm c1);

  std::shared_ptr<const MuppNode> node_;
};

struct MuppNode {
  MuppKind kind;
  std::string name;
  MuppTerm c0, c1;
  NameSet free_lam, free_mu;
  Level level;
  std::size_t size;
};

// Number of free occurrences of the lambda-variable x.
std::size_t count_free_lam(const MuppTerm& t, std::string_view x);

struct FreeVars {
  NameSet lam, mu;
};
FreeVars free_vars(const MuppTerm& t);

// Capture-avoiding t[x := v].
MuppTerm subst_lam(const MuppTerm& t, const std::string& x, const MuppTerm& v);
// Capture-avoiding t[a := v]: every free MuVar leaf named a becomes v.
MuppTerm subst_mu(const MuppTerm& t, const std::string& a, const MuppTerm& v);
// Free mu-variable renaming t[a := b] (b a mu-variable).
MuppTerm rename_mu(const MuppTerm& t, const std::string& a, const std::string& b);

// Alpha-invariant serialization: equal iff the terms are alpha-equivalent.
std::string canonical(const MuppTerm& t);
bool alpha_eq(const MuppTerm& a, const MuppTerm& b);

const MuppTerm& subterm_at(const MuppTerm& t, const Position& pos);
// Replaces the subterm at pos. A linear abstraction whose body stops being
// linear is demoted to a plain abstraction.
MuppTerm replace_at(const MuppTerm& t, const Position& pos, MuppTerm replacement);

// Renames bound variables to readable names ("y$12" -> "y" or "y1").
MuppTerm tidy(const MuppTerm& t);

}  // namespace lmu
