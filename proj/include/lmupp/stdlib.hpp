#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmupp/engine_mupp.hpp"
#include "lmupp/translate.hpp"
#include "lmupp/typing.hpp"

namespace lmu {

struct NamedProgram {
  std::string name;
  MuppTerm term;
  std::optional<Derivation> derivation;  // lambda-mu++ derivation of the term
  // Set for lambda-mu programs; term then holds the star image.
  std::optional<LmuTerm> lmu;
  std::optional<Derivation> lmu_derivation;
  Equations equations;
  bool y_rule = false;
  std::string note;
  // n when the derivation concludes Ent[S^n(Z)].
  std::optional<int> integer;
};

// Terms.
MuppTerm church(int n);
MuppTerm btrue();
MuppTerm bfalse();
MuppTerm id_term();
LmuTerm theta();
// \x.\f.mu#a.[#a](f^n mu#b.[#a](f^m x)), typed Ent[S^m(Z)] for n <= m.
LmuTerm theta_nm(int n, int m);
MuppTerm exit_term();
MuppTerm cc_term();
MuppTerm callcc_term();
MuppTerm hat(int b);
MuppTerm por_term();
MuppTerm succ_term();
MuppTerm ytur();
MuppTerm loop_bool();
MuppTerm producer_term(const std::vector<int>& ns);
// F = \x.\y.mu#a.(#a (y \d.(x (succ y)) id (I (#a (y \d.\z.(z y) id #a)))))
MuppTerm producer_step_term();

// Builds a named program: church takes n as param, the others ignore it.
NamedProgram mk(const std::string& name, int param = 0);
// Names accepted by mk, with church listed as "church".
const std::vector<std::string>& program_names();
// Parser macros: {church n}, {producer n1 ... nm}, {producer_nat},
// {producer_step} and every other mk name without arguments.
MuppMacros stdlib_macros();

// P_{n1..nm} = \x.mu#a.U_m with its derivation of all x.Ent[x] -> ex y.Ent[y].
NamedProgram producer(const std::vector<int>& ns);
// P_N = (Y F), typed only with the Y rule.
NamedProgram producer_nat();
// F itself with its derivation of A -> A.
NamedProgram producer_step();

// Derivations (lambda-mu++ unless the name says otherwise).
Derivation church_derivation(int n);
Derivation bool_derivation(int b);
Derivation theta_nm_lmu_derivation(int n, int m);
Derivation exit_derivation();
Derivation cc_derivation();
Derivation callcc_derivation();
Derivation hat_derivation(int b);
Derivation por_derivation();
Derivation succ_derivation();
Derivation id_derivation();

// Curated closed or open typed terms with their derivations, all validating
// without the Y rule.
std::vector<NamedProgram> typed_corpus();
// Closed untyped or Y-typed terms used by the behavioural suites.
std::vector<NamedProgram> untyped_corpus();

// Bounded run of (P_N 0): (z 2) is found after about 746k nodes when reducts
// larger than 120 nodes are dropped; plain breadth-first search only reaches 0.
inline constexpr std::size_t kNatBudget = 760000;
inline constexpr std::size_t kNatSizeCap = 120;

inline Budget nat_budget() { return Budget{kNatBudget, std::nullopt, kNatSizeCap}; }

inline constexpr std::size_t kBoolBudget = 20000;
inline constexpr std::size_t kPorBudget = 100000;

struct BoolClass {
  enum class Kind { TrueBool, Unknown };
  Kind kind = Kind::Unknown;
  int value = -1;  // 0 or 1 for TrueBool
  std::size_t explored = 0;
  std::string diagnostics;
};

BoolClass classify_bool(const MuppTerm& t, const Budget& budget = Budget::nodes(kBoolBudget));

struct PorCase {
  std::string left, right;
  std::string expectation;
  std::vector<std::string> normals;
  bool exhaustive = false;
  bool ok = false;
};

struct PorReport {
  std::vector<PorCase> cases;
  bool ok() const;
};

PorReport por_suite(const Budget& budget = Budget::nodes(kPorBudget));

}  // namespace lmu
