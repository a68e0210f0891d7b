#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmupp/equations.hpp"
#include "lmupp/formula.hpp"
#include "lmupp/lmu_term.hpp"
#include "lmupp/mupp_term.hpp"

namespace lmu {

enum class System : std::uint8_t { Lmu, Mupp };

enum class TRule : std::uint8_t {
  Ax,           // 1
  ImpI,         // 2
  ImpE,         // 3
  ForallIInd,   // 4
  ForallEInd,   // 5
  ForallIPred,  // 6
  ForallEPred,  // 7
  Eq,           // 8
  Mu,           // 9
  YFix,         // the added fixed-point rule
};

const char* to_string(TRule r);  // "ax", "imp_i", ...
std::string rule_tag(TRule r);   // "rule 1" ... "rule 9", "rule Y"
TRule trule_from_string(const std::string& s);

// One node of an explicit typing derivation. Conclusions are not stored:
// validation computes them bottom-up from the premises and the instance
// data, so the subject term is determined by the derivation.
//
// Field use per rule:
//   ax            var ("x" or "#a"), formula
//   imp_i         var, formula (domain; required if var is unused), lam
//   imp_e         -
//   forall_i_ind  var
//   forall_e_ind  witness
//   forall_i_pred var, arity
//   forall_e_pred pred
//   eq            var, formula (template), witness (from), target (to)
//   mu            var ("#a" binder), naming ("#b", lambda-mu only),
//                 formula (required if the binder is unused)
//   yfix          -
struct Derivation {
  TRule rule = TRule::Ax;
  std::string var;
  std::string naming;
  int arity = -1;
  std::optional<Formula> formula;
  std::optional<FoTerm> witness;
  std::optional<FoTerm> target;
  std::optional<PredAbstraction> pred;
  MuppKind lam = MuppKind::Lam;
  std::vector<Derivation> premises;

  const Derivation& premise(std::size_t i = 0) const { return premises.at(i); }
};

// Lambda-variables map to their formulas; mu-variables map to their full
// formula (~B in lambda-mu++, the conclusion B in lambda-mu).
struct Context {
  std::map<std::string, Formula> lam, mu;
  friend bool operator==(const Context&, const Context&) = default;
};

struct Judgment {
  System system = System::Mupp;
  Context ctx;
  MuppTerm mupp;  // subject, lambda-mu++
  LmuTerm lmu;    // subject, lambda-mu
  Formula formula;
  bool sn_forfeited = false;  // a yfix node was used
};

std::string print(const Judgment& j, Style style = Style::Ascii);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(TRule rule, std::vector<int> path, std::string reason);
  TRule rule() const { return rule_; }
  const std::vector<int>& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  TRule rule_;
  std::vector<int> path_;
  std::string reason_;
};

struct ValidateOptions {
  bool y_rule = false;
  int eq_depth = kDefaultEqDepth;
};

// Checks every node and returns the root judgment. Throws ValidationError
// naming the rule, the premise path from the root and the reason.
Judgment validate(const Derivation& d, System system, const Equations& e, const ValidateOptions& opts = {});

// The Turing fixed point (A A) with A = \x.\y.(y ((x x) y)).
MuppTerm turing_fixpoint();

// Derivation files. A bare derivation object, or a document
// {"system": "mupp"|"lmu", "equations": [...], "y_rule": bool,
//  "expect": {"term": ..., "formula": ...}, "derivation": {...}}.
nlohmann::json to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

struct DerivationDocument {
  System system = System::Mupp;
  Equations equations;
  bool y_rule = false;
  std::optional<std::string> expect_term, expect_formula;
  Derivation derivation;
};

DerivationDocument document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DerivationDocument& doc);

// Compact builders used by stdlib and tests.
namespace dv {
Derivation ax(std::string var, Formula a);
Derivation imp_i(std::string var, Formula domain, Derivation body, MuppKind lam = MuppKind::Lam);
Derivation imp_e(Derivation fun, Derivation arg);
Derivation forall_i_ind(std::string var, Derivation p);
Derivation forall_e_ind(Derivation p, FoTerm witness);
Derivation forall_i_pred(std::string var, int arity, Derivation p);
Derivation forall_e_pred(Derivation p, PredAbstraction g);
Derivation eq(Derivation p, std::string var, Formula templ, FoTerm from, FoTerm to);
Derivation mu(std::string binder, Formula b, Derivation p);
Derivation mu_named(std::string binder, std::string naming, std::optional<Formula> b, Derivation p);
Derivation yfix(Derivation f);
}  // namespace dv

}  // namespace lmu
