#include <functional>

#include "lmupp/typing.hpp"

namespace lmu {

const char* to_string(TRule r) {
  switch (r) {
    case TRule::Ax: return "ax";
    case TRule::ImpI: return "imp_i";
    case TRule::ImpE: return "imp_e";
    case TRule::ForallIInd: return "forall_i_ind";
    case TRule::ForallEInd: return "forall_e_ind";
    case TRule::ForallIPred: return "forall_i_pred";
    case TRule::ForallEPred: return "forall_e_pred";
    case TRule::Eq: return "eq";
    case TRule::Mu: return "mu";
    case TRule::YFix: return "yfix";
  }
  return "?";
}

std::string rule_tag(TRule r) {
  if (r == TRule::YFix) return "rule Y";
  return "rule " + std::to_string(static_cast<int>(r) + 1);
}

TRule trule_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(TRule::YFix); ++i) {
    auto r = static_cast<TRule>(i);
    if (s == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown typing rule '" + s + "'");
}

namespace {

std::string path_str(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(TRule rule, std::vector<int> path, std::string reason)
    : std::runtime_error(rule_tag(rule) + ": " + reason + " (at " + path_str(path) + ")"),
      rule_(rule),
      path_(std::move(path)),
      reason_(std::move(reason)) {}

MuppTerm turing_fixpoint() {
  auto x = MuppTerm::var("x");
  auto y = MuppTerm::var("y");
  auto a = MuppTerm::lam("x", MuppTerm::lam("y", MuppTerm::app(y, MuppTerm::apps({x, x, y}))));
  return MuppTerm::app(a, a);
}

namespace {

bool is_mu_name(const std::string& v) { return !v.empty() && v[0] == '#'; }
std::string strip(const std::string& v) { return is_mu_name(v) ? v.substr(1) : v; }

class Checker {
 public:
  Checker(System sys, const Equations& e, const ValidateOptions& opts) : sys_(sys), e_(e), opts_(opts) {}

  Judgment check(const Derivation& d) {
    switch (d.rule) {
      case TRule::Ax: return ax(d);
      case TRule::ImpI: return imp_i(d);
      case TRule::ImpE: return imp_e(d);
      case TRule::ForallIInd: return forall_i_ind(d);
      case TRule::ForallEInd: return forall_e_ind(d);
      case TRule::ForallIPred: return forall_i_pred(d);
      case TRule::ForallEPred: return forall_e_pred(d);
      case TRule::Eq: return eq(d);
      case TRule::Mu: return sys_ == System::Mupp ? mu_mupp(d) : mu_lmu(d);
      case TRule::YFix: return yfix(d);
    }
    fail(d.rule, "unknown rule");
  }

 private:
  [[noreturn]] void fail(TRule r, const std::string& reason) { throw ValidationError(r, path_, reason); }

  void arity(const Derivation& d, std::size_t n) {
    if (d.premises.size() != n) {
      fail(d.rule, "expects " + std::to_string(n) + " premise(s), got " + std::to_string(d.premises.size()));
    }
  }

  Judgment premise(const Derivation& d, std::size_t i) {
    path_.push_back(static_cast<int>(i));
    Judgment j = check(d.premises[i]);
    path_.pop_back();
    return j;
  }

  const Formula& need_formula(const Derivation& d, const char* what) {
    if (!d.formula) fail(d.rule, std::string("missing ") + what);
    return *d.formula;
  }

  static std::set<std::string> ctx_ind(const Context& c) {
    std::set<std::string> out;
    for (const auto* m : {&c.lam, &c.mu}) {
      for (const auto& [_, f] : *m) {
        auto fv = free_ind(f);
        out.insert(fv.begin(), fv.end());
      }
    }
    return out;
  }

  static std::set<std::string> ctx_pred(const Context& c) {
    std::set<std::string> out;
    for (const auto* m : {&c.lam, &c.mu}) {
      for (const auto& [_, f] : *m) {
        for (const auto& [p, k] : free_pred(f)) out.insert(p);
      }
    }
    return out;
  }

  void merge_into(std::map<std::string, Formula>& into, const std::map<std::string, Formula>& from, TRule r,
                  const char* prefix) {
    for (const auto& [k, f] : from) {
      auto [it, inserted] = into.emplace(k, f);
      if (!inserted && !alpha_eq(it->second, f)) {
        fail(r, std::string("context clash on ") + prefix + k + ": " + print(it->second) + " vs " + print(f));
      }
    }
  }

  Judgment ax(const Derivation& d) {
    arity(d, 0);
    const Formula& a = need_formula(d, "formula");
    Judgment j;
    j.system = sys_;
    j.formula = a;
    if (is_mu_name(d.var)) {
      if (sys_ == System::Lmu) fail(d.rule, "mu-variables are not terms in lambda-mu");
      if (!a.is_negation()) fail(d.rule, "mu-variable " + d.var + " must have a negated type, got " + print(a));
      std::string name = strip(d.var);
      j.mupp = is_delta(name) ? MuppTerm::delta() : MuppTerm::mu_var(name);
      j.ctx.mu.emplace(name, a);
      return j;
    }
    if (d.var.empty()) fail(d.rule, "missing variable");
    j.ctx.lam.emplace(d.var, a);
    if (sys_ == System::Mupp) {
      j.mupp = MuppTerm::var(d.var);
    } else {
      j.lmu = LmuTerm::var(d.var);
    }
    return j;
  }

  Judgment imp_i(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (d.var.empty() || is_mu_name(d.var)) fail(d.rule, "abstraction needs a lambda-variable");
    Formula dom;
    auto it = j.ctx.lam.find(d.var);
    if (it != j.ctx.lam.end()) {
      dom = it->second;
      if (d.formula && !alpha_eq(*d.formula, dom)) {
        fail(d.rule, "declared domain " + print(*d.formula) + " differs from the assumption " + print(dom));
      }
      j.ctx.lam.erase(it);
    } else {
      dom = need_formula(d, "domain of an abstraction whose variable is unused");
    }
    if (sys_ == System::Mupp) {
      try {
        switch (d.lam) {
          case MuppKind::Lam1: j.mupp = MuppTerm::lam1(d.var, j.mupp); break;
          case MuppKind::Lam2:
            if (!j.mupp.is(MuppKind::Var) || j.mupp.name() != d.var) fail(d.rule, "lam2 must abstract its own body");
            j.mupp = MuppTerm::lam2();
            break;
          case MuppKind::LamVac: j.mupp = MuppTerm::lam_vac(d.var, j.mupp); break;
          default: j.mupp = MuppTerm::lam(d.var, j.mupp); break;
        }
      } catch (const TermError& e) {
        fail(d.rule, e.what());
      }
    } else {
      if (d.lam != MuppKind::Lam) fail(d.rule, "lambda-mu has a single abstraction");
      j.lmu = LmuTerm::lam(d.var, j.lmu);
    }
    j.formula = Formula::imp(dom, j.formula);
    return j;
  }

  Judgment imp_e(const Derivation& d) {
    arity(d, 2);
    Judgment f = premise(d, 0);
    Judgment a = premise(d, 1);
    if (!f.formula.is(FKind::Imp)) fail(d.rule, "function type is not an implication: " + print(f.formula));
    if (!alpha_eq(f.formula.lhs(), a.formula)) {
      fail(d.rule, "domain mismatch: expected " + print(f.formula.lhs()) + ", argument has " + print(a.formula));
    }
    merge_into(f.ctx.lam, a.ctx.lam, d.rule, "");
    merge_into(f.ctx.mu, a.ctx.mu, d.rule, "#");
    if (sys_ == System::Mupp) {
      f.mupp = MuppTerm::app(f.mupp, a.mupp);
    } else {
      f.lmu = LmuTerm::app(f.lmu, a.lmu);
    }
    f.formula = f.formula.rhs();
    f.sn_forfeited = f.sn_forfeited || a.sn_forfeited;
    return f;
  }

  Judgment forall_i_ind(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (d.var.empty()) fail(d.rule, "missing variable");
    if (ctx_ind(j.ctx).count(d.var)) fail(d.rule, d.var + " is free in the context");
    j.formula = Formula::forall_ind(d.var, j.formula);
    return j;
  }

  Judgment forall_e_ind(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (!d.witness) fail(d.rule, "missing witness term");
    if (!j.formula.is(FKind::ForallInd)) fail(d.rule, "premise is not universally quantified: " + print(j.formula));
    try {
      check_arity(*d.witness);
    } catch (const FormulaError& e) {
      fail(d.rule, e.what());
    }
    j.formula = subst_ind(j.formula.body(), j.formula.name, *d.witness);
    return j;
  }

  Judgment forall_i_pred(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (d.var.empty()) fail(d.rule, "missing predicate variable");
    int k = d.arity;
    auto used = free_pred(j.formula);
    if (auto it = used.find(d.var); it != used.end()) {
      if (k >= 0 && k != it->second) fail(d.rule, "arity mismatch for " + d.var);
      k = it->second;
    }
    if (k < 0) k = 0;
    if (ctx_pred(j.ctx).count(d.var)) fail(d.rule, d.var + " is free in the context");
    j.formula = Formula::forall_pred(d.var, k, j.formula);
    return j;
  }

  Judgment forall_e_pred(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (!d.pred) fail(d.rule, "missing predicate abstraction");
    if (!j.formula.is(FKind::ForallPred)) {
      fail(d.rule, "premise is not quantified over a predicate: " + print(j.formula));
    }
    if (static_cast<int>(d.pred->params.size()) != j.formula.arity) {
      fail(d.rule, "arity mismatch: " + j.formula.name + " has arity " + std::to_string(j.formula.arity) +
                       ", abstraction has " + std::to_string(d.pred->params.size()) + " parameter(s)");
    }
    try {
      j.formula = subst_pred(j.formula.body(), j.formula.name, *d.pred);
    } catch (const FormulaError& e) {
      fail(d.rule, e.what());
    }
    return j;
  }

  Judgment eq(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    const Formula& templ = need_formula(d, "template formula");
    if (d.var.empty() || !d.witness || !d.target) fail(d.rule, "needs var, from and to");
    Formula before = subst_ind(templ, d.var, *d.witness);
    if (!alpha_eq(before, j.formula)) {
      fail(d.rule, "premise " + print(j.formula) + " is not the template instance " + print(before));
    }
    if (!eq_modulo(*d.witness, *d.target, e_, opts_.eq_depth)) {
      fail(d.rule, print(*d.witness) + " and " + print(*d.target) + " are not E-equal within depth " +
                       std::to_string(opts_.eq_depth));
    }
    j.formula = subst_ind(templ, d.var, *d.target);
    return j;
  }

  Judgment mu_mupp(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    if (!j.formula.is(FKind::Bottom)) fail(d.rule, "body must have type _|_, got " + print(j.formula));
    std::string a = strip(d.var);
    if (a.empty()) fail(d.rule, "missing mu binder");
    if (is_delta(a)) fail(d.rule, "delta cannot be bound");
    Formula b;
    auto it = j.ctx.mu.find(a);
    if (it != j.ctx.mu.end()) {
      b = it->second.lhs();
      if (d.formula && !alpha_eq(*d.formula, b)) {
        fail(d.rule, "declared type " + print(*d.formula) + " differs from the assumption ~" + print(b));
      }
      j.ctx.mu.erase(it);
    } else {
      b = need_formula(d, "type of a mu whose variable is unused");
    }
    try {
      j.mupp = MuppTerm::mu(a, j.mupp);
    } catch (const TermError& e) {
      fail(d.rule, e.what());
    }
    j.formula = b;
    return j;
  }

  Judgment mu_lmu(const Derivation& d) {
    arity(d, 1);
    Judgment j = premise(d, 0);
    std::string beta = strip(d.var);
    std::string alpha = strip(d.naming);
    if (beta.empty() || alpha.empty()) fail(d.rule, "needs a binder and a naming");
    if (is_delta(beta)) fail(d.rule, "delta cannot be bound");
    const Formula a = j.formula;
    Formula b;
    auto it = j.ctx.mu.find(beta);
    bool bound = it != j.ctx.mu.end();
    if (bound) {
      b = it->second;
      if (d.formula && !alpha_eq(*d.formula, b)) {
        fail(d.rule, "declared type " + print(*d.formula) + " differs from the conclusion " + print(b));
      }
      j.ctx.mu.erase(it);
    } else if (d.formula) {
      b = *d.formula;
    } else if (alpha == beta) {
      b = a;
    } else {
      fail(d.rule, "missing type of an unused mu binder");
    }
    if (alpha == beta) {
      if (!alpha_eq(a, b)) fail(d.rule, "naming the binder requires equal types: " + print(a) + " vs " + print(b));
    } else {
      auto [at, inserted] = j.ctx.mu.emplace(alpha, a);
      if (!inserted && !alpha_eq(at->second, a)) {
        fail(d.rule, "context clash on #" + alpha + ": " + print(at->second) + " vs " + print(a));
      }
    }
    j.lmu = LmuTerm::mu(beta, alpha, j.lmu);
    j.formula = b;
    return j;
  }

  Judgment yfix(const Derivation& d) {
    arity(d, 1);
    if (sys_ != System::Mupp) fail(d.rule, "the Y rule belongs to lambda-mu++");
    if (!opts_.y_rule) fail(d.rule, "the Y rule is disabled");
    Judgment j = premise(d, 0);
    if (!j.formula.is(FKind::Imp) || !alpha_eq(j.formula.lhs(), j.formula.rhs())) {
      fail(d.rule, "premise must have type A -> A, got " + print(j.formula));
    }
    j.mupp = MuppTerm::app(turing_fixpoint(), j.mupp);
    j.formula = j.formula.lhs();
    j.sn_forfeited = true;
    return j;
  }

  System sys_;
  const Equations& e_;
  ValidateOptions opts_;
  std::vector<int> path_;
};

}  // namespace

Judgment validate(const Derivation& d, System system, const Equations& e, const ValidateOptions& opts) {
  return Checker(system, e, opts).check(d);
}

std::string print(const Judgment& j, Style style) {
  const bool ascii = style == Style::Ascii;
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ", ";
    out += s;
  };
  for (const auto& [x, f] : j.ctx.lam) add(x + " : " + print(f, style));
  if (j.system == System::Mupp) {
    for (const auto& [a, f] : j.ctx.mu) add((ascii ? "#" : "") + a + " : " + print(f, style));
  }
  std::string turnstile = j.system == System::Mupp ? (ascii ? "|-'" : "⊢′") : (ascii ? "|-" : "⊢");
  out += out.empty() ? turnstile : " " + turnstile;
  out += " " + (j.system == System::Mupp ? print(j.mupp, style) : print(j.lmu, style)) + " : " + print(j.formula, style);
  if (j.system == System::Lmu) {
    for (const auto& [a, f] : j.ctx.mu) out += ", " + std::string(ascii ? "#" : "") + a + " : " + print(f, style);
  }
  return out;
}

}  // namespace lmu
