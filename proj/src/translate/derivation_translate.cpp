#include "lmupp/derivation_ops.hpp"
#include "lmupp/translate.hpp"

namespace lmu {

namespace {

bool is_mu_name(const std::string& v) { return !v.empty() && v[0] == '#'; }
std::string strip(const std::string& v) { return is_mu_name(v) ? v.substr(1) : v; }

bool subject_preserving(TRule r) {
  return r == TRule::ForallIInd || r == TRule::ForallEInd || r == TRule::ForallIPred || r == TRule::ForallEPred ||
         r == TRule::Eq;
}

// The node that builds the subject, below rules 4 to 8.
const Derivation& subject_node(const Derivation& d) {
  const Derivation* n = &d;
  while (subject_preserving(n->rule)) n = &n->premises.at(0);
  return *n;
}

class Translator {
 public:
  Translator(const Equations& e, const ValidateOptions& opts) : e_(e), opts_(opts) {}

  Derivation star(const Derivation& d) {
    Derivation out = d;
    out.premises.clear();
    switch (d.rule) {
      case TRule::Mu: {
        const Derivation& p = d.premises.at(0);
        Formula a = validate(p, System::Lmu, e_, opts_).formula;
        Formula b = validate(d, System::Lmu, e_, opts_).formula;
        Derivation naming = dv::ax("#" + strip(d.naming), Formula::neg(a));
        return dv::mu("#" + strip(d.var), b, dv::imp_e(naming, star(p)));
      }
      case TRule::YFix: throw TransformError("the Y rule has no lambda-mu source");
      default: break;
    }
    for (const auto& p : d.premises) out.premises.push_back(star(p));
    return out;
  }

  Derivation circ(const Derivation& d) {
    switch (d.rule) {
      case TRule::Ax:
        if (is_mu_name(d.var)) {
          // #a : ~B becomes \x.mu#g.[#a]x.
          Formula b = d.formula->lhs();
          std::string x = fresh_name("x");
          return dv::imp_i(x, b, dv::mu_named("#" + fresh_name("g"), d.var, Formula::bottom(), dv::ax(x, b)));
        }
        return d;
      case TRule::ImpI: {
        if (d.lam == MuppKind::Lam2) {
          Formula a = validate(d.premises.at(0), System::Mupp, e_, opts_).formula;
          return dv::imp_i(d.var, a, dv::mu_named("#" + fresh_name("g"), "#delta", a, dv::ax(d.var, a)));
        }
        if (d.lam == MuppKind::LamVac) throw TransformError("circ is defined on modified terms");
        Derivation out = d;
        out.lam = MuppKind::Lam;
        out.premises = {circ(d.premises.at(0))};
        return out;
      }
      case TRule::ImpE: return circ_app(d);
      case TRule::Mu: {
        Formula b = validate(d, System::Mupp, e_, opts_).formula;
        return dv::mu_named(d.var, "#delta", b, circ(d.premises.at(0)));
      }
      case TRule::YFix: throw TransformError("the Y rule has no lambda-mu image");
      default: break;
    }
    Derivation out = d;
    out.premises.clear();
    for (const auto& p : d.premises) out.premises.push_back(circ(p));
    return out;
  }

 private:
  Derivation circ_app(const Derivation& d) {
    const Derivation& f = d.premises.at(0);
    const Derivation& a = d.premises.at(1);
    const Derivation& head = subject_node(f);
    if (head.rule == TRule::ImpI && head.lam == MuppKind::Lam1) {
      Derivation lam = expose(f, System::Mupp, e_, opts_);
      if (lam.rule != TRule::ImpI) throw TransformError("cannot expose the linear abstraction");
      Derivation arg = circ(a);
      Judgment arg_j = validate(arg, System::Lmu, e_, opts_);
      return subst_assumption(circ(lam.premises.at(0)), lam.var, arg, arg_j);
    }
    if (head.rule == TRule::ImpI && head.lam == MuppKind::Lam2) {
      Formula b = validate(d, System::Mupp, e_, opts_).formula;
      return dv::mu_named("#" + fresh_name("g"), "#delta", b, circ(a));
    }
    return dv::imp_e(circ(f), circ(a));
  }

  const Equations& e_;
  ValidateOptions opts_;
};

}  // namespace

Derivation star_deriv(const Derivation& d, const Equations& e, const ValidateOptions& opts) {
  validate(d, System::Lmu, e, opts);
  return Translator(e, opts).star(d);
}

Derivation circ_deriv(const Derivation& d, const Equations& e, const ValidateOptions& opts) {
  validate(d, System::Mupp, e, opts);
  return Translator(e, opts).circ(d);
}

}  // namespace lmu
