#include <algorithm>

#include "lmupp/derivation_ops.hpp"
#include "lmupp/names.hpp"

namespace lmu {

namespace {

bool is_mu_name(const std::string& v) { return !v.empty() && v[0] == '#'; }
std::string strip(const std::string& v) { return is_mu_name(v) ? v.substr(1) : v; }

Derivation with_premises(const Derivation& d, std::vector<Derivation> ps) {
  Derivation out = d;
  out.premises = std::move(ps);
  return out;
}

template <class F>
Derivation map_premises(const Derivation& d, F&& f) {
  std::vector<Derivation> ps;
  ps.reserve(d.premises.size());
  for (const auto& p : d.premises) ps.push_back(f(p));
  return with_premises(d, std::move(ps));
}

std::set<std::string> pred_names(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [p, k] : free_pred(f)) out.insert(p);
  return out;
}

PredAbstraction renaming(const std::string& to, int arity) {
  PredAbstraction g;
  std::vector<FoTerm> args;
  for (int i = 0; i < arity; ++i) {
    g.params.push_back(fresh_name("p"));
    args.push_back(FoTerm::var(g.params.back()));
  }
  g.body = Formula::atom(to, std::move(args));
  return g;
}

// Arity of the predicate variable X as used anywhere in d, or -1.
int used_arity(const Derivation& d, const std::string& X) {
  auto in = [&](const Formula& f) {
    auto used = free_pred(f);
    auto it = used.find(X);
    return it == used.end() ? -1 : it->second;
  };
  int k = -1;
  if (d.formula) k = in(*d.formula);
  if (k < 0 && d.pred) k = in(d.pred->body);
  for (std::size_t i = 0; k < 0 && i < d.premises.size(); ++i) k = used_arity(d.premises[i], X);
  return k;
}

// Renames the eigenvariable of a rule 4 node to something fresh.
Derivation fresh_eigen_ind(const Derivation& n) {
  std::string w = fresh_name(n.var);
  Derivation out = n;
  out.var = w;
  out.premises[0] = subst_ind(n.premises[0], n.var, FoTerm::var(w));
  return out;
}

// Renames the eigenvariable of a rule 6 node. Its arity is read from the
// node, or from the uses inside the premise.
Derivation fresh_eigen_pred(const Derivation& n) {
  int arity = n.arity >= 0 ? n.arity : std::max(0, used_arity(n.premise(), n.var));
  std::string Y = fresh_name(n.var);
  Derivation out = n;
  out.var = Y;
  out.arity = arity;
  out.premises[0] = subst_pred(n.premises[0], n.var, renaming(Y, arity));
  return out;
}

}  // namespace

Derivation rename_subject_var(const Derivation& d, const std::string& from, const std::string& to) {
  const bool mu = is_mu_name(from);
  switch (d.rule) {
    case TRule::Ax:
      if (d.var == from) {
        Derivation out = d;
        out.var = to;
        return out;
      }
      return d;
    case TRule::ImpI:
      if (!mu && d.var == from) return d;
      break;
    case TRule::Mu:
      if (mu && strip(d.var) == strip(from)) return d;
      if (mu && !d.naming.empty() && strip(d.naming) == strip(from)) {
        Derivation out = map_premises(d, [&](const Derivation& p) { return rename_subject_var(p, from, to); });
        out.naming = to;
        return out;
      }
      break;
    default:
      break;
  }
  return map_premises(d, [&](const Derivation& p) { return rename_subject_var(p, from, to); });
}

Derivation subst_ind(const Derivation& d, const std::string& z, const FoTerm& a) {
  const auto fa = free_vars(a);
  Derivation out = d;
  switch (d.rule) {
    case TRule::ForallIInd:
      if (d.var == z) return d;
      if (fa.count(d.var)) out = fresh_eigen_ind(d);
      break;
    case TRule::ForallEInd:
      if (out.witness) out.witness = subst(*out.witness, z, a);
      break;
    case TRule::ForallEPred: {
      PredAbstraction g = *d.pred;
      bool shadowed = false;
      for (auto& p : g.params) {
        if (p == z) shadowed = true;
        if (fa.count(p)) {
          std::string q = fresh_name(p);
          g.body = subst_ind(g.body, p, FoTerm::var(q));
          p = q;
        }
      }
      if (!shadowed) g.body = subst_ind(g.body, z, a);
      out.pred = g;
      break;
    }
    case TRule::Eq:
      if (d.var != z) {
        if (fa.count(d.var)) {
          std::string x = fresh_name(d.var);
          out.formula = subst_ind(*d.formula, d.var, FoTerm::var(x));
          out.var = x;
        }
        out.formula = subst_ind(*out.formula, z, a);
      }
      out.witness = subst(*d.witness, z, a);
      out.target = subst(*d.target, z, a);
      break;
    default:
      if (out.formula) out.formula = subst_ind(*out.formula, z, a);
      break;
  }
  return map_premises(out, [&](const Derivation& p) { return subst_ind(p, z, a); });
}

Derivation subst_pred(const Derivation& d, const std::string& X, const PredAbstraction& g) {
  std::set<std::string> g_ind = free_ind(g.body);
  for (const auto& p : g.params) g_ind.erase(p);
  const std::set<std::string> g_pred = pred_names(g.body);
  Derivation out = d;
  switch (d.rule) {
    case TRule::ForallIInd:
      if (g_ind.count(d.var)) out = fresh_eigen_ind(d);
      break;
    case TRule::ForallIPred:
      if (d.var == X) return d;
      if (g_pred.count(d.var)) out = fresh_eigen_pred(d);
      break;
    case TRule::ForallEPred: {
      PredAbstraction h = *d.pred;
      for (auto& p : h.params) {
        if (g_ind.count(p)) {
          std::string q = fresh_name(p);
          h.body = subst_ind(h.body, p, FoTerm::var(q));
          p = q;
        }
      }
      h.body = subst_pred(h.body, X, g);
      out.pred = h;
      break;
    }
    case TRule::Eq:
      if (g_ind.count(d.var)) {
        std::string x = fresh_name(d.var);
        out.formula = subst_ind(*d.formula, d.var, FoTerm::var(x));
        out.var = x;
      }
      out.formula = subst_pred(*out.formula, X, g);
      break;
    default:
      if (out.formula) out.formula = subst_pred(*out.formula, X, g);
      break;
  }
  return map_premises(out, [&](const Derivation& p) { return subst_pred(p, X, g); });
}

namespace {

struct Avoid {
  std::set<std::string> lam, mu, ind, pred;
};

Avoid avoid_of(const Judgment& j) {
  Avoid a;
  for (const auto* m : {&j.ctx.lam, &j.ctx.mu}) {
    for (const auto& [k, f] : *m) {
      auto fi = free_ind(f);
      a.ind.insert(fi.begin(), fi.end());
      auto fp = pred_names(f);
      a.pred.insert(fp.begin(), fp.end());
    }
  }
  for (const auto& [k, _] : j.ctx.lam) a.lam.insert(k);
  for (const auto& [k, _] : j.ctx.mu) a.mu.insert(k);
  return a;
}

Derivation subst_assumption_rec(const Derivation& d, const std::string& var, const Derivation& repl, const Avoid& av) {
  const bool mu = is_mu_name(var);
  Derivation n = d;
  switch (d.rule) {
    case TRule::Ax:
      return d.var == var ? repl : d;
    case TRule::ImpI:
      if (!mu && d.var == var) return d;
      if (av.lam.count(d.var)) {
        std::string y = fresh_name(d.var);
        n.premises[0] = rename_subject_var(d.premises[0], d.var, y);
        n.var = y;
      }
      break;
    case TRule::Mu: {
      std::string b = strip(d.var);
      if (mu && b == strip(var)) return d;
      if (av.mu.count(b)) {
        std::string c = "#" + fresh_name(b);
        n.premises[0] = rename_subject_var(d.premises[0], "#" + b, c);
        if (!d.naming.empty() && strip(d.naming) == b) n.naming = c;
        n.var = c;
      }
      break;
    }
    case TRule::ForallIInd:
      if (av.ind.count(d.var)) n = fresh_eigen_ind(d);
      break;
    case TRule::ForallIPred:
      if (av.pred.count(d.var)) n = fresh_eigen_pred(d);
      break;
    default:
      break;
  }
  return map_premises(n, [&](const Derivation& p) { return subst_assumption_rec(p, var, repl, av); });
}

}  // namespace

Derivation subst_assumption(const Derivation& d, const std::string& var, const Derivation& repl, const Judgment& repl_j) {
  return subst_assumption_rec(d, var, repl, avoid_of(repl_j));
}

Derivation expose(const Derivation& d, System sys, const Equations& e, const ValidateOptions& opts) {
  auto judge = [&](const Derivation& x) { return validate(x, sys, e, opts); };
  switch (d.rule) {
    case TRule::ForallEInd: {
      Derivation e0 = expose(d.premise(), sys, e, opts);
      if (e0.rule == TRule::ForallIInd) return expose(subst_ind(e0.premise(), e0.var, *d.witness), sys, e, opts);
      return with_premises(d, {std::move(e0)});
    }
    case TRule::ForallEPred: {
      Derivation e0 = expose(d.premise(), sys, e, opts);
      if (e0.rule == TRule::ForallIPred) return expose(subst_pred(e0.premise(), e0.var, *d.pred), sys, e, opts);
      return with_premises(d, {std::move(e0)});
    }
    case TRule::Eq:
      break;
    default:
      return d;
  }
  Derivation e0 = expose(d.premise(), sys, e, opts);
  const Formula& T = *d.formula;
  const std::string& x = d.var;
  const FoTerm& a = *d.witness;
  const FoTerm& b = *d.target;
  if (!free_ind(T).count(x)) return e0;
  switch (e0.rule) {
    case TRule::ImpI: {
      if (!T.is(FKind::Imp)) break;
      const Formula& T1 = T.lhs();
      const Formula& T2 = T.rhs();
      Derivation hyp = dv::eq(dv::ax(e0.var, subst_ind(T1, x, b)), x, T1, b, a);
      Derivation body = subst_assumption(e0.premise(), e0.var, hyp, judge(hyp));
      return dv::imp_i(e0.var, subst_ind(T1, x, b), dv::eq(std::move(body), x, T2, a, b), e0.lam);
    }
    case TRule::ForallIInd: {
      if (!T.is(FKind::ForallInd)) break;
      std::string w = fresh_name(e0.var);
      Derivation p = subst_ind(e0.premise(), e0.var, FoTerm::var(w));
      Formula inner = subst_ind(T.body(), T.name, FoTerm::var(w));
      return dv::forall_i_ind(w, dv::eq(std::move(p), x, inner, a, b));
    }
    case TRule::ForallIPred: {
      if (!T.is(FKind::ForallPred)) break;
      std::string Y = fresh_name(e0.var);
      Derivation p = subst_pred(e0.premise(), e0.var, renaming(Y, T.arity));
      Formula inner = subst_pred(T.body(), T.name, renaming(Y, T.arity));
      return dv::forall_i_pred(Y, T.arity, dv::eq(std::move(p), x, inner, a, b));
    }
    case TRule::Mu: {
      if (sys != System::Mupp) break;
      Formula negT = Formula::neg(T);
      Derivation hyp = dv::eq(dv::ax(e0.var, subst_ind(negT, x, b)), x, negT, b, a);
      std::string var = "#" + strip(e0.var);
      Derivation body = subst_assumption(e0.premise(), var, hyp, judge(hyp));
      return dv::mu(var, subst_ind(T, x, b), std::move(body));
    }
    default:
      break;
  }
  return with_premises(d, {std::move(e0)});
}

namespace {

bool preserves_subject(TRule r) {
  return r == TRule::ForallIInd || r == TRule::ForallEInd || r == TRule::ForallIPred || r == TRule::ForallEPred ||
         r == TRule::Eq;
}

// The subject-preserving nodes above the first node that builds the subject.
struct Peeled {
  std::vector<Derivation> chain;  // from the top down, premises cleared
  Derivation base;
};

Peeled peel(const Derivation& d) {
  Peeled p;
  const Derivation* n = &d;
  while (preserves_subject(n->rule)) {
    p.chain.push_back(with_premises(*n, {}));
    n = &n->premise();
  }
  p.base = *n;
  return p;
}

Derivation replay(const std::vector<Derivation>& chain, Derivation base) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) base = with_premises(*it, {std::move(base)});
  return base;
}

class Reducer {
 public:
  Reducer(const Redex& r, const Equations& e, const ValidateOptions& opts) : r_(r), e_(e), opts_(opts) {}

  Derivation run(const Derivation& d) { return walk(d, 0); }

 private:
  Judgment judge(const Derivation& d) const { return validate(d, System::Mupp, e_, opts_); }
  Derivation expose(const Derivation& d) const { return lmu::expose(d, System::Mupp, e_, opts_); }

  [[noreturn]] static void unsupported(const std::string& why) { throw TransformError(why); }

  Derivation walk(const Derivation& d, std::size_t depth) {
    if (preserves_subject(d.rule)) return with_premises(d, {walk(d.premise(), depth)});
    const auto& path = r_.at.path();
    if (depth < path.size()) {
      std::uint8_t c = path[depth];
      switch (d.rule) {
        case TRule::ImpI:
        case TRule::Mu:
          return with_premises(d, {walk(d.premise(), depth + 1)});
        case TRule::ImpE: {
          Derivation out = d;
          out.premises[c] = walk(d.premises[c], depth + 1);
          return out;
        }
        default:
          unsupported(std::string("cannot descend through ") + to_string(d.rule));
      }
    }
    return contract(d);
  }

  Derivation contract(const Derivation& d) {
    switch (r_.rule) {
      case MuppRule::CLam: return c_lam(d);
      case MuppRule::CMu: return c_mu(d);
      case MuppRule::S2: return s2(d);
      case MuppRule::S3: return s3(d);
      case MuppRule::S4: return s4(d);
      case MuppRule::S5: return s5(d);
      case MuppRule::S6: return s6(d);
      default: unsupported(std::string("no typed counterpart for ") + to_string(r_.rule));
    }
  }

  // (\x.u v) -> u[x := v]
  Derivation c_lam(const Derivation& d) {
    Derivation f = expose(d.premises.at(0));
    if (f.rule != TRule::ImpI) unsupported("the function's derivation does not end with an abstraction");
    const Derivation& arg = d.premises.at(1);
    return subst_assumption(f.premise(), f.var, arg, judge(arg));
  }

  // The mu node under a chain of subject-preserving rules.
  Peeled mu_under(const Derivation& d) {
    Peeled p = peel(expose(d));
    if (p.base.rule != TRule::Mu) unsupported("expected a mu node");
    return p;
  }

  // (mu a.u v) -> mu b.u[a := \y.(b (y v))]
  Derivation c_mu(const Derivation& d) {
    Peeled m = mu_under(d.premises.at(0));
    const Derivation& arg = d.premises.at(1);
    Formula c0 = judge(m.base).formula;
    Formula fun = judge(replay(m.chain, m.base)).formula;
    if (!fun.is(FKind::Imp)) unsupported("mu term is not typed by an implication");
    std::string y = fresh_name("y");
    std::string b = "#" + fresh_name("b");
    Derivation yv = dv::imp_e(replay(m.chain, dv::ax(y, c0)), arg);
    Derivation k = dv::imp_i(y, c0, dv::imp_e(dv::ax(b, Formula::neg(fun.rhs())), std::move(yv)));
    Derivation body = subst_assumption(m.base.premise(), "#" + strip(m.base.var), k, judge(k));
    return dv::mu(b, fun.rhs(), std::move(body));
  }

  // mu a.mu b.u -> mu a.u[b := \w.w]
  Derivation s2(const Derivation& d) {
    if (d.rule != TRule::Mu) unsupported("expected a mu node");
    Peeled m = mu_under(d.premise());
    Formula c0 = judge(m.base).formula;
    std::string w = fresh_name("w");
    Derivation id = dv::imp_i(w, c0, replay(m.chain, dv::ax(w, c0)));
    Derivation body = subst_assumption(m.base.premise(), "#" + strip(m.base.var), id, judge(id));
    Derivation out = d;
    out.premises[0] = std::move(body);
    return out;
  }

  // (a (b u)) -> (b u)
  Derivation s3(const Derivation& d) {
    if (d.rule != TRule::ImpE) unsupported("expected an application");
    Peeled inner = peel(d.premises.at(1));
    if (inner.base.rule != TRule::ImpE) unsupported("argument is not an application");
    return inner.base;
  }

  // (b mu a.u) -> u[a := \y.(b y)]
  Derivation s4(const Derivation& d) {
    if (d.rule != TRule::ImpE) unsupported("expected an application");
    Peeled m = mu_under(d.premises.at(1));
    Formula c0 = judge(m.base).formula;
    std::string y = fresh_name("y");
    Derivation k = dv::imp_i(y, c0, dv::imp_e(d.premises.at(0), replay(m.chain, dv::ax(y, c0))));
    return subst_assumption(m.base.premise(), "#" + strip(m.base.var), k, judge(k));
  }

  // mu a.u -> \z.mu b.u[a := \y.(b (y z))]
  Derivation s5(const Derivation& d) {
    if (d.rule != TRule::Mu) unsupported("expected a mu node");
    Formula c0 = judge(d).formula;
    // Strip the quantifier prefix, instantiating with fresh variables.
    std::string y = fresh_name("y");
    Derivation yd = dv::ax(y, c0);
    Formula core = c0;
    struct Q {
      bool ind;
      std::string name;
      int arity;
    };
    std::vector<Q> prefix;
    while (core.is(FKind::ForallInd) || core.is(FKind::ForallPred)) {
      std::string v = fresh_name(core.name);
      if (core.is(FKind::ForallInd)) {
        prefix.push_back({true, v, 0});
        yd = dv::forall_e_ind(std::move(yd), FoTerm::var(v));
        core = subst_ind(core.body(), core.name, FoTerm::var(v));
      } else {
        prefix.push_back({false, v, core.arity});
        PredAbstraction g = renaming(v, core.arity);
        yd = dv::forall_e_pred(std::move(yd), g);
        core = subst_pred(core.body(), core.name, g);
      }
    }
    if (!core.is(FKind::Imp)) unsupported("S5 needs an implication type under the quantifiers");
    std::string z = fresh_name("z");
    std::string b = "#" + fresh_name("b");
    Derivation k = dv::imp_i(
        y, c0, dv::imp_e(dv::ax(b, Formula::neg(core.rhs())), dv::imp_e(std::move(yd), dv::ax(z, core.lhs()))));
    Derivation body = subst_assumption(d.premise(), "#" + strip(d.var), k, judge(k));
    Derivation out = dv::imp_i(z, core.lhs(), dv::mu(b, core.rhs(), std::move(body)));
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      out = it->ind ? dv::forall_i_ind(it->name, std::move(out)) : dv::forall_i_pred(it->name, it->arity, std::move(out));
    }
    return out;
  }

  // The derivation of the subterm at rel below d, chain included.
  static const Derivation& locate(const Derivation& d, const std::vector<std::uint8_t>& rel, std::size_t i) {
    if (preserves_subject(d.rule)) return locate(d.premise(), rel, i);
    if (i == rel.size()) return d;
    switch (d.rule) {
      case TRule::ImpI:
      case TRule::Mu:
        return locate(d.premise(), rel, i + 1);
      case TRule::ImpE:
        return locate(d.premises.at(rel[i]), rel, i + 1);
      default:
        unsupported("occurrence path leaves the derivation");
    }
  }

  // mu a.u[y := (a v)] -> v
  Derivation s6(const Derivation& d) {
    if (d.rule != TRule::Mu || !r_.occurrence) unsupported("expected a mu node with an occurrence");
    const Formula c0 = judge(d).formula;
    const auto& occ = r_.occurrence->path();
    std::vector<std::uint8_t> rel(occ.begin() + static_cast<long>(r_.at.depth()) + 1, occ.end());
    Peeled app = peel(locate(d.premise(), rel, 0));
    if (app.base.rule != TRule::ImpE) unsupported("occurrence is not an application");
    Peeled head = peel(app.base.premises.at(0));
    Derivation v = app.base.premises.at(1);
    // Undo the rule 8 steps applied to the mu-variable's axiom.
    for (const auto& step : head.chain) {
      if (step.rule != TRule::Eq) continue;
      if (!step.formula->is_negation()) unsupported("rule 8 on a mu-variable without a negated template");
      v = dv::eq(std::move(v), step.var, step.formula->lhs(), *step.target, *step.witness);
    }
    if (!alpha_eq(judge(v).formula, c0)) unsupported("occurrence type does not return to the mu type");
    return v;
  }

  const Redex& r_;
  const Equations& e_;
  ValidateOptions opts_;
};

}  // namespace

Derivation reduce_derivation(const Derivation& d, const Redex& r, const Equations& e, const ValidateOptions& opts) {
  return Reducer(r, e, opts).run(d);
}

}  // namespace lmu
