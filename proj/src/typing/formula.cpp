#include <cctype>

#include "lmupp/formula.hpp"
#include "lmupp/names.hpp"

namespace lmu {

Formula Formula::bottom() { return Formula{}; }

Formula Formula::atom(std::string pred, std::vector<FoTerm> args) {
  Formula f;
  f.kind = FKind::Atom;
  f.name = std::move(pred);
  f.arity = static_cast<int>(args.size());
  f.args = std::move(args);
  return f;
}

Formula Formula::imp(Formula a, Formula b) {
  Formula f;
  f.kind = FKind::Imp;
  f.sub = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::imps(std::vector<Formula> premises, Formula conclusion) {
  Formula out = std::move(conclusion);
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) out = imp(std::move(*it), std::move(out));
  return out;
}

Formula Formula::forall_ind(std::string x, Formula body) {
  Formula f;
  f.kind = FKind::ForallInd;
  f.name = std::move(x);
  f.sub = {std::move(body)};
  return f;
}

Formula Formula::forall_pred(std::string pred, int arity, Formula body) {
  Formula f;
  f.kind = FKind::ForallPred;
  f.name = std::move(pred);
  f.arity = arity;
  f.sub = {std::move(body)};
  return f;
}

Formula Formula::neg(Formula a) { return imp(std::move(a), bottom()); }

Formula Formula::exists(std::string x, Formula body) { return neg(forall_ind(std::move(x), neg(std::move(body)))); }

Formula ent(const FoTerm& t) {
  auto X = [](FoTerm a) { return Formula::atom("X", {std::move(a)}); };
  Formula step = Formula::forall_ind("y", Formula::imp(X(FoTerm::var("y")), X(FoTerm::succ(FoTerm::var("y")))));
  return Formula::forall_pred("X", 1, Formula::imps({X(FoTerm::zero()), step}, X(t)));
}

Formula bool_type(const FoTerm& t) {
  auto X = [](FoTerm a) { return Formula::atom("X", {std::move(a)}); };
  return Formula::forall_pred("X", 1, Formula::imps({X(FoTerm::b1()), X(FoTerm::b0())}, X(t)));
}

namespace {

void collect_ind(const Formula& a, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (a.kind) {
    case FKind::Bottom:
      return;
    case FKind::Atom:
      for (const auto& t : a.args) {
        for (const auto& x : free_vars(t)) {
          if (!bound.count(x)) out.insert(x);
        }
      }
      return;
    case FKind::Imp:
      collect_ind(a.lhs(), bound, out);
      collect_ind(a.rhs(), bound, out);
      return;
    case FKind::ForallInd: {
      bool fresh = bound.insert(a.name).second;
      collect_ind(a.body(), bound, out);
      if (fresh) bound.erase(a.name);
      return;
    }
    case FKind::ForallPred:
      collect_ind(a.body(), bound, out);
      return;
  }
}

void collect_pred(const Formula& a, std::set<std::string>& bound, std::map<std::string, int>& out) {
  switch (a.kind) {
    case FKind::Bottom:
      return;
    case FKind::Atom:
      if (!bound.count(a.name)) out.emplace(a.name, a.arity);
      return;
    case FKind::Imp:
      collect_pred(a.lhs(), bound, out);
      collect_pred(a.rhs(), bound, out);
      return;
    case FKind::ForallInd:
      collect_pred(a.body(), bound, out);
      return;
    case FKind::ForallPred: {
      bool fresh = bound.insert(a.name).second;
      collect_pred(a.body(), bound, out);
      if (fresh) bound.erase(a.name);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_ind(const Formula& a) {
  std::set<std::string> bound, out;
  collect_ind(a, bound, out);
  return out;
}

std::map<std::string, int> free_pred(const Formula& a) {
  std::set<std::string> bound;
  std::map<std::string, int> out;
  collect_pred(a, bound, out);
  return out;
}

Formula subst_ind(const Formula& a, const std::map<std::string, FoTerm>& s) {
  if (s.empty()) return a;
  switch (a.kind) {
    case FKind::Bottom:
      return a;
    case FKind::Atom: {
      Formula out = a;
      for (auto& t : out.args) t = subst(t, s);
      return out;
    }
    case FKind::Imp:
      return Formula::imp(subst_ind(a.lhs(), s), subst_ind(a.rhs(), s));
    case FKind::ForallInd: {
      std::map<std::string, FoTerm> inner;
      std::set<std::string> fv = free_ind(a.body());
      bool clash = false;
      for (const auto& [x, t] : s) {
        if (x == a.name || !fv.count(x)) continue;
        inner.emplace(x, t);
        clash = clash || free_vars(t).count(a.name);
      }
      if (inner.empty()) return a;
      std::string y = a.name;
      Formula body = a.body();
      if (clash) {
        y = fresh_name(a.name);
        body = subst_ind(body, a.name, FoTerm::var(y));
      }
      return Formula::forall_ind(y, subst_ind(body, inner));
    }
    case FKind::ForallPred:
      return Formula::forall_pred(a.name, a.arity, subst_ind(a.body(), s));
  }
  return a;
}

Formula subst_ind(const Formula& a, const std::string& x, const FoTerm& t) { return subst_ind(a, {{x, t}}); }

namespace {

Formula subst_pred_rec(const Formula& a, const std::string& X, const PredAbstraction& g, const std::set<std::string>& g_ind,
                       const std::map<std::string, int>& g_pred) {
  switch (a.kind) {
    case FKind::Bottom:
      return a;
    case FKind::Atom: {
      if (a.name != X) return a;
      if (a.args.size() != g.params.size()) {
        throw FormulaError("predicate " + X + " used with " + std::to_string(a.args.size()) +
                           " argument(s), abstraction has " + std::to_string(g.params.size()));
      }
      std::map<std::string, FoTerm> s;
      for (std::size_t i = 0; i < g.params.size(); ++i) s.emplace(g.params[i], a.args[i]);
      return subst_ind(g.body, s);
    }
    case FKind::Imp:
      return Formula::imp(subst_pred_rec(a.lhs(), X, g, g_ind, g_pred), subst_pred_rec(a.rhs(), X, g, g_ind, g_pred));
    case FKind::ForallInd: {
      if (!free_pred(a.body()).count(X)) return a;
      std::string y = a.name;
      Formula body = a.body();
      if (g_ind.count(y)) {
        y = fresh_name(a.name);
        body = subst_ind(body, a.name, FoTerm::var(y));
      }
      return Formula::forall_ind(y, subst_pred_rec(body, X, g, g_ind, g_pred));
    }
    case FKind::ForallPred: {
      if (a.name == X || !free_pred(a.body()).count(X)) return a;
      std::string Y = a.name;
      Formula body = a.body();
      if (g_pred.count(Y)) {
        Y = fresh_name(a.name);
        PredAbstraction ren;
        std::vector<FoTerm> args;
        for (int i = 0; i < a.arity; ++i) {
          ren.params.push_back(fresh_name("p"));
          args.push_back(FoTerm::var(ren.params.back()));
        }
        ren.body = Formula::atom(Y, std::move(args));
        body = subst_pred(body, a.name, ren);
      }
      return Formula::forall_pred(Y, a.arity, subst_pred_rec(body, X, g, g_ind, g_pred));
    }
  }
  return a;
}

}  // namespace

Formula subst_pred(const Formula& a, const std::string& X, const PredAbstraction& g) {
  std::set<std::string> g_ind = free_ind(g.body);
  for (const auto& p : g.params) g_ind.erase(p);
  return subst_pred_rec(a, X, g, g_ind, free_pred(g.body));
}

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

// Innermost binder index for name on the given side, or -1 when free.
int lookup(const Binders& b, const std::string& name, bool left) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    if ((left ? b[i].first : b[i].second) == name) return i;
  }
  return -1;
}

bool same_var(const Binders& b, const std::string& x, const std::string& y) {
  int i = lookup(b, x, true), j = lookup(b, y, false);
  return i == j && (i >= 0 || x == y);
}

bool term_eq(const FoTerm& a, const FoTerm& b, const Binders& ind) {
  if (a.kind != b.kind) return false;
  if (a.is_var()) return same_var(ind, a.name, b.name);
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!term_eq(a.args[i], b.args[i], ind)) return false;
  }
  return true;
}

bool formula_eq(const Formula& a, const Formula& b, Binders& ind, Binders& pred) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FKind::Bottom:
      return true;
    case FKind::Atom:
      if (a.args.size() != b.args.size() || !same_var(pred, a.name, b.name)) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!term_eq(a.args[i], b.args[i], ind)) return false;
      }
      return true;
    case FKind::Imp:
      return formula_eq(a.lhs(), b.lhs(), ind, pred) && formula_eq(a.rhs(), b.rhs(), ind, pred);
    case FKind::ForallInd: {
      ind.emplace_back(a.name, b.name);
      bool ok = formula_eq(a.body(), b.body(), ind, pred);
      ind.pop_back();
      return ok;
    }
    case FKind::ForallPred: {
      if (a.arity != b.arity) return false;
      pred.emplace_back(a.name, b.name);
      bool ok = formula_eq(a.body(), b.body(), ind, pred);
      pred.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  Binders ind, pred;
  return formula_eq(a, b, ind, pred);
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '$';
}

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool lit(std::string_view t) {
    skip_ws();
    if (s_.substr(i_, t.size()) != t) return false;
    i_ += t.size();
    return true;
  }
  // A keyword must not run into an identifier character.
  bool keyword(std::string_view k) {
    skip_ws();
    if (s_.substr(i_, k.size()) != k) return false;
    if (i_ + k.size() < s_.size() && ident_char(s_[i_ + k.size()])) return false;
    i_ += k.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!lit(t)) fail("expected '" + std::string(t) + "'");
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    if (start == i_) fail("expected an identifier");
    return std::string(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw FormulaError(msg + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

  FoTerm term() {
    std::string name = ident();
    if (lit("(")) {
      std::vector<FoTerm> args;
      if (!lit(")")) {
        do {
          args.push_back(term());
        } while (lit(","));
        expect(")");
      }
      FoTerm t = FoTerm::fn(std::move(name), std::move(args));
      check_arity(t);
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(name[0])) || std::isdigit(static_cast<unsigned char>(name[0]))) {
      FoTerm t = FoTerm::fn(std::move(name));
      check_arity(t);
      return t;
    }
    return FoTerm::var(std::move(name));
  }

  Formula formula() {
    if (auto q = quantifier()) return *q;
    Formula left = unary();
    if (lit("->") || lit("→")) return Formula::imp(std::move(left), formula());
    return left;
  }

  std::optional<Formula> quantifier() {
    bool forall = keyword("all") || lit("∀");
    if (!forall && keyword("ALL")) return pred_quantifier();
    bool exists = !forall && (keyword("ex") || lit("∃"));
    if (!forall && !exists) return std::nullopt;
    std::string x = ident();
    if (std::isupper(static_cast<unsigned char>(x[0]))) {
      if (exists) fail("ex binds individual variables only");
      return pred_quantifier(x);
    }
    expect(".");
    Formula body = formula();
    return exists ? Formula::exists(x, std::move(body)) : Formula::forall_ind(x, std::move(body));
  }

  Formula pred_quantifier(std::string X = {}) {
    if (X.empty()) X = ident();
    if (!std::isupper(static_cast<unsigned char>(X[0]))) fail("predicate variables start with an uppercase letter");
    int arity = -1;
    if (lit("^")) {
      std::string k = ident();
      for (char c : k) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected an arity after '^'");
      }
      arity = std::stoi(k);
    }
    expect(".");
    Formula body = formula();
    auto used = free_pred(body);
    auto it = used.find(X);
    if (arity < 0) arity = it == used.end() ? 0 : it->second;
    if (it != used.end() && it->second != arity) fail("predicate " + X + " used with a different arity than declared");
    return Formula::forall_pred(X, arity, std::move(body));
  }

  Formula unary() {
    if (lit("~") || lit("¬")) return Formula::neg(unary());
    if (lit("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (lit("_|_") || lit("⊥")) return Formula::bottom();
    if (auto q = quantifier()) return *q;
    if (lit("Ent[")) return closing(ent(term()));
    if (lit("Bool[")) return closing(bool_type(term()));
    std::string X = ident();
    if (!std::isupper(static_cast<unsigned char>(X[0]))) fail("expected a formula, found '" + X + "'");
    std::vector<FoTerm> args;
    if (lit("(")) {
      if (!lit(")")) {
        do {
          args.push_back(term());
        } while (lit(","));
        expect(")");
      }
    }
    return Formula::atom(std::move(X), std::move(args));
  }

  Formula closing(Formula f) {
    expect("]");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

enum class Ctx { Top, ImpLeft, Tight };

struct Printer {
  Style style;

  const char* bottom() const { return style == Style::Ascii ? "_|_" : "⊥"; }
  const char* arrow() const { return style == Style::Ascii ? " -> " : " → "; }
  const char* negation() const { return style == Style::Ascii ? "~" : "¬"; }

  // The term t when a is Ent[t] (kind 0) or Bool[t] (kind 1).
  static std::optional<std::pair<int, FoTerm>> data_type(const Formula& a) {
    if (!a.is(FKind::ForallPred) || a.arity != 1) return std::nullopt;
    const Formula* f = &a.body();
    while (f->is(FKind::Imp)) f = &f->rhs();
    if (!f->is(FKind::Atom) || f->name != a.name || f->args.size() != 1) return std::nullopt;
    const FoTerm& t = f->args[0];
    if (alpha_eq(a, ent(t))) return std::make_pair(0, t);
    if (alpha_eq(a, bool_type(t))) return std::make_pair(1, t);
    return std::nullopt;
  }

  static bool is_exists(const Formula& a) {
    return a.is_negation() && a.lhs().is(FKind::ForallInd) && a.lhs().body().is_negation();
  }

  std::string operator()(const Formula& a, Ctx ctx) const {
    if (auto dt = data_type(a)) return (dt->first == 0 ? "Ent[" : "Bool[") + print(dt->second) + "]";
    switch (a.kind) {
      case FKind::Bottom:
        return bottom();
      case FKind::Atom:
        return a.args.empty() ? a.name : a.name + "(" + args(a) + ")";
      case FKind::Imp: {
        if (is_exists(a)) {
          std::string q = std::string(style == Style::Ascii ? "ex " : "∃") + a.lhs().name + "." +
                          (*this)(a.lhs().body().lhs(), Ctx::Top);
          return ctx == Ctx::Top ? q : "(" + q + ")";
        }
        if (a.is_negation()) return negation() + (*this)(a.lhs(), Ctx::Tight);
        std::string s = (*this)(a.lhs(), Ctx::ImpLeft) + arrow() + (*this)(a.rhs(), Ctx::Top);
        return ctx == Ctx::Top ? s : "(" + s + ")";
      }
      case FKind::ForallInd:
      case FKind::ForallPred: {
        std::string q;
        if (style == Style::Ascii) {
          q = a.is(FKind::ForallInd) ? "all " + a.name : "ALL " + a.name + "^" + std::to_string(a.arity);
        } else {
          q = "∀" + a.name;
        }
        q += "." + (*this)(a.body(), Ctx::Top);
        return ctx == Ctx::Top ? q : "(" + q + ")";
      }
    }
    return {};
  }

  static std::string args(const Formula& a) {
    std::string out;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ",";
      out += print(a.args[i]);
    }
    return out;
  }
};

}  // namespace

FoTerm parse_fo_term(std::string_view text) {
  Reader r(text);
  FoTerm t = r.term();
  if (!r.at_end()) r.fail("trailing input");
  return t;
}

Formula parse_formula(std::string_view text) {
  Reader r(text);
  Formula f = r.formula();
  if (!r.at_end()) r.fail("trailing input");
  return f;
}

std::string print(const Formula& a, Style style) { return Printer{style}(a, Ctx::Top); }

}  // namespace lmu
