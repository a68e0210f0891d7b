#include <gtest/gtest.h>

#include <random>

#include "lmupp/derivation_ops.hpp"
#include "lmupp/engine_mupp.hpp"
#include "lmupp/typing.hpp"

using namespace lmu;
using namespace lmu::dv;

namespace {

Formula F(const char* s) { return parse_formula(s); }
FoTerm T(const char* s) { return parse_fo_term(s); }
MuppTerm M(const char* s) { return parse_mupp(s); }

Formula X(const FoTerm& t) { return Formula::atom("X", {t}); }
Formula X0() { return Formula::atom("X"); }
Formula step() { return Formula::forall_ind("z", Formula::imp(X(FoTerm::var("z")), X(FoTerm::succ(FoTerm::var("z"))))); }

// Church numeral derivation written out independently of the library.
Derivation church(int n) {
  Derivation body = ax("a", X(FoTerm::numeral(0)));
  for (int i = 0; i < n; ++i) body = imp_e(forall_e_ind(ax("f", step()), FoTerm::numeral(i)), body);
  return forall_i_pred("X", 1, imp_i("a", X(FoTerm::numeral(0)), imp_i("f", step(), body)));
}

std::string church_term(int n) {
  std::string body = "a";
  for (int i = 0; i < n; ++i) body = "(f " + body + ")";
  return "\\a.\\f." + body;
}

Judgment check(const Derivation& d, const Equations& e = {}, ValidateOptions o = {}) {
  return validate(d, System::Mupp, e, o);
}

std::string failure(const Derivation& d, const Equations& e = {}, ValidateOptions o = {}) {
  try {
    check(d, e, o);
  } catch (const ValidationError& err) {
    return err.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Random formulas over X/1, Y/0 and individual variables u, v, w.
class FormulaGen {
 public:
  explicit FormulaGen(unsigned seed) : rng_(seed) {}

  FoTerm term(int depth) {
    int k = pick(depth > 0 ? 4 : 2);
    if (k == 0) return FoTerm::var(std::string(1, "uvw"[pick(3)]));
    if (k == 1) return FoTerm::zero();
    if (k == 2) return FoTerm::succ(term(depth - 1));
    return FoTerm::or_(term(depth - 1), term(depth - 1));
  }

  Formula formula(int depth) {
    int k = pick(depth > 0 ? 5 : 2);
    switch (k) {
      case 0: return X(term(2));
      case 1: return pick(2) ? Formula::atom("Y") : Formula::bottom();
      case 2: return Formula::imp(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::forall_ind(std::string(1, "uvw"[pick(3)]), formula(depth - 1));
      default: return Formula::forall_pred("Y", 0, formula(depth - 1));
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

}  // namespace

TEST(Formula, ParsePrintRoundTrip) {
  for (const char* s : {"_|_", "X(Z) -> X(S(Z))", "all x.X(x) -> _|_", "ALL X^1.X(Z) -> X(B1)", "~~A",
                        "ex y.Ent[y]", "Bool[or(B1,x)]", "(A -> B) -> C"}) {
    Formula a = F(s);
    EXPECT_EQ(F(print(a).c_str()), a) << s;
  }
}

TEST(Formula, AbbreviationsExpand) {
  Formula e = Formula::forall_pred(
      "X", 1,
      Formula::imps({X(FoTerm::zero()), step()}, X(FoTerm::numeral(2))));
  EXPECT_TRUE(alpha_eq(ent(FoTerm::numeral(2)), e));
  EXPECT_TRUE(alpha_eq(F("Ent[S(S(Z))]"), e));
  Formula b = Formula::forall_pred("X", 1, Formula::imps({X(FoTerm::b1()), X(FoTerm::b0())}, X(FoTerm::var("t"))));
  EXPECT_TRUE(alpha_eq(bool_type(FoTerm::var("t")), b));
  EXPECT_EQ(F("ex y.A"), F("~all y.~A"));
  EXPECT_EQ(F("~A"), F("A -> _|_"));
}

TEST(Formula, AlphaEquivalence) {
  EXPECT_TRUE(alpha_eq(F("all x.X(x)"), F("all y.X(y)")));
  EXPECT_TRUE(alpha_eq(F("ALL X^1.X(Z)"), F("ALL Y^1.Y(Z)")));
  EXPECT_FALSE(alpha_eq(F("all x.X(x)"), F("all y.X(x)")));
  EXPECT_FALSE(alpha_eq(F("ALL X^1.X(Z)"), F("ALL X^0.X")));
}

TEST(Formula, SubstitutionAvoidsCapture) {
  Formula a = subst_ind(F("all y.X(x) -> X(y)"), "x", FoTerm::var("y"));
  EXPECT_TRUE(alpha_eq(a, F("all z.X(y) -> X(z)")));
  EXPECT_EQ(free_ind(a), (std::set<std::string>{"y"}));
  Formula b = subst_pred(F("X(S(Z)) -> all y.X(y)"), "X", {{"t"}, F("Y(t,y)")});
  EXPECT_TRUE(alpha_eq(b, F("Y(S(Z),y) -> all z.Y(z,y)")));
  EXPECT_THROW(subst_pred(F("X(Z)"), "X", {{}, F("Y")}), FormulaError);
}

TEST(Formula, RandomSubstitutionCommutes) {
  FormulaGen gen(7);
  for (int i = 0; i < 300; ++i) {
    Formula a = gen.formula(4);
    FoTerm s = gen.term(2), t = gen.term(2);
    // A[u:=s][v:=t] = A[v:=t'][u:=s[v:=t]] when t does not mention u.
    if (free_vars(t).count("u")) continue;
    Formula lhs = subst_ind(subst_ind(a, "u", s), "v", t);
    Formula rhs = subst_ind(subst_ind(a, "v", t), "u", subst(s, "v", t));
    EXPECT_TRUE(alpha_eq(lhs, rhs)) << print(a);
    // Free variables after substitution.
    std::set<std::string> want = free_ind(a);
    if (want.erase("u")) {
      for (const auto& x : free_vars(s)) want.insert(x);
    }
    EXPECT_EQ(free_ind(subst_ind(a, "u", s)), want) << print(a);
    EXPECT_TRUE(alpha_eq(F(print(a).c_str()), a));
  }
}

TEST(Equations, OrEquations) {
  Equations e = or_equations();
  EXPECT_TRUE(eq_modulo(T("or(B1,x)"), T("B1"), e));
  EXPECT_TRUE(eq_modulo(T("or(x,B0)"), T("x"), e));
  EXPECT_TRUE(eq_modulo(T("or(or(B0,B1),B0)"), T("B1"), e));
  EXPECT_TRUE(eq_modulo(T("B1"), T("or(or(B0,B1),B0)"), e));
  EXPECT_FALSE(eq_modulo(T("B0"), T("B1"), e));
  EXPECT_FALSE(eq_modulo(T("or(x,y)"), T("B1"), e));
  EXPECT_TRUE(sanity_violations(e, 4).empty());
}

TEST(Equations, SymmetricAndTransitive) {
  Equations e = or_equations();
  std::vector<FoTerm> ts{T("B0"), T("B1"), T("or(B0,B0)"), T("or(B1,B0)"), T("or(B0,or(B1,B0))"), T("x"),
                         T("or(B0,x)"), T("or(x,B1)")};
  for (const auto& a : ts) {
    for (const auto& b : ts) {
      EXPECT_EQ(eq_modulo(a, b, e), eq_modulo(b, a, e)) << print(a) << " " << print(b);
      for (const auto& c : ts) {
        if (eq_modulo(a, b, e) && eq_modulo(b, c, e)) {
          EXPECT_TRUE(eq_modulo(a, c, e, 16));
        }
      }
    }
  }
}

TEST(Equations, ParseAndSanity) {
  Equations e = Equations::parse("# comment\nB0 = B1\n\nor(x,y) = or(y,x)\n");
  ASSERT_EQ(e.list.size(), 2u);
  EXPECT_EQ(e.list[1].left, T("or(x,y)"));
  EXPECT_FALSE(sanity_violations(e, 2).empty());
  EXPECT_EQ(Equations::parse(or_equations().print()).print(), or_equations().print());
}

TEST(Validate, ChurchNumerals) {
  for (int n = 0; n <= 10; ++n) {
    Judgment j = check(church(n));
    EXPECT_TRUE(alpha_eq(j.mupp, M(church_term(n).c_str()))) << n;
    EXPECT_TRUE(alpha_eq(j.formula, ent(FoTerm::numeral(n)))) << n;
    EXPECT_TRUE(j.ctx.lam.empty() && j.ctx.mu.empty());
  }
}

TEST(Validate, ExitType) {
  // \x.mu#a.x : ALL X^0.(_|_ -> X)
  Derivation d = forall_i_pred("X", 0, imp_i("x", Formula::bottom(), mu("#a", X0(), ax("x", Formula::bottom()))));
  Judgment j = check(d);
  EXPECT_TRUE(alpha_eq(j.mupp, M("\\x.mu #a.x")));
  EXPECT_TRUE(alpha_eq(j.formula, F("ALL X^0._|_ -> X")));
}

TEST(Validate, CcType) {
  // \x.mu#a.(x #a) : ALL X^0.(~~X -> X)
  Formula nnx = Formula::neg(Formula::neg(X0()));
  Derivation d = forall_i_pred("X", 0, imp_i("x", nnx, mu("#a", X0(), imp_e(ax("x", nnx), ax("#a", Formula::neg(X0()))))));
  Judgment j = check(d);
  EXPECT_TRUE(alpha_eq(j.mupp, M("\\x.mu #a.(x #a)")));
  EXPECT_TRUE(alpha_eq(j.formula, F("ALL X^0.~~X -> X")));
}

TEST(Validate, EquationStep) {
  // Bool[B1] turned into Bool[or(B1,y)] through the or-equations.
  Derivation one = forall_i_pred("X", 1, imp_i("a", X(FoTerm::b1()), imp_i("b", X(FoTerm::b0()), ax("a", X(FoTerm::b1())))));
  Derivation d = eq(one, "t", bool_type(FoTerm::var("t")), FoTerm::b1(), T("or(B1,y)"));
  Judgment j = check(d, or_equations());
  EXPECT_TRUE(alpha_eq(j.formula, bool_type(T("or(B1,y)"))));
  EXPECT_TRUE(starts_with(failure(d), "rule 8: "));
}

TEST(Validate, ContextsMerge) {
  Derivation d = imp_e(ax("f", F("A -> B")), ax("x", F("A")));
  Judgment j = check(d);
  EXPECT_EQ(j.ctx.lam.size(), 2u);
  EXPECT_TRUE(alpha_eq(j.formula, F("B")));
  Derivation clash = imp_e(ax("f", F("A -> A -> B")), ax("f", F("A")));
  EXPECT_NE(failure(clash).find("context clash"), std::string::npos);
}

TEST(Validate, CorruptedOnePerRule) {
  Formula a = F("A");
  std::vector<std::pair<Derivation, std::string>> cases{
      {ax("#a", a), "rule 1: mu-variable #a must have a negated type"},
      {imp_i("x", F("B"), ax("x", a)), "rule 2: declared domain"},
      {imp_e(ax("f", F("A -> B")), ax("x", F("C"))), "rule 3: domain mismatch"},
      {forall_i_ind("u", ax("x", X(FoTerm::var("u")))), "rule 4: u is free in the context"},
      {forall_e_ind(ax("x", a), FoTerm::zero()), "rule 5: premise is not universally quantified"},
      {forall_i_pred("X", 1, ax("x", X(FoTerm::zero()))), "rule 6: X is free in the context"},
      {forall_e_pred(church(1), {{}, a}), "rule 7: arity mismatch"},
      {eq(ax("x", X(FoTerm::b0())), "t", X(FoTerm::var("t")), FoTerm::b0(), FoTerm::b1()), "rule 8: "},
      {mu("#a", F("B"), ax("x", a)), "rule 9: body must have type _|_"},
      {yfix(imp_i("x", a, ax("x", a))), "rule Y: the Y rule is disabled"},
  };
  for (const auto& [d, tag] : cases) {
    std::string msg = failure(d, or_equations());
    EXPECT_TRUE(starts_with(msg, tag)) << tag << " got: " << msg;
  }
}

TEST(Validate, ErrorPathPointsAtPremise) {
  Derivation bad = church(2);
  // Break the innermost axiom: the start value now has the wrong type.
  Derivation* p = &bad;
  while (!p->premises.empty()) p = &p->premises.back();
  p->formula = X(FoTerm::numeral(1));
  try {
    check(bad);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.rule() == TRule::ImpE || e.rule() == TRule::ImpI) << e.what();
    EXPECT_FALSE(e.path().empty());
  }
}

TEST(Validate, YRule) {
  // (Y \x.x) : A with the added rule.
  Derivation d = yfix(imp_i("x", F("A"), ax("x", F("A"))));
  ValidateOptions o;
  o.y_rule = true;
  Judgment j = check(d, {}, o);
  EXPECT_TRUE(j.sn_forfeited);
  EXPECT_TRUE(alpha_eq(j.mupp, MuppTerm::app(turing_fixpoint(), M("\\x.x"))));
  EXPECT_TRUE(alpha_eq(j.formula, F("A")));
}

TEST(Validate, LambdaMuNaming) {
  // \x.mu#a.[#a]x : A -> A in lambda-mu.
  Derivation d = imp_i("x", F("A"), mu_named("#a", "#a", F("A"), ax("x", F("A"))));
  Judgment j = validate(d, System::Lmu, {});
  EXPECT_TRUE(alpha_eq(j.lmu, parse_lmu("\\x.mu #a.[#a]x")));
  EXPECT_TRUE(alpha_eq(j.formula, F("A -> A")));
  EXPECT_THROW(validate(ax("#a", F("~A")), System::Lmu, {}), ValidationError);
}

TEST(Json, RoundTripPreservesJudgment) {
  for (int n : {0, 3}) {
    Derivation d = church(n);
    nlohmann::json j = to_json(d);
    Derivation back = derivation_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(alpha_eq(check(back).mupp, check(d).mupp));
  }
  DerivationDocument doc;
  doc.equations = or_equations();
  doc.expect_formula = "Ent[S(Z)]";
  doc.derivation = church(1);
  DerivationDocument back = document_from_json(to_json(doc));
  EXPECT_EQ(back.equations.print(), doc.equations.print());
  EXPECT_EQ(back.expect_formula, doc.expect_formula);
  EXPECT_EQ(to_json(back.derivation), to_json(doc.derivation));
}

TEST(DerivationOps, RenamingRevalidates) {
  Derivation d = imp_e(ax("f", F("A -> B")), ax("x", F("A")));
  Judgment j = check(rename_subject_var(d, "x", "u"));
  EXPECT_TRUE(alpha_eq(j.mupp, M("(f u)")));
  EXPECT_EQ(j.ctx.lam.count("u"), 1u);
  EXPECT_EQ(j.ctx.lam.count("x"), 0u);
  Judgment k = check(subst_ind(forall_e_ind(ax("g", F("all y.X(y)")), FoTerm::var("w")), "w", FoTerm::zero()));
  EXPECT_TRUE(alpha_eq(k.formula, X(FoTerm::zero())));
}

TEST(DerivationOps, SubjectReductionOnBetaAndMu) {
  // ((\a.\f.(f a)) z) : (all z.X(z) -> X(S(z))) -> X(S(Z)) with z : X(Z).
  Derivation fun = imp_i("a", X(FoTerm::zero()),
                         imp_i("f", step(), imp_e(forall_e_ind(ax("f", step()), FoTerm::zero()), ax("a", X(FoTerm::zero())))));
  Derivation d = imp_e(fun, ax("z", X(FoTerm::zero())));
  // (mu#a.(#a x) y) with x : A -> B and y : A.
  Formula ab = F("A -> B");
  Derivation m = imp_e(mu("#a", ab, imp_e(ax("#a", Formula::neg(ab)), ax("x", ab))), ax("y", F("A")));
  int steps = 0;
  for (const Derivation& root : {d, m}) {
    Judgment j = check(root);
    for (const auto& r : redexes_mupp(j.mupp)) {
      Derivation reduced = reduce_derivation(root, r, {});
      Judgment k = check(reduced);
      EXPECT_TRUE(alpha_eq(k.mupp, r.reduct)) << to_string(r.rule);
      EXPECT_TRUE(alpha_eq(k.formula, j.formula)) << to_string(r.rule);
      ++steps;
    }
  }
  EXPECT_GE(steps, 2);
}
