#include <gtest/gtest.h>

#include "lmupp/engine_lmu.hpp"
#include "lmupp/report.hpp"
#include "lmupp/syntax.hpp"
#include "oracles.hpp"

using namespace lmu;

namespace {

LmuTerm L(const char* s) { return parse_lmu(s); }

const char* kTheta = "\\x.\\f.mu #a.[#a](f mu #b.[#a](f x))";

bool subterm_of(const LmuTerm& t, const LmuTerm& s) {
  if (alpha_eq(t, s)) return true;
  for (int i = 0; i < t.arity(); ++i) {
    if (subterm_of(t.child(static_cast<std::uint8_t>(i)), s)) return true;
  }
  return false;
}

// Brute force over mu nodes and their descendants, independent of PrimeScan:
// returns the (outer position, reduct class) pairs of every ->' instance.
void prime_oracle(const LmuTerm& t, std::vector<std::uint8_t>& p, std::set<std::pair<std::string, std::string>>& out) {
  if (t.is(LmuKind::Mu)) {
    const std::string a = t.name();
    // (node, binders strictly between the outer body root and node)
    struct Item {
      const LmuTerm* n;
      std::vector<std::string> lams, mus;
    };
    std::vector<Item> stack{{&t.body(), {}, {}}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      const LmuTerm& n = *it.n;
      if (n.is(LmuKind::Mu)) {
        if (n.name() == a) continue;
        auto mus = it.mus;
        mus.push_back(n.name());
        if (n.naming() == a) {
          auto fv = oracle::free_of(n.body());
          bool ok = !fv.mu.count(a);
          for (const auto& x : it.lams) ok = ok && !fv.lam.count(x);
          for (const auto& b : mus) ok = ok && !fv.mu.count(b);
          if (ok) out.insert({Position(p).str(), canonical(n.body())});
        }
        stack.push_back({&n.body(), it.lams, mus});
      } else if (n.is(LmuKind::Lam)) {
        auto lams = it.lams;
        lams.push_back(n.name());
        stack.push_back({&n.body(), lams, it.mus});
      } else if (n.is(LmuKind::App)) {
        stack.push_back({&n.fun(), it.lams, it.mus});
        stack.push_back({&n.arg(), it.lams, it.mus});
      }
    }
  }
  for (int i = 0; i < t.arity(); ++i) {
    p.push_back(static_cast<std::uint8_t>(i));
    prime_oracle(t.child(static_cast<std::uint8_t>(i)), p, out);
    p.pop_back();
  }
}

}  // namespace

TEST(LmuRedexes, SpecExamples) {
  EXPECT_TRUE(redexes_lmu(L(kTheta), LmuMode::Mu).empty());

  auto rs = redexes_lmu(L("(\\x.x y)"), LmuMode::Mu);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].rule, LmuRule::CLam);
  EXPECT_TRUE(alpha_eq(rs[0].reduct, L("y")));

  auto plus = redexes_lmu(L(kTheta), LmuMode::MuPlus);
  ASSERT_EQ(plus.size(), 1u);
  EXPECT_EQ(plus[0].rule, LmuRule::Prime);
  EXPECT_TRUE(alpha_eq(plus[0].reduct, L("\\x.\\f.(f x)")));
  std::set<std::pair<std::string, std::string>> want;
  std::vector<std::uint8_t> p;
  prime_oracle(L(kTheta), p, want);
  ASSERT_EQ(want.size(), 1u);
  EXPECT_EQ(want.begin()->first, plus[0].at.str());
}

TEST(LmuRedexes, EachRuleFires) {
  struct Case {
    const char* term;
    LmuRule rule;
    const char* reduct;
  };
  for (const Case& c : std::initializer_list<Case>{
           {"(\\x.(x x) y)", LmuRule::CLam, "(y y)"},
           {"(mu #a.[#a]x z)", LmuRule::CMu, "mu #a.[#a](x z)"},
           {"(mu #a.[#b]mu #c.[#a]x z)", LmuRule::CMu, "mu #a.[#b]mu #c.[#a](x z)"},
           {"mu #g.[#a]mu #b.[#b]x", LmuRule::S1naming, "mu #g.[#a]x"},
           {"mu #g.[#a]mu #b.[#c](x mu #d.[#b]y)", LmuRule::S1naming, "mu #g.[#c](x mu #d.[#a]y)"},
           {"mu #a.[#a]x", LmuRule::S2vacuous, "x"},
           {"mu #a.[#a]\\y.y", LmuRule::S3eta, "\\x.mu #a.[#a](\\y.y x)"},
           {"mu #a.[#b]mu #c.[#a]\\y.y", LmuRule::S3eta, "\\x.mu #a.[#b]mu #c.[#a](\\y.y x)"},
       }) {
    bool found = false;
    for (const auto& r : redexes_lmu(L(c.term), LmuMode::Mu)) {
      if (r.rule != c.rule || !r.at.is_root()) continue;
      found = true;
      EXPECT_TRUE(alpha_eq(r.reduct, L(c.reduct))) << c.term << " -> " << print(r.reduct);
    }
    EXPECT_TRUE(found) << c.term;
  }
}

TEST(LmuRedexes, SideConditions) {
  auto has = [](const char* s, LmuRule rule, LmuMode mode = LmuMode::Mu) {
    for (const auto& r : redexes_lmu(parse_lmu(s), mode)) {
      if (r.rule == rule && r.at.is_root()) return true;
    }
    return false;
  };
  EXPECT_FALSE(has("mu #a.[#a]mu #b.[#a]x", LmuRule::S2vacuous));
  EXPECT_FALSE(has("mu #a.[#b]\\y.y", LmuRule::S3eta));
  EXPECT_FALSE(has("mu #a.[#b]mu #a.[#a]\\y.y", LmuRule::S3eta));
  EXPECT_FALSE(has("mu #a.[#a]\\y.mu #b.[#a]y", LmuRule::Prime, LmuMode::MuPlus));
  EXPECT_FALSE(has("mu #a.[#a]mu #b.[#a]mu #c.[#b]x", LmuRule::Prime, LmuMode::MuPlus));
  EXPECT_TRUE(has("mu #a.[#a]mu #b.[#a]x", LmuRule::Prime, LmuMode::MuPlus));
  EXPECT_TRUE(has("mu #a.[#c](f mu #b.[#a]x)", LmuRule::Prime, LmuMode::MuPlus));
}

TEST(LmuRedexes, CMuAvoidsCapture) {
  // the argument mentions #a freely; the binder must be renamed
  auto rs = redexes_lmu(L("(mu #a.[#a]x mu #c.[#a]y)"), LmuMode::Mu);
  ASSERT_FALSE(rs.empty());
  EXPECT_EQ(rs[0].rule, LmuRule::CMu);
  EXPECT_TRUE(alpha_eq(rs[0].reduct, L("mu #d.[#d](x mu #c.[#a]y)"))) << print(rs[0].reduct);
}

TEST(LmuRedexes, MuIsSubsetOfMuPlus) {
  oracle::Gen g(41);
  for (int i = 0; i < 300; ++i) {
    LmuTerm t = g.lmu(2 + g.pick(14));
    auto mu = redexes_lmu(t, LmuMode::Mu);
    auto plus = redexes_lmu(t, LmuMode::MuPlus);
    for (const auto& r : mu) {
      bool in = false;
      for (const auto& q : plus) in = in || (q.rule == r.rule && q.at == r.at);
      EXPECT_TRUE(in) << print(t);
    }
  }
}

TEST(LmuRedexes, PrimeMatchesOracle) {
  oracle::Gen g(42);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    LmuTerm t = g.lmu(2 + g.pick(16));
    std::set<std::pair<std::string, std::string>> got, want;
    for (const auto& r : redexes_lmu(t, LmuMode::MuPlus)) {
      if (r.rule != LmuRule::Prime) continue;
      got.insert({r.at.str(), canonical(subterm_at(r.reduct, r.at))});
      EXPECT_TRUE(subterm_of(t, subterm_at(r.reduct, r.at)));
    }
    std::vector<std::uint8_t> p;
    prime_oracle(t, p, want);
    checked += static_cast<int>(want.size());
    EXPECT_EQ(got, want) << print(t);
  }
  EXPECT_GT(checked, 50);
}

TEST(Normalize, SpecExamples) {
  LmuTerm one = L("\\x.\\y.(y x)");
  auto r1 = normalize_lmu(one, 5);
  ASSERT_TRUE(r1.normal);
  EXPECT_TRUE(alpha_eq(*r1.normal, one));
  EXPECT_EQ(r1.steps, 0u);

  auto r2 = normalize_lmu(L("(\\x.\\y.(y x) a)"), 10);
  ASSERT_TRUE(r2.normal);
  EXPECT_TRUE(alpha_eq(*r2.normal, L("\\y.(y a)")));

  // c_mu gives mu #a.[#a](x z); s2 then removes the vacuous naming.
  auto r3 = normalize_lmu(L("(mu #a.[#a]x z)"), 10, true);
  ASSERT_TRUE(r3.normal);
  ASSERT_EQ(r3.trace.size(), 2u);
  EXPECT_TRUE(alpha_eq(r3.trace[0].reduct, L("mu #a.[#a](x z)")));
  EXPECT_EQ(r3.trace[1].rule, LmuRule::S2vacuous);
  EXPECT_TRUE(alpha_eq(*r3.normal, L("(x z)")));
  EXPECT_TRUE(alpha_eq(*r3.normal, oracle::struct_subst(L("mu #g.[#a]x"), "a", L("z")).body()));
}

TEST(Normalize, FuelExhaustion) {
  auto r = normalize_lmu(L("(\\z.(z z) \\z.(z z))"), 25);
  EXPECT_FALSE(r.normal);
  EXPECT_EQ(r.steps, 25u);
}

TEST(ValuesLmu, SpecExamples) {
  auto v1 = values_lmu_plus(L("\\x.\\y.(y x)"));
  EXPECT_TRUE(v1.exhaustive());
  ASSERT_EQ(v1.normals.size(), 1u);

  auto v2 = values_lmu_plus(L(kTheta));
  EXPECT_TRUE(v2.exhaustive());
  ASSERT_EQ(v2.normals.size(), 1u);
  EXPECT_TRUE(alpha_eq(v2.normals[0], L("\\x.\\f.(f x)")));

  auto v3 = values_lmu_plus(L("x"));
  EXPECT_TRUE(v3.exhaustive());
  ASSERT_EQ(v3.normals.size(), 1u);
  EXPECT_TRUE(alpha_eq(v3.normals[0], L("x")));
}

TEST(ValuesLmu, NormalsHaveNoRedex) {
  oracle::Gen g(43);
  for (int i = 0; i < 150; ++i) {
    auto v = values_lmu_plus(g.lmu(2 + g.pick(12)), Budget::nodes(2000));
    for (const auto& n : v.normals) EXPECT_TRUE(redexes_lmu(n, LmuMode::MuPlus).empty()) << print(n);
  }
}

// s1 at the root renames the inner #a to #b; s3 on the inner mu first
// eta-expands with [#a] still pointing inward. The two normal forms differ.
TEST(ValuesLmu, UntypedS1S3CriticalPair) {
  LmuTerm t = L("mu #a.[#b]mu #a.[#a]\\y.mu #b.[#a]y");
  auto rs = redexes_lmu(t, LmuMode::Mu);
  std::set<LmuRule> rules;
  for (const auto& r : rs) rules.insert(r.rule);
  EXPECT_EQ(rules, (std::set<LmuRule>{LmuRule::S1naming, LmuRule::S3eta}));

  auto v = values_lmu(t, Budget::nodes(10000), LmuMode::Mu);
  ASSERT_TRUE(v.exhaustive());
  std::set<std::string> got;
  for (const auto& n : v.normals) got.insert(canonical(n));
  std::set<std::string> want{canonical(L("mu #a.[#b]\\y.mu #c.[#b]y")), canonical(L("mu #a.[#b]\\x.(x x)"))};
  EXPECT_EQ(got, want);
}

// Every violation of unique normal forms on generated terms goes through s3.
TEST(ValuesLmu, ConfluenceSmoke) {
  oracle::Gen g(44);
  int full = 0, split = 0;
  for (int i = 0; i < 300; ++i) {
    LmuTerm t = g.lmu(2 + g.pick(12));
    auto ex = make_lmu_explorer(LmuMode::Mu);
    ex.record_edges(true);
    ex.run(t, Budget::nodes(10000));
    auto v = ex.values();
    if (!v.exhaustive()) continue;
    ++full;
    if (v.normals.size() <= 1) continue;
    ++split;
    bool s3 = false;
    for (const auto& e : ex.edges()) s3 = s3 || e.rule == LmuRule::S3eta;
    EXPECT_TRUE(s3) << print(t);
  }
  EXPECT_GT(full, 200);
  EXPECT_LE(split, full / 50);
}

TEST(LmuReport, TraceLine) {
  auto rs = redexes_lmu(L("(\\x.x y)"), LmuMode::Mu);
  EXPECT_EQ(trace_line(rs[0]), "c_lam @ root : y");
}
