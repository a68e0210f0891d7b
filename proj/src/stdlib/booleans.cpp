#include "lmupp/stdlib.hpp"
#include "lmupp/syntax.hpp"

namespace lmu {

namespace {

// Head shape of a normal form, for the Unknown diagnostics.
std::string head_shape(const MuppTerm& t) {
  if (!t.is_abstraction()) return "no abstraction head";
  if (!t.body().is_abstraction()) return "one abstraction";
  MuppTerm u = t.body().body();
  while (u.is(MuppKind::App)) u = u.fun();
  if (u.is(MuppKind::Var) && (u.name() == t.name() || u.name() == t.body().name())) return "bound head variable";
  return "other head";
}

}  // namespace

BoolClass classify_bool(const MuppTerm& t, const Budget& budget) {
  MuppValues vs = values(t, budget);
  BoolClass out;
  out.explored = vs.explored;
  if (vs.exhaustive() && vs.normals.size() == 1) {
    for (int b : {1, 0}) {
      if (alpha_eq(vs.normals[0], b ? btrue() : bfalse())) {
        out.kind = BoolClass::Kind::TrueBool;
        out.value = b;
        return out;
      }
    }
  }
  out.diagnostics = std::to_string(vs.normals.size()) + " normal form(s) in " + std::to_string(vs.explored) +
                    " node(s), " + (vs.exhaustive() ? "exhaustive" : "budget exhausted");
  for (const auto& n : vs.normals) out.diagnostics += "; " + print(n) + " (" + head_shape(n) + ")";
  return out;
}

bool PorReport::ok() const {
  for (const auto& c : cases) {
    if (!c.ok) return false;
  }
  return true;
}

PorReport por_suite(const Budget& budget) {
  struct Arg {
    std::string name;
    MuppTerm term;
    int value;  // -1 for the looping boolean
  };
  std::vector<Arg> args{
      {"btrue", btrue(), 1},
      {"bfalse", bfalse(), 0},
      {"mu#a.(#a btrue)", MuppTerm::mu("a", MuppTerm::app(MuppTerm::mu_var("a"), btrue())), 1},
      {"mu#a.(#a bfalse)", MuppTerm::mu("a", MuppTerm::app(MuppTerm::mu_var("a"), bfalse())), 0},
      {"loop_bool", loop_bool(), -1},
  };
  PorReport report;
  for (const auto& l : args) {
    for (const auto& r : args) {
      PorCase c;
      c.left = l.name;
      c.right = r.name;
      MuppValues vs = values(MuppTerm::apps({por_term(), l.term, r.term}), budget);
      c.exhaustive = vs.exhaustive();
      for (const auto& n : vs.normals) c.normals.push_back(print(n));
      bool has_true = vs.contains(canonical(btrue()));
      bool plain = l.term.is_abstraction() && r.term.is_abstraction();
      if (l.value >= 0 && r.value >= 0) {
        MuppTerm want = (l.value | r.value) ? btrue() : bfalse();
        bool single = vs.normals.size() == 1 && alpha_eq(vs.normals[0], want);
        // Two mu-wrapped arguments give graphs beyond the budget, so only the
        // found set is checked there.
        if (plain || vs.exhaustive()) {
          c.expectation = "exactly {" + print(want) + "}";
          c.ok = vs.exhaustive() && single;
        } else {
          c.expectation = "finds only " + print(want);
          c.ok = single;
        }
      } else if (l.value == 1 || r.value == 1) {
        c.expectation = "finds " + print(btrue());
        c.ok = has_true;
      } else {
        c.expectation = "no normal form within budget";
        c.ok = vs.normals.empty();
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace lmu
