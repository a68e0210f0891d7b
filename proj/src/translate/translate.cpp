#include "lmupp/translate.hpp"

namespace lmu {

MuppTerm star(const LmuTerm& t) {
  switch (t.kind()) {
    case LmuKind::Var: return MuppTerm::var(t.name());
    case LmuKind::Lam: return MuppTerm::lam(t.name(), star(t.body()));
    case LmuKind::App: return MuppTerm::app(star(t.fun()), star(t.arg()));
    case LmuKind::Mu: {
      MuppTerm head = is_delta(t.naming()) ? MuppTerm::delta() : MuppTerm::mu_var(t.naming());
      return MuppTerm::mu(t.name(), MuppTerm::app(head, star(t.body())));
    }
  }
  throw TermError("unknown lambda-mu node");
}

namespace {

// \x.mu#g.[#a]x
LmuTerm named_identity(const std::string& a) {
  std::string x = fresh_name("x");
  return LmuTerm::lam(x, LmuTerm::mu(fresh_name("g"), a, LmuTerm::var(x)));
}

}  // namespace

LmuTerm circ(const MuppTerm& t) {
  switch (t.kind()) {
    case MuppKind::Var: return LmuTerm::var(t.name());
    case MuppKind::MuVar: return named_identity(t.name());
    case MuppKind::Lam:
    case MuppKind::Lam1: return LmuTerm::lam(t.name(), circ(t.body()));
    case MuppKind::Lam2: return named_identity(std::string(kDelta));
    case MuppKind::Mu: return LmuTerm::mu(t.name(), std::string(kDelta), circ(t.body()));
    case MuppKind::App: {
      const MuppTerm& f = t.fun();
      if (f.is(MuppKind::Lam1)) return subst_lam(circ(f.body()), f.name(), circ(t.arg()));
      if (f.is(MuppKind::Lam2)) return LmuTerm::mu(fresh_name("g"), std::string(kDelta), circ(t.arg()));
      return LmuTerm::app(circ(f), circ(t.arg()));
    }
    default: break;
  }
  throw TermError(std::string("circ is defined on modified terms, got ") + to_string(t.kind()));
}

const char* to_string(JoinOutcome::Status s) {
  switch (s) {
    case JoinOutcome::Status::Joined: return "joined";
    case JoinOutcome::Status::Refuted: return "refuted";
    case JoinOutcome::Status::Inconclusive: return "inconclusive";
    case JoinOutcome::Status::NotAStep: return "not a step";
  }
  return "?";
}

}  // namespace lmu
