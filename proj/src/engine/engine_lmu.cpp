#include "lmupp/engine_lmu.hpp"

#include <algorithm>

namespace lmu {

const char* to_string(LmuRule rule) {
  switch (rule) {
    case LmuRule::CLam: return "c_lam";
    case LmuRule::CMu: return "c_mu";
    case LmuRule::S1naming: return "s1";
    case LmuRule::S2vacuous: return "s2";
    case LmuRule::S3eta: return "s3";
    case LmuRule::Prime: return "prime";
  }
  return "?";
}

namespace {

// Does [n]u, or a naming inside u that refers to the same free a, name an
// abstraction?
bool names_abstraction(const LmuTerm& t, const std::string& a) {
  if (!t.free_mu().contains(a)) return false;
  switch (t.kind()) {
    case LmuKind::Var: return false;
    case LmuKind::Lam: return names_abstraction(t.body(), a);
    case LmuKind::App: return names_abstraction(t.fun(), a) || names_abstraction(t.arg(), a);
    case LmuKind::Mu:
      if (t.name() == a) return false;
      if (t.naming() == a && t.body().is(LmuKind::Lam)) return true;
      return names_abstraction(t.body(), a);
  }
  return false;
}

struct PrimeOccurrence {
  std::vector<std::uint8_t> path;  // relative to the body of the outer mu
  const LmuTerm* node;             // the mu#g.[#a]v node
};

class PrimeScan {
 public:
  explicit PrimeScan(const std::string& a) : a_(a) {}

  std::vector<PrimeOccurrence> run(const LmuTerm& body) {
    visit(body);
    return std::move(out_);
  }

 private:
  bool captured(const LmuTerm& v) const {
    for (const auto* x : lams_) {
      if (v.free_lam().contains(*x)) return true;
    }
    for (const auto* b : mus_) {
      if (v.free_mu().contains(*b)) return true;
    }
    return false;
  }

  void visit(const LmuTerm& s) {
    if (!s.free_mu().contains(a_)) return;
    switch (s.kind()) {
      case LmuKind::Var: return;
      case LmuKind::Lam:
        lams_.push_back(&s.name());
        descend(s.body(), 0);
        lams_.pop_back();
        return;
      case LmuKind::App:
        descend(s.fun(), 0);
        descend(s.arg(), 1);
        return;
      case LmuKind::Mu:
        if (s.name() == a_) return;
        mus_.push_back(&s.name());
        if (s.naming() == a_ && !s.body().free_mu().contains(a_) && !captured(s.body())) {
          out_.push_back({path_, &s});
        }
        descend(s.body(), 0);
        mus_.pop_back();
        return;
    }
  }

  void descend(const LmuTerm& s, std::uint8_t index) {
    path_.push_back(index);
    visit(s);
    path_.pop_back();
  }

  const std::string& a_;
  std::vector<std::uint8_t> path_;
  std::vector<const std::string*> lams_, mus_;
  std::vector<PrimeOccurrence> out_;
};

class LmuEnumerator {
 public:
  LmuEnumerator(const LmuTerm& root, LmuMode mode) : root_(root), mode_(mode) {}

  std::vector<LmuRedex> run() {
    walk(root_);
    return std::move(out_);
  }

 private:
  void emit(LmuRule rule, LmuTerm local, std::optional<Position> occurrence = std::nullopt) {
    Position at(path_);
    LmuTerm reduct = path_.empty() ? std::move(local) : replace_at(root_, at, std::move(local));
    out_.push_back({rule, std::move(at), std::move(reduct), std::move(occurrence)});
  }

  void walk(const LmuTerm& t) {
    switch (t.kind()) {
      case LmuKind::Var: return;
      case LmuKind::Lam: descend(t.body(), 0); return;
      case LmuKind::App:
        app_rules(t);
        descend(t.fun(), 0);
        descend(t.arg(), 1);
        return;
      case LmuKind::Mu:
        mu_rules(t);
        descend(t.body(), 0);
        return;
    }
  }

  void descend(const LmuTerm& t, std::uint8_t index) {
    path_.push_back(index);
    walk(t);
    path_.pop_back();
  }

  void app_rules(const LmuTerm& t) {
    const LmuTerm& f = t.fun();
    const LmuTerm& v = t.arg();
    if (f.is(LmuKind::Lam)) {
      emit(LmuRule::CLam, subst_lam(f.body(), f.name(), v));
    } else if (f.is(LmuKind::Mu)) {
      std::string a = f.name();
      Named n{f.naming(), f.body()};
      if (v.free_mu().contains(a)) {
        std::string a2 = fresh_name(base_name(a));
        n = {n.naming == a ? a2 : n.naming, rename_mu(n.body, a, a2)};
        a = a2;
      }
      Named r = struct_subst(n, a, v);
      emit(LmuRule::CMu, LmuTerm::mu(a, r.naming, r.body));
    }
  }

  void mu_rules(const LmuTerm& t) {
    const std::string& a = t.name();
    const LmuTerm& u = t.body();
    if (u.is(LmuKind::Mu)) {
      const std::string& b = u.name();
      const std::string& n = t.naming();
      std::string naming = u.naming() == b ? n : u.naming();
      emit(LmuRule::S1naming, LmuTerm::mu(a, naming, rename_mu(u.body(), b, n)));
    }
    if (t.naming() == a && !u.free_mu().contains(a)) emit(LmuRule::S2vacuous, u);
    if ((t.naming() == a && u.is(LmuKind::Lam)) || names_abstraction(u, a)) {
      std::string x = fresh_name("x");
      Named r = struct_subst(Named{t.naming(), u}, a, LmuTerm::var(x));
      emit(LmuRule::S3eta, LmuTerm::lam(x, LmuTerm::mu(a, r.naming, r.body)));
    }
    if (mode_ == LmuMode::MuPlus) {
      std::vector<std::string> seen;
      for (const auto& o : PrimeScan(a).run(u)) {
        const LmuTerm& v = o.node->body();
        std::string key = canonical(v);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        std::vector<std::uint8_t> p = path_;
        p.push_back(0);
        p.insert(p.end(), o.path.begin(), o.path.end());
        emit(LmuRule::Prime, v, Position(std::move(p)));
      }
    }
  }

  const LmuTerm& root_;
  LmuMode mode_;
  std::vector<std::uint8_t> path_;
  std::vector<LmuRedex> out_;
};

}  // namespace

std::vector<LmuRedex> redexes_lmu(const LmuTerm& t, LmuMode mode) { return LmuEnumerator(t, mode).run(); }

NormalizeResult normalize_lmu(const LmuTerm& t, std::size_t fuel, bool keep_trace) {
  NormalizeResult r;
  LmuTerm cur = t;
  while (true) {
    std::vector<LmuRedex> rs = redexes_lmu(cur, LmuMode::Mu);
    if (rs.empty()) {
      r.normal = cur;
      return r;
    }
    if (r.steps == fuel) return r;
    ++r.steps;
    cur = rs.front().reduct;
    if (keep_trace) r.trace.push_back(std::move(rs.front()));
  }
}

LmuExplorer make_lmu_explorer(LmuMode mode) {
  return LmuExplorer([mode](const LmuTerm& t) { return redexes_lmu(t, mode); },
                     [](const LmuTerm& t) { return canonical(t); });
}

LmuValues values_lmu(const LmuTerm& t, const Budget& budget, LmuMode mode) {
  LmuExplorer ex = make_lmu_explorer(mode);
  ex.run(t, budget);
  return ex.values();
}

}  // namespace lmu
