#include "lmupp/engine_mupp.hpp"

#include <algorithm>
#include <array>

namespace lmu {

namespace {

constexpr std::array<const char*, 14> kRuleNames = {"C_lam", "C_mu",   "S1",        "S2",        "S3",
                                                    "S4",    "S5",     "S6",        "xi_intro",  "xi_lam",
                                                    "xi_mu", "xi_hit", "xi_left",   "xi_right"};

}  // namespace

const char* to_string(MuppRule rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<MuppRule> mupp_rule_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (name == kRuleNames[i]) return static_cast<MuppRule>(i);
  }
  return std::nullopt;
}

bool has_xi(const MuppTerm& t) {
  switch (t.kind()) {
    case MuppKind::Xi: return true;
    case MuppKind::App: return has_xi(t.fun()) || has_xi(t.arg());
    default: return t.arity() == 1 && has_xi(t.body());
  }
}

namespace {

void check_level(const MuppTerm& t, MuppMode mode) {
  Level max = mode == MuppMode::Core ? Level::Core : mode == MuppMode::Modified ? Level::Modified : Level::XiExtended;
  if (t.level() > max) {
    throw TermError(std::string("term is ") + to_string(t.level()) + " but the engine mode accepts at most " +
                    to_string(max) + " terms");
  }
}

// Occurrence of (#a v) for a fixed mu-binder #a, with the names bound
// between the binder's body and the occurrence.
struct Occurrence {
  std::vector<std::uint8_t> path;  // relative to the binder's body
  const MuppTerm* app;
  bool captured;  // some free variable of v is bound on the path
};

class OccurrenceScan {
 public:
  explicit OccurrenceScan(const std::string& a) : a_(a) {}

  std::vector<Occurrence> run(const MuppTerm& body) {
    visit(body);
    return std::move(out_);
  }

 private:
  bool captures(const MuppTerm& v) const {
    for (const auto* x : lams_) {
      if (v.free_lam().contains(*x)) return true;
    }
    for (const auto* b : mus_) {
      if (v.free_mu().contains(*b)) return true;
    }
    return false;
  }

  void visit(const MuppTerm& s) {
    if (!s.free_mu().contains(a_)) return;
    switch (s.kind()) {
      case MuppKind::App:
        if (s.is_xi_app()) {
          if (s.fun().name() == a_) return;
          mus_.push_back(&s.fun().name());
          descend(s.arg(), 1);
          mus_.pop_back();
          return;
        }
        if (s.fun().is_mu_var(a_)) out_.push_back({path_, &s, captures(s.arg())});
        descend(s.fun(), 0);
        descend(s.arg(), 1);
        return;
      case MuppKind::Lam:
      case MuppKind::Lam1:
      case MuppKind::LamVac:
        lams_.push_back(&s.name());
        descend(s.body(), 0);
        lams_.pop_back();
        return;
      case MuppKind::Mu:
      case MuppKind::MuVac:
        if (s.name() == a_) return;
        mus_.push_back(&s.name());
        descend(s.body(), 0);
        mus_.pop_back();
        return;
      default: return;
    }
  }

  void descend(const MuppTerm& s, std::uint8_t index) {
    path_.push_back(index);
    visit(s);
    path_.pop_back();
  }

  const std::string& a_;
  std::vector<std::uint8_t> path_;
  std::vector<const std::string*> lams_, mus_;
  std::vector<Occurrence> out_;
};

class Enumerator {
 public:
  Enumerator(const MuppTerm& root, MuppMode mode) : root_(root), mode_(mode) {}

  std::vector<Redex> run() {
    walk(root_);
    return std::move(out_);
  }

 private:
  MuppTerm abstraction(const std::string& y, MuppTerm body) const {
    return mode_ == MuppMode::Modified ? MuppTerm::lam1(y, std::move(body)) : MuppTerm::lam(y, std::move(body));
  }

  MuppTerm identity() const {
    return mode_ == MuppMode::Modified ? MuppTerm::lam2() : MuppTerm::lam("w", MuppTerm::var("w"));
  }

  void emit(MuppRule rule, MuppTerm local, std::optional<Position> occurrence = std::nullopt) {
    Position at(path_);
    MuppTerm reduct = path_.empty() ? std::move(local) : replace_at(root_, at, std::move(local));
    out_.push_back({rule, std::move(at), std::move(reduct), std::move(occurrence)});
  }

  void walk(const MuppTerm& t) {
    switch (t.kind()) {
      case MuppKind::App:
        app_rules(t);
        if (t.is_xi_app()) {
          if (mode_ == MuppMode::Weak) xi_rules(t);
          descend(t.arg(), 1);
          return;
        }
        descend(t.fun(), 0);
        descend(t.arg(), 1);
        return;
      case MuppKind::Lam:
      case MuppKind::Lam1:
      case MuppKind::LamVac: descend(t.body(), 0); return;
      case MuppKind::Mu:
      case MuppKind::MuVac:
        mu_rules(t);
        descend(t.body(), 0);
        return;
      default: return;
    }
  }

  void descend(const MuppTerm& t, std::uint8_t index) {
    path_.push_back(index);
    walk(t);
    path_.pop_back();
  }

  void app_rules(const MuppTerm& t) {
    const MuppTerm& f = t.fun();
    const MuppTerm& v = t.arg();
    if (f.is_abstraction()) {
      emit(MuppRule::CLam, f.is(MuppKind::Lam2) ? v : subst_lam(f.body(), f.name(), v));
    } else if (f.is_mu_binder()) {
      std::string b = fresh_name(base_name(f.name()));
      std::string y = fresh_name("y");
      MuppTerm k = abstraction(y, MuppTerm::app(MuppTerm::mu_var(b), MuppTerm::app(MuppTerm::var(y), v)));
      emit(MuppRule::CMu, MuppTerm::mu(b, subst_mu(f.body(), f.name(), k)));
    } else if (f.is(MuppKind::App) && f.fun().is(MuppKind::MuVar)) {
      emit(MuppRule::S1, f);
    } else if (f.is(MuppKind::MuVar)) {
      if (v.is(MuppKind::App) && v.fun().is(MuppKind::MuVar)) emit(MuppRule::S3, v);
      if (v.is_mu_binder()) {
        std::string y = fresh_name("y");
        emit(MuppRule::S4, subst_mu(v.body(), v.name(), abstraction(y, MuppTerm::app(f, MuppTerm::var(y)))));
      }
    }
  }

  void xi_rules(const MuppTerm& t) {
    const MuppTerm& xi = t.fun();
    const std::string& a = xi.name();
    const MuppTerm& v = t.arg();
    if (v.is_abstraction() && !v.is(MuppKind::Lam2) && !v.body().free_lam().contains(v.name())) {
      emit(MuppRule::XiLamVac, MuppTerm::app(xi, v.body()));
    } else if (v.is_mu_binder() && !v.body().free_mu().contains(v.name())) {
      emit(MuppRule::XiMuVac, MuppTerm::app(xi, v.body()));
    } else if (v.is_xi_app()) {
      if (!v.arg().free_mu().contains(v.fun().name())) emit(MuppRule::XiMuVac, MuppTerm::app(xi, v.arg()));
    } else if (v.is(MuppKind::App)) {
      if (v.fun().is_mu_var(a)) {
        if (!v.arg().free_mu().contains(a)) emit(MuppRule::XiHit, v.arg());
      } else {
        emit(MuppRule::XiLeft, MuppTerm::app(xi, v.fun()));
        emit(MuppRule::XiRight, MuppTerm::app(xi, v.arg()));
      }
    }
  }

  void mu_rules(const MuppTerm& t) {
    const std::string& a = t.name();
    const MuppTerm& u = t.body();
    if (u.is_mu_binder()) {
      emit(MuppRule::S2, MuppTerm::rebuild(t.kind(), a, subst_mu(u.body(), u.name(), identity()), {}));
    }
    if (u.free_mu().contains(a)) {
      std::vector<Occurrence> occs = OccurrenceScan(a).run(u);
      auto s5 = std::find_if(occs.begin(), occs.end(), [](const Occurrence& o) { return o.app->arg().is_abstraction(); });
      if (s5 != occs.end()) {
        std::string z = fresh_name("z");
        std::string b = fresh_name(base_name(a));
        std::string y = fresh_name("y");
        MuppTerm k = abstraction(
            y, MuppTerm::app(MuppTerm::mu_var(b), MuppTerm::app(MuppTerm::var(y), MuppTerm::var(z))));
        emit(MuppRule::S5, MuppTerm::lam(z, MuppTerm::mu(b, subst_mu(u, a, k))), occurrence(*s5));
      }
      if (mode_ != MuppMode::Weak) {
        std::vector<std::string> seen;
        for (const auto& o : occs) {
          const MuppTerm& v = o.app->arg();
          if (o.captured || v.free_mu().contains(a)) continue;
          std::string key = canonical(v);
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
          seen.push_back(std::move(key));
          emit(MuppRule::S6, v, occurrence(o));
        }
      }
    }
    if (mode_ == MuppMode::Weak) emit(MuppRule::Xi0, MuppTerm::app(MuppTerm::xi(a), u));
  }

  Position occurrence(const Occurrence& o) const {
    std::vector<std::uint8_t> p = path_;
    p.push_back(0);
    p.insert(p.end(), o.path.begin(), o.path.end());
    return Position(std::move(p));
  }

  const MuppTerm& root_;
  MuppMode mode_;
  std::vector<std::uint8_t> path_;
  std::vector<Redex> out_;
};

}  // namespace

std::vector<Redex> redexes_mupp(const MuppTerm& t, MuppMode mode) {
  check_level(t, mode);
  return Enumerator(t, mode).run();
}

MuppTerm step(const MuppTerm& t, MuppRule rule, const Position& at, MuppMode mode,
              const std::optional<Position>& occurrence) {
  std::vector<Redex> matches;
  for (auto& r : redexes_mupp(t, mode)) {
    if (r.rule == rule && r.at == at && (!occurrence || r.occurrence == occurrence)) matches.push_back(std::move(r));
  }
  if (matches.empty()) throw TermError(std::string("not a redex: ") + to_string(rule) + " @ " + at.str());
  if (matches.size() > 1) {
    throw TermError(std::string("ambiguous redex: ") + to_string(rule) + " @ " + at.str() +
                    " has several occurrences; give one");
  }
  return matches.front().reduct;
}

MuppExplorer make_mupp_explorer(MuppMode mode) {
  return MuppExplorer([mode](const MuppTerm& t) { return redexes_mupp(t, mode); },
                      [](const MuppTerm& t) { return canonical(t); });
}

MuppValues values(const MuppTerm& t, const Budget& budget, MuppMode mode) {
  check_level(t, mode);
  MuppExplorer ex = make_mupp_explorer(mode);
  ex.keep_terms(false);
  ex.run(t, budget);
  return ex.values();
}

MuppValues weak_values(const MuppTerm& t, const Budget& budget) {
  MuppValues all = values(t, budget, MuppMode::Weak);
  MuppValues out;
  for (std::size_t i = 0; i < all.normals.size(); ++i) {
    if (has_xi(all.normals[i])) continue;
    out.normals.push_back(all.normals[i]);
    out.canon.push_back(all.canon[i]);
  }
  out.explored = all.explored;
  out.pending = all.pending;
  return out;
}

}  // namespace lmu
