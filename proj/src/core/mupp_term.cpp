#include "lmupp/mupp_term.hpp"

#include <algorithm>

namespace lmu {

const char* to_string(MuppKind kind) {
  switch (kind) {
    case MuppKind::Var: return "var";
    case MuppKind::MuVar: return "mvar";
    case MuppKind::Lam: return "lam";
    case MuppKind::Lam1: return "lam1";
    case MuppKind::Lam2: return "lam2";
    case MuppKind::LamVac: return "lamvac";
    case MuppKind::Mu: return "mu";
    case MuppKind::MuVac: return "muvac";
    case MuppKind::App: return "app";
    case MuppKind::Xi: return "xi";
  }
  return "?";
}

const char* to_string(Level level) {
  switch (level) {
    case Level::Core: return "core";
    case Level::Modified: return "modified";
    case Level::XiExtended: return "xi-extended";
  }
  return "?";
}

namespace {

Level own_level(MuppKind kind, const std::string& name) {
  switch (kind) {
    case MuppKind::Lam1:
    case MuppKind::Lam2: return Level::Modified;
    case MuppKind::MuVar: return is_delta(name) ? Level::Modified : Level::Core;
    case MuppKind::LamVac:
    case MuppKind::MuVac:
    case MuppKind::Xi: return Level::XiExtended;
    default: return Level::Core;
  }
}

void require_name(const std::string& name, const char* what) {
  if (name.empty()) throw TermError(std::string("empty name in ") + what);
}

}  // namespace

MuppTerm MuppTerm::make(MuppKind kind, std::string name, MuppTerm c0, MuppTerm c1) {
  auto node = std::make_shared<MuppNode>();
  node->kind = kind;
  node->level = own_level(kind, name);
  node->size = 1;
  switch (kind) {
    case MuppKind::Var:
      node->free_lam.insert(name);
      break;
    case MuppKind::MuVar:
    case MuppKind::Xi:
      if (!is_delta(name)) node->free_mu.insert(name);
      break;
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac:
      node->free_lam = c0.free_lam().without(name);
      node->free_mu = c0.free_mu();
      break;
    case MuppKind::Lam2:
      break;
    case MuppKind::Mu:
    case MuppKind::MuVac:
      node->free_lam = c0.free_lam();
      node->free_mu = c0.free_mu().without(name);
      break;
    case MuppKind::App:
      node->free_lam = NameSet::unite(c0.free_lam(), c1.free_lam());
      if (c0.is(MuppKind::Xi)) {
        node->free_mu = c1.free_mu().without(c0.name());
      } else {
        node->free_mu = NameSet::unite(c0.free_mu(), c1.free_mu());
      }
      break;
  }
  if (c0) {
    node->level = std::max(node->level, c0.level());
    node->size += c0.size();
  }
  if (c1) {
    node->level = std::max(node->level, c1.level());
    node->size += c1.size();
  }
  node->name = std::move(name);
  node->c0 = std::move(c0);
  node->c1 = std::move(c1);
  return MuppTerm(std::move(node));
}

MuppTerm MuppTerm::var(std::string x) {
  require_name(x, "variable");
  return make(MuppKind::Var, std::move(x), {}, {});
}

MuppTerm MuppTerm::mu_var(std::string a) {
  require_name(a, "mu-variable");
  return make(MuppKind::MuVar, std::move(a), {}, {});
}

MuppTerm MuppTerm::delta() { return make(MuppKind::MuVar, std::string(kDelta), {}, {}); }

MuppTerm MuppTerm::lam(std::string x, MuppTerm body) {
  require_name(x, "abstraction");
  return make(MuppKind::Lam, std::move(x), std::move(body), {});
}

MuppTerm MuppTerm::lam1(std::string x, MuppTerm body) {
  require_name(x, "linear abstraction");
  if (count_free_lam(body, x) != 1) {
    throw TermError("non-linear body under \\1" + x + ": the bound variable must occur exactly once");
  }
  return make(MuppKind::Lam1, std::move(x), std::move(body), {});
}

MuppTerm MuppTerm::lam2() { return make(MuppKind::Lam2, {}, {}, {}); }

MuppTerm MuppTerm::lam_vac(std::string x, MuppTerm body) {
  require_name(x, "vacuous abstraction");
  if (body.free_lam().contains(x)) throw TermError("\\'" + x + " binds a variable that occurs in its body");
  return make(MuppKind::LamVac, std::move(x), std::move(body), {});
}

MuppTerm MuppTerm::mu(std::string a, MuppTerm body) {
  require_name(a, "mu-abstraction");
  if (is_delta(a)) throw TermError("delta is a mu-constant and cannot be bound");
  return make(MuppKind::Mu, std::move(a), std::move(body), {});
}

MuppTerm MuppTerm::mu_vac(std::string a, MuppTerm body) {
  require_name(a, "vacuous mu-abstraction");
  if (is_delta(a)) throw TermError("delta is a mu-constant and cannot be bound");
  if (body.free_mu().contains(a)) throw TermError("mu' #" + a + " binds a variable that occurs in its body");
  return make(MuppKind::MuVac, std::move(a), std::move(body), {});
}

MuppTerm MuppTerm::app(MuppTerm fun, MuppTerm arg) {
  return make(MuppKind::App, {}, std::move(fun), std::move(arg));
}

MuppTerm MuppTerm::apps(std::initializer_list<MuppTerm> terms) {
  if (terms.size() == 0) throw TermError("empty application");
  auto it = terms.begin();
  MuppTerm out = *it++;
  for (; it != terms.end(); ++it) out = app(out, *it);
  return out;
}

MuppTerm MuppTerm::xi(std::string a) {
  require_name(a, "xi symbol");
  if (is_delta(a)) throw TermError("delta has no xi symbol");
  return make(MuppKind::Xi, std::move(a), {}, {});
}

MuppTerm MuppTerm::rebuild(MuppKind kind, const std::string& name, MuppTerm c0, MuppTerm c1) {
  switch (kind) {
    case MuppKind::Var: return var(name);
    case MuppKind::MuVar: return mu_var(name);
    case MuppKind::Lam: return lam(name, std::move(c0));
    case MuppKind::Lam1: return lam1(name, std::move(c0));
    case MuppKind::Lam2: return lam2();
    case MuppKind::LamVac: return lam_vac(name, std::move(c0));
    case MuppKind::Mu: return mu(name, std::move(c0));
    case MuppKind::MuVac: return mu_vac(name, std::move(c0));
    case MuppKind::App: return app(std::move(c0), std::move(c1));
    case MuppKind::Xi: return xi(name);
  }
  throw TermError("unknown term kind");
}

MuppKind MuppTerm::kind() const { return node_->kind; }
const std::string& MuppTerm::name() const { return node_->name; }
const MuppTerm& MuppTerm::body() const { return node_->c0; }
const MuppTerm& MuppTerm::fun() const { return node_->c0; }
const MuppTerm& MuppTerm::arg() const { return node_->c1; }

const MuppTerm& MuppTerm::child(std::uint8_t index) const {
  if (index == 0 && node_->c0) return node_->c0;
  if (index == 1 && node_->c1) return node_->c1;
  throw TermError("position does not resolve to a subterm");
}

int MuppTerm::arity() const { return node_->c0 ? (node_->c1 ? 2 : 1) : 0; }

const NameSet& MuppTerm::free_lam() const { return node_->free_lam; }
const NameSet& MuppTerm::free_mu() const { return node_->free_mu; }
Level MuppTerm::level() const { return node_->level; }
std::size_t MuppTerm::size() const { return node_->size; }

bool MuppTerm::is_abstraction() const {
  switch (kind()) {
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::Lam2:
    case MuppKind::LamVac: return true;
    default: return false;
  }
}

bool MuppTerm::is_mu_binder() const { return is(MuppKind::Mu) || is(MuppKind::MuVac); }

bool MuppTerm::is_binder() const { return (is_abstraction() && !is(MuppKind::Lam2)) || is_mu_binder(); }

bool MuppTerm::is_xi_app() const { return is(MuppKind::App) && fun().is(MuppKind::Xi); }

std::size_t count_free_lam(const MuppTerm& t, std::string_view x) {
  if (!t.free_lam().contains(x)) return 0;
  switch (t.kind()) {
    case MuppKind::Var: return 1;
    case MuppKind::App: return count_free_lam(t.fun(), x) + count_free_lam(t.arg(), x);
    default: return count_free_lam(t.body(), x);
  }
}

FreeVars free_vars(const MuppTerm& t) { return {t.free_lam(), t.free_mu()}; }

namespace {

// Renames the mu-binder of (xi#a u) when a would capture something.
MuppTerm fresh_xi_app(const MuppTerm& t, const NameSet& avoid) {
  const std::string& a = t.fun().name();
  if (!avoid.contains(a)) return t;
  std::string a2 = fresh_name(a);
  return MuppTerm::app(MuppTerm::xi(a2), rename_mu(t.arg(), a, a2));
}

}  // namespace

MuppTerm subst_lam(const MuppTerm& t, const std::string& x, const MuppTerm& v) {
  if (!t.free_lam().contains(x)) return t;
  switch (t.kind()) {
    case MuppKind::Var: return v;
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac: {
      std::string y = t.name();
      MuppTerm body = t.body();
      if (v.free_lam().contains(y)) {
        std::string y2 = fresh_name(y);
        body = subst_lam(body, y, MuppTerm::var(y2));
        y = std::move(y2);
      }
      return MuppTerm::rebuild(t.kind(), y, subst_lam(body, x, v), {});
    }
    case MuppKind::Mu:
    case MuppKind::MuVac: {
      std::string a = t.name();
      MuppTerm body = t.body();
      if (v.free_mu().contains(a)) {
        std::string a2 = fresh_name(a);
        body = rename_mu(body, a, a2);
        a = std::move(a2);
      }
      return MuppTerm::rebuild(t.kind(), a, subst_lam(body, x, v), {});
    }
    case MuppKind::App: {
      if (t.is_xi_app()) {
        MuppTerm r = fresh_xi_app(t, v.free_mu());
        return MuppTerm::app(r.fun(), subst_lam(r.arg(), x, v));
      }
      return MuppTerm::app(subst_lam(t.fun(), x, v), subst_lam(t.arg(), x, v));
    }
    default: return t;
  }
}

MuppTerm subst_mu(const MuppTerm& t, const std::string& a, const MuppTerm& v) {
  if (!t.free_mu().contains(a)) return t;
  switch (t.kind()) {
    case MuppKind::MuVar: return v;
    case MuppKind::Xi: return v.is(MuppKind::MuVar) ? MuppTerm::xi(v.name()) : t;
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac: {
      std::string y = t.name();
      MuppTerm body = t.body();
      if (v.free_lam().contains(y)) {
        std::string y2 = fresh_name(y);
        body = subst_lam(body, y, MuppTerm::var(y2));
        y = std::move(y2);
      }
      return MuppTerm::rebuild(t.kind(), y, subst_mu(body, a, v), {});
    }
    case MuppKind::Mu:
    case MuppKind::MuVac: {
      std::string b = t.name();
      MuppTerm body = t.body();
      if (v.free_mu().contains(b)) {
        std::string b2 = fresh_name(b);
        body = rename_mu(body, b, b2);
        b = std::move(b2);
      }
      return MuppTerm::rebuild(t.kind(), b, subst_mu(body, a, v), {});
    }
    case MuppKind::App: {
      if (t.is_xi_app()) {
        MuppTerm r = fresh_xi_app(t, v.free_mu());
        return MuppTerm::app(r.fun(), subst_mu(r.arg(), a, v));
      }
      return MuppTerm::app(subst_mu(t.fun(), a, v), subst_mu(t.arg(), a, v));
    }
    default: return t;
  }
}

MuppTerm rename_mu(const MuppTerm& t, const std::string& a, const std::string& b) {
  if (a == b) return t;
  return subst_mu(t, a, MuppTerm::mu_var(b));
}

namespace {

struct Canon {
  std::vector<const std::string*> lams, mus;
  std::string out;

  static long find(const std::vector<const std::string*>& stack, const std::string& name) {
    for (std::size_t i = stack.size(); i-- > 0;) {
      if (*stack[i] == name) return static_cast<long>(stack.size() - 1 - i);
    }
    return -1;
  }

  void ref(char bound, char free, const std::vector<const std::string*>& stack, const std::string& name) {
    long idx = find(stack, name);
    if (idx >= 0) {
      out += bound;
      out += std::to_string(idx);
    } else {
      out += free;
      out += name;
    }
    out += '.';
  }

  void walk(const MuppTerm& t) {
    switch (t.kind()) {
      case MuppKind::Var: ref('v', 'V', lams, t.name()); return;
      case MuppKind::MuVar: ref('m', 'M', mus, t.name()); return;
      case MuppKind::Xi: ref('x', 'X', mus, t.name()); return;
      case MuppKind::Lam2: out += '2'; return;
      case MuppKind::Lam:
      case MuppKind::Lam1:
      case MuppKind::LamVac:
        out += t.is(MuppKind::Lam) ? 'L' : (t.is(MuppKind::Lam1) ? '1' : '\'');
        lams.push_back(&t.name());
        walk(t.body());
        lams.pop_back();
        return;
      case MuppKind::Mu:
      case MuppKind::MuVac:
        out += t.is(MuppKind::Mu) ? 'U' : 'u';
        mus.push_back(&t.name());
        walk(t.body());
        mus.pop_back();
        return;
      case MuppKind::App:
        if (t.is_xi_app()) {
          out += 'Z';
          mus.push_back(&t.fun().name());
          walk(t.arg());
          mus.pop_back();
          return;
        }
        out += 'A';
        walk(t.fun());
        walk(t.arg());
        return;
    }
  }
};

}  // namespace

std::string canonical(const MuppTerm& t) {
  Canon c;
  c.out.reserve(t.size() * 3);
  c.walk(t);
  return std::move(c.out);
}

bool alpha_eq(const MuppTerm& a, const MuppTerm& b) {
  if (a.same_node(b)) return true;
  return a.size() == b.size() && canonical(a) == canonical(b);
}

const MuppTerm& subterm_at(const MuppTerm& t, const Position& pos) {
  const MuppTerm* cur = &t;
  for (auto i : pos.path()) cur = &cur->child(i);
  return *cur;
}

namespace {

MuppTerm rebuild_lenient(MuppKind kind, const std::string& name, MuppTerm c0) {
  if (kind == MuppKind::Lam1 && count_free_lam(c0, name) != 1) return MuppTerm::lam(name, std::move(c0));
  if (kind == MuppKind::LamVac && c0.free_lam().contains(name)) return MuppTerm::lam(name, std::move(c0));
  if (kind == MuppKind::MuVac && c0.free_mu().contains(name)) return MuppTerm::mu(name, std::move(c0));
  return MuppTerm::rebuild(kind, name, std::move(c0), {});
}

MuppTerm replace_rec(const MuppTerm& t, const std::vector<std::uint8_t>& path, std::size_t i,
                     MuppTerm replacement) {
  if (i == path.size()) return replacement;
  if (t.is(MuppKind::App)) {
    if (path[i] == 0) return MuppTerm::app(replace_rec(t.fun(), path, i + 1, std::move(replacement)), t.arg());
    return MuppTerm::app(t.fun(), replace_rec(t.arg(), path, i + 1, std::move(replacement)));
  }
  if (path[i] != 0 || t.arity() != 1) throw TermError("position does not resolve to a subterm");
  return rebuild_lenient(t.kind(), t.name(), replace_rec(t.body(), path, i + 1, std::move(replacement)));
}

std::string pick_name(const std::string& current, const NameSet& taken) {
  std::string base = base_name(current);
  if (base == current) return current;
  if (!taken.contains(base)) return base;
  for (int i = 1;; ++i) {
    std::string c = base + std::to_string(i);
    if (!taken.contains(c)) return c;
  }
}

}  // namespace

MuppTerm replace_at(const MuppTerm& t, const Position& pos, MuppTerm replacement) {
  return replace_rec(t, pos.path(), 0, std::move(replacement));
}

MuppTerm tidy(const MuppTerm& t) {
  switch (t.kind()) {
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac: {
      const std::string& x = t.name();
      std::string c = pick_name(x, t.body().free_lam().without(x));
      MuppTerm body = c == x ? t.body() : subst_lam(t.body(), x, MuppTerm::var(c));
      return MuppTerm::rebuild(t.kind(), c, tidy(body), {});
    }
    case MuppKind::Mu:
    case MuppKind::MuVac: {
      const std::string& a = t.name();
      std::string c = pick_name(a, t.body().free_mu().without(a));
      MuppTerm body = c == a ? t.body() : rename_mu(t.body(), a, c);
      return MuppTerm::rebuild(t.kind(), c, tidy(body), {});
    }
    case MuppKind::App: {
      if (t.is_xi_app()) {
        const std::string& a = t.fun().name();
        std::string c = pick_name(a, t.arg().free_mu().without(a));
        MuppTerm body = c == a ? t.arg() : rename_mu(t.arg(), a, c);
        return MuppTerm::app(MuppTerm::xi(c), tidy(body));
      }
      return MuppTerm::app(tidy(t.fun()), tidy(t.arg()));
    }
    default: return t;
  }
}

}  // namespace lmu
