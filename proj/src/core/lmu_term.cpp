#include "lmupp/lmu_term.hpp"

namespace lmu {

LmuTerm LmuTerm::make(LmuKind kind, std::string name, std::string naming, LmuTerm c0, LmuTerm c1) {
  auto node = std::make_shared<LmuNode>();
  node->kind = kind;
  node->size = 1;
  switch (kind) {
    case LmuKind::Var:
      node->free_lam.insert(name);
      break;
    case LmuKind::Lam:
      node->free_lam = c0.free_lam().without(name);
      node->free_mu = c0.free_mu();
      break;
    case LmuKind::App:
      node->free_lam = NameSet::unite(c0.free_lam(), c1.free_lam());
      node->free_mu = NameSet::unite(c0.free_mu(), c1.free_mu());
      break;
    case LmuKind::Mu: {
      node->free_lam = c0.free_lam();
      NameSet mus = c0.free_mu();
      if (!is_delta(naming)) mus.insert(naming);
      mus.erase(name);
      node->free_mu = std::move(mus);
      break;
    }
  }
  if (c0) node->size += c0.size();
  if (c1) node->size += c1.size();
  node->name = std::move(name);
  node->naming = std::move(naming);
  node->c0 = std::move(c0);
  node->c1 = std::move(c1);
  return LmuTerm(std::move(node));
}

LmuTerm LmuTerm::var(std::string x) {
  if (x.empty()) throw TermError("empty variable name");
  return make(LmuKind::Var, std::move(x), {}, {}, {});
}

LmuTerm LmuTerm::lam(std::string x, LmuTerm body) {
  if (x.empty()) throw TermError("empty abstraction name");
  return make(LmuKind::Lam, std::move(x), {}, std::move(body), {});
}

LmuTerm LmuTerm::app(LmuTerm fun, LmuTerm arg) { return make(LmuKind::App, {}, {}, std::move(fun), std::move(arg)); }

LmuTerm LmuTerm::apps(std::initializer_list<LmuTerm> terms) {
  if (terms.size() == 0) throw TermError("empty application");
  auto it = terms.begin();
  LmuTerm out = *it++;
  for (; it != terms.end(); ++it) out = app(out, *it);
  return out;
}

LmuTerm LmuTerm::mu(std::string binder, std::string naming, LmuTerm body) {
  if (binder.empty() || naming.empty()) throw TermError("empty mu-variable name");
  if (is_delta(binder)) throw TermError("delta is a mu-constant and cannot be bound");
  return make(LmuKind::Mu, std::move(binder), std::move(naming), std::move(body), {});
}

LmuKind LmuTerm::kind() const { return node_->kind; }
const std::string& LmuTerm::name() const { return node_->name; }
const std::string& LmuTerm::naming() const { return node_->naming; }
const LmuTerm& LmuTerm::body() const { return node_->c0; }
const LmuTerm& LmuTerm::fun() const { return node_->c0; }
const LmuTerm& LmuTerm::arg() const { return node_->c1; }

const LmuTerm& LmuTerm::child(std::uint8_t index) const {
  if (index == 0 && node_->c0) return node_->c0;
  if (index == 1 && node_->c1) return node_->c1;
  throw TermError("position does not resolve to a subterm");
}

int LmuTerm::arity() const { return node_->c0 ? (node_->c1 ? 2 : 1) : 0; }
const NameSet& LmuTerm::free_lam() const { return node_->free_lam; }
const NameSet& LmuTerm::free_mu() const { return node_->free_mu; }
std::size_t LmuTerm::size() const { return node_->size; }

FreeVars free_vars(const LmuTerm& t) { return {t.free_lam(), t.free_mu()}; }

namespace {

// Renames the binder of a mu node to a fresh name, keeping the naming in sync.
LmuTerm refresh_mu_binder(const LmuTerm& t) {
  const std::string& a = t.name();
  std::string a2 = fresh_name(a);
  std::string naming = t.naming() == a ? a2 : t.naming();
  return LmuTerm::mu(a2, naming, rename_mu(t.body(), a, a2));
}

LmuTerm refresh_lam_binder(const LmuTerm& t) {
  std::string y2 = fresh_name(t.name());
  return LmuTerm::lam(y2, subst_lam(t.body(), t.name(), LmuTerm::var(y2)));
}

}  // namespace

LmuTerm subst_lam(const LmuTerm& t, const std::string& x, const LmuTerm& v) {
  if (!t.free_lam().contains(x)) return t;
  switch (t.kind()) {
    case LmuKind::Var: return v;
    case LmuKind::Lam: {
      LmuTerm r = v.free_lam().contains(t.name()) ? refresh_lam_binder(t) : t;
      return LmuTerm::lam(r.name(), subst_lam(r.body(), x, v));
    }
    case LmuKind::App: return LmuTerm::app(subst_lam(t.fun(), x, v), subst_lam(t.arg(), x, v));
    case LmuKind::Mu: {
      LmuTerm r = v.free_mu().contains(t.name()) ? refresh_mu_binder(t) : t;
      return LmuTerm::mu(r.name(), r.naming(), subst_lam(r.body(), x, v));
    }
  }
  return t;
}

LmuTerm rename_mu(const LmuTerm& t, const std::string& a, const std::string& b) {
  if (a == b || !t.free_mu().contains(a)) return t;
  switch (t.kind()) {
    case LmuKind::Var: return t;
    case LmuKind::Lam: return LmuTerm::lam(t.name(), rename_mu(t.body(), a, b));
    case LmuKind::App: return LmuTerm::app(rename_mu(t.fun(), a, b), rename_mu(t.arg(), a, b));
    case LmuKind::Mu: {
      LmuTerm r = t.name() == b ? refresh_mu_binder(t) : t;
      std::string naming = r.naming() == a ? b : r.naming();
      return LmuTerm::mu(r.name(), naming, rename_mu(r.body(), a, b));
    }
  }
  return t;
}

Named struct_subst(const Named& n, const std::string& a, const LmuTerm& v) {
  LmuTerm body = struct_subst(n.body, a, v);
  if (n.naming == a) body = LmuTerm::app(body, v);
  return {n.naming, body};
}

LmuTerm struct_subst(const LmuTerm& t, const std::string& a, const LmuTerm& v) {
  if (!t.free_mu().contains(a)) return t;
  switch (t.kind()) {
    case LmuKind::Var: return t;
    case LmuKind::Lam: {
      LmuTerm r = v.free_lam().contains(t.name()) ? refresh_lam_binder(t) : t;
      return LmuTerm::lam(r.name(), struct_subst(r.body(), a, v));
    }
    case LmuKind::App: return LmuTerm::app(struct_subst(t.fun(), a, v), struct_subst(t.arg(), a, v));
    case LmuKind::Mu: {
      LmuTerm r = v.free_mu().contains(t.name()) ? refresh_mu_binder(t) : t;
      Named n = struct_subst(Named{r.naming(), r.body()}, a, v);
      return LmuTerm::mu(r.name(), n.naming, n.body);
    }
  }
  return t;
}

namespace {

struct LmuCanon {
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

  void walk(const LmuTerm& t) {
    switch (t.kind()) {
      case LmuKind::Var: ref('v', 'V', lams, t.name()); return;
      case LmuKind::Lam:
        out += 'L';
        lams.push_back(&t.name());
        walk(t.body());
        lams.pop_back();
        return;
      case LmuKind::App:
        out += 'A';
        walk(t.fun());
        walk(t.arg());
        return;
      case LmuKind::Mu:
        out += 'U';
        mus.push_back(&t.name());
        ref('m', 'M', mus, t.naming());
        walk(t.body());
        mus.pop_back();
        return;
    }
  }
};

LmuTerm replace_rec(const LmuTerm& t, const std::vector<std::uint8_t>& path, std::size_t i, LmuTerm repl) {
  if (i == path.size()) return repl;
  switch (t.kind()) {
    case LmuKind::App:
      if (path[i] == 0) return LmuTerm::app(replace_rec(t.fun(), path, i + 1, std::move(repl)), t.arg());
      return LmuTerm::app(t.fun(), replace_rec(t.arg(), path, i + 1, std::move(repl)));
    case LmuKind::Lam:
      if (path[i] != 0) break;
      return LmuTerm::lam(t.name(), replace_rec(t.body(), path, i + 1, std::move(repl)));
    case LmuKind::Mu:
      if (path[i] != 0) break;
      return LmuTerm::mu(t.name(), t.naming(), replace_rec(t.body(), path, i + 1, std::move(repl)));
    case LmuKind::Var: break;
  }
  throw TermError("position does not resolve to a subterm");
}

std::string pick_readable(const std::string& current, const NameSet& taken) {
  std::string base = base_name(current);
  if (base == current) return current;
  if (!taken.contains(base)) return base;
  for (int i = 1;; ++i) {
    std::string c = base + std::to_string(i);
    if (!taken.contains(c)) return c;
  }
}

}  // namespace

std::string canonical(const LmuTerm& t) {
  LmuCanon c;
  c.walk(t);
  return std::move(c.out);
}

bool alpha_eq(const LmuTerm& a, const LmuTerm& b) {
  if (a.same_node(b)) return true;
  return a.size() == b.size() && canonical(a) == canonical(b);
}

const LmuTerm& subterm_at(const LmuTerm& t, const Position& pos) {
  const LmuTerm* cur = &t;
  for (auto i : pos.path()) cur = &cur->child(i);
  return *cur;
}

LmuTerm replace_at(const LmuTerm& t, const Position& pos, LmuTerm replacement) {
  return replace_rec(t, pos.path(), 0, std::move(replacement));
}

LmuTerm tidy(const LmuTerm& t) {
  switch (t.kind()) {
    case LmuKind::Var: return t;
    case LmuKind::App: return LmuTerm::app(tidy(t.fun()), tidy(t.arg()));
    case LmuKind::Lam: {
      std::string c = pick_readable(t.name(), t.body().free_lam().without(t.name()));
      LmuTerm body = c == t.name() ? t.body() : subst_lam(t.body(), t.name(), LmuTerm::var(c));
      return LmuTerm::lam(c, tidy(body));
    }
    case LmuKind::Mu: {
      NameSet taken = t.body().free_mu();
      if (!is_delta(t.naming())) taken.insert(t.naming());
      taken.erase(t.name());
      std::string c = pick_readable(t.name(), taken);
      std::string naming = t.naming() == t.name() ? c : t.naming();
      LmuTerm body = rename_mu(t.body(), t.name(), c);
      return LmuTerm::mu(c, naming, tidy(body));
    }
  }
  return t;
}

}  // namespace lmu
