#pragma once

// Independent reference implementations used as test oracles, plus seeded
// random term generators. Nothing here calls the library's substitution,
// free-variable or alpha-equivalence code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lmupp/lmu_term.hpp"
#include "lmupp/mupp_term.hpp"

namespace oracle {

using lmu::LmuKind;
using lmu::LmuTerm;
using lmu::MuppKind;
using lmu::MuppTerm;

// ---- free variables by explicit binder stacks ----

struct Free {
  std::set<std::string> lam, mu;
};

inline void free_walk(const MuppTerm& t, std::vector<std::string>& lams, std::vector<std::string>& mus, Free& out) {
  auto bound = [](const std::vector<std::string>& s, const std::string& n) {
    return std::find(s.begin(), s.end(), n) != s.end();
  };
  switch (t.kind()) {
    case MuppKind::Var:
      if (!bound(lams, t.name())) out.lam.insert(t.name());
      return;
    case MuppKind::MuVar:
    case MuppKind::Xi:
      if (t.name() != "delta" && !bound(mus, t.name())) out.mu.insert(t.name());
      return;
    case MuppKind::Lam2: return;
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac:
      lams.push_back(t.name());
      free_walk(t.body(), lams, mus, out);
      lams.pop_back();
      return;
    case MuppKind::Mu:
    case MuppKind::MuVac:
      mus.push_back(t.name());
      free_walk(t.body(), lams, mus, out);
      mus.pop_back();
      return;
    case MuppKind::App:
      if (t.fun().is(MuppKind::Xi)) {
        mus.push_back(t.fun().name());
        free_walk(t.arg(), lams, mus, out);
        mus.pop_back();
        return;
      }
      free_walk(t.fun(), lams, mus, out);
      free_walk(t.arg(), lams, mus, out);
      return;
  }
}

inline Free free_of(const MuppTerm& t) {
  std::vector<std::string> l, m;
  Free f;
  free_walk(t, l, m, f);
  return f;
}

inline void free_walk(const LmuTerm& t, std::vector<std::string>& lams, std::vector<std::string>& mus, Free& out) {
  auto bound = [](const std::vector<std::string>& s, const std::string& n) {
    return std::find(s.begin(), s.end(), n) != s.end();
  };
  switch (t.kind()) {
    case LmuKind::Var:
      if (!bound(lams, t.name())) out.lam.insert(t.name());
      return;
    case LmuKind::Lam:
      lams.push_back(t.name());
      free_walk(t.body(), lams, mus, out);
      lams.pop_back();
      return;
    case LmuKind::App:
      free_walk(t.fun(), lams, mus, out);
      free_walk(t.arg(), lams, mus, out);
      return;
    case LmuKind::Mu:
      mus.push_back(t.name());
      if (t.naming() != "delta" && !bound(mus, t.naming())) out.mu.insert(t.naming());
      free_walk(t.body(), lams, mus, out);
      mus.pop_back();
      return;
  }
}

inline Free free_of(const LmuTerm& t) {
  std::vector<std::string> l, m;
  Free f;
  free_walk(t, l, m, f);
  return f;
}

inline std::set<std::string> to_set(const lmu::NameSet& s) { return {s.begin(), s.end()}; }

// ---- alpha-equivalence by renaming every binder to its binding level ----

inline std::string levels(const MuppTerm& t, std::map<std::string, int> lam_env, std::map<std::string, int> mu_env,
                          int depth) {
  auto lv = [&](const std::map<std::string, int>& env, const std::string& n, const char* tag) {
    auto it = env.find(n);
    return it == env.end() ? std::string("free:") + n : std::string(tag) + std::to_string(it->second);
  };
  switch (t.kind()) {
    case MuppKind::Var: return lv(lam_env, t.name(), "l");
    case MuppKind::MuVar: return "#" + lv(mu_env, t.name(), "m");
    case MuppKind::Xi: return "xi" + lv(mu_env, t.name(), "m");
    case MuppKind::Lam2: return "lam2";
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac: {
      lam_env[t.name()] = depth;
      return std::string(lmu::to_string(t.kind())) + "(" + levels(t.body(), lam_env, mu_env, depth + 1) + ")";
    }
    case MuppKind::Mu:
    case MuppKind::MuVac: {
      mu_env[t.name()] = depth;
      return std::string(lmu::to_string(t.kind())) + "(" + levels(t.body(), lam_env, mu_env, depth + 1) + ")";
    }
    case MuppKind::App:
      if (t.fun().is(MuppKind::Xi)) {
        mu_env[t.fun().name()] = depth;
        return "xiapp(" + levels(t.arg(), lam_env, mu_env, depth + 1) + ")";
      }
      return "(" + levels(t.fun(), lam_env, mu_env, depth) + " " + levels(t.arg(), lam_env, mu_env, depth) + ")";
  }
  return "?";
}

inline bool alpha(const MuppTerm& a, const MuppTerm& b) { return levels(a, {}, {}, 0) == levels(b, {}, {}, 0); }

inline std::string levels(const LmuTerm& t, std::map<std::string, int> lam_env, std::map<std::string, int> mu_env,
                          int depth) {
  auto lv = [&](const std::map<std::string, int>& env, const std::string& n, const char* tag) {
    auto it = env.find(n);
    return it == env.end() ? std::string("free:") + n : std::string(tag) + std::to_string(it->second);
  };
  switch (t.kind()) {
    case LmuKind::Var: return lv(lam_env, t.name(), "l");
    case LmuKind::Lam:
      lam_env[t.name()] = depth;
      return "lam(" + levels(t.body(), lam_env, mu_env, depth + 1) + ")";
    case LmuKind::App:
      return "(" + levels(t.fun(), lam_env, mu_env, depth) + " " + levels(t.arg(), lam_env, mu_env, depth) + ")";
    case LmuKind::Mu:
      mu_env[t.name()] = depth;
      return "mu[" + lv(mu_env, t.naming(), "m") + "](" + levels(t.body(), lam_env, mu_env, depth + 1) + ")";
  }
  return "?";
}

inline bool alpha(const LmuTerm& a, const LmuTerm& b) { return levels(a, {}, {}, 0) == levels(b, {}, {}, 0); }

// ---- substitution after renaming all binders apart ----

class Apart {
 public:
  // Renames every binder of t to a unique "q<k>" name.
  MuppTerm run(const MuppTerm& t) { return go(t, {}, {}); }
  LmuTerm run(const LmuTerm& t) { return go(t, {}, {}); }

 private:
  std::string next() { return "q" + std::to_string(++k_); }

  MuppTerm go(const MuppTerm& t, std::map<std::string, std::string> ls, std::map<std::string, std::string> ms) {
    auto look = [](const std::map<std::string, std::string>& env, const std::string& n) {
      auto it = env.find(n);
      return it == env.end() ? n : it->second;
    };
    switch (t.kind()) {
      case MuppKind::Var: return MuppTerm::var(look(ls, t.name()));
      case MuppKind::MuVar: return t.name() == "delta" ? t : MuppTerm::mu_var(look(ms, t.name()));
      case MuppKind::Xi: return MuppTerm::xi(look(ms, t.name()));
      case MuppKind::Lam2: return t;
      case MuppKind::Lam:
      case MuppKind::Lam1:
      case MuppKind::LamVac: {
        std::string n = next();
        ls[t.name()] = n;
        return MuppTerm::rebuild(t.kind(), n, go(t.body(), ls, ms), {});
      }
      case MuppKind::Mu:
      case MuppKind::MuVac: {
        std::string n = next();
        ms[t.name()] = n;
        return MuppTerm::rebuild(t.kind(), n, go(t.body(), ls, ms), {});
      }
      case MuppKind::App:
        if (t.fun().is(MuppKind::Xi)) {
          std::string n = next();
          ms[t.fun().name()] = n;
          return MuppTerm::app(MuppTerm::xi(n), go(t.arg(), ls, ms));
        }
        return MuppTerm::app(go(t.fun(), ls, ms), go(t.arg(), ls, ms));
    }
    return t;
  }

  LmuTerm go(const LmuTerm& t, std::map<std::string, std::string> ls, std::map<std::string, std::string> ms) {
    auto look = [](const std::map<std::string, std::string>& env, const std::string& n) {
      auto it = env.find(n);
      return it == env.end() ? n : it->second;
    };
    switch (t.kind()) {
      case LmuKind::Var: return LmuTerm::var(look(ls, t.name()));
      case LmuKind::Lam: {
        std::string n = next();
        ls[t.name()] = n;
        return LmuTerm::lam(n, go(t.body(), ls, ms));
      }
      case LmuKind::App: return LmuTerm::app(go(t.fun(), ls, ms), go(t.arg(), ls, ms));
      case LmuKind::Mu: {
        std::string n = next();
        ms[t.name()] = n;
        return LmuTerm::mu(n, look(ms, t.naming()), go(t.body(), ls, ms));
      }
    }
    return t;
  }

  int k_ = 0;
};

// t[x := v] on a term whose binders are apart from everything in v.
inline MuppTerm naive_subst(const MuppTerm& t, const std::string& x, const MuppTerm& v, bool mu) {
  switch (t.kind()) {
    case MuppKind::Var: return !mu && t.name() == x ? v : t;
    case MuppKind::MuVar: return mu && t.name() == x ? v : t;
    case MuppKind::Xi:
    case MuppKind::Lam2: return t;
    case MuppKind::App: return MuppTerm::app(naive_subst(t.fun(), x, v, mu), naive_subst(t.arg(), x, v, mu));
    default: return MuppTerm::rebuild(t.kind(), t.name(), naive_subst(t.body(), x, v, mu), {});
  }
}

inline MuppTerm subst_lam(const MuppTerm& t, const std::string& x, const MuppTerm& v) {
  return naive_subst(Apart().run(t), x, v, false);
}

inline MuppTerm subst_mu(const MuppTerm& t, const std::string& a, const MuppTerm& v) {
  return naive_subst(Apart().run(t), a, v, true);
}

inline LmuTerm naive_subst_lam(const LmuTerm& t, const std::string& x, const LmuTerm& v) {
  switch (t.kind()) {
    case LmuKind::Var: return t.name() == x ? v : t;
    case LmuKind::Lam: return LmuTerm::lam(t.name(), naive_subst_lam(t.body(), x, v));
    case LmuKind::App: return LmuTerm::app(naive_subst_lam(t.fun(), x, v), naive_subst_lam(t.arg(), x, v));
    case LmuKind::Mu: return LmuTerm::mu(t.name(), t.naming(), naive_subst_lam(t.body(), x, v));
  }
  return t;
}

inline LmuTerm subst_lam(const LmuTerm& t, const std::string& x, const LmuTerm& v) {
  return naive_subst_lam(Apart().run(t), x, v);
}

inline LmuTerm naive_struct(const LmuTerm& t, const std::string& a, const LmuTerm& v) {
  switch (t.kind()) {
    case LmuKind::Var: return t;
    case LmuKind::Lam: return LmuTerm::lam(t.name(), naive_struct(t.body(), a, v));
    case LmuKind::App: return LmuTerm::app(naive_struct(t.fun(), a, v), naive_struct(t.arg(), a, v));
    case LmuKind::Mu: {
      LmuTerm body = naive_struct(t.body(), a, v);
      if (t.naming() == a) body = LmuTerm::app(body, v);
      return LmuTerm::mu(t.name(), t.naming(), body);
    }
  }
  return t;
}

// t[a :=* v]; t's binders are renamed apart first so a only matches free namings.
inline LmuTerm struct_subst(const LmuTerm& t, const std::string& a, const LmuTerm& v) {
  return naive_struct(Apart().run(t), a, v);
}

// ---- generators ----

struct GenOptions {
  std::vector<std::string> lam_names{"x", "y", "z"};
  std::vector<std::string> mu_names{"a", "b"};
  bool modified = false;  // allow \1, \2 and #delta
  bool closed = false;    // only bound variables at the leaves
};

class Gen {
 public:
  explicit Gen(unsigned seed, GenOptions opts = {}) : rng_(seed), o_(std::move(opts)) {}

  MuppTerm mupp(int size) {
    std::vector<std::string> ls, ms;
    return mupp(size, ls, ms);
  }

  LmuTerm lmu(int size) {
    std::vector<std::string> ls, ms;
    return lmu(size, ls, ms);
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::string pick_from(const std::vector<std::string>& v) { return v[pick(static_cast<int>(v.size()))]; }

  std::string lam_leaf(const std::vector<std::string>& bound) {
    if (o_.closed || (!bound.empty() && pick(4) != 0)) return bound.empty() ? "" : pick_from(bound);
    return pick_from(o_.lam_names);
  }

  std::string mu_leaf(const std::vector<std::string>& bound) {
    if (o_.modified && pick(6) == 0) return "delta";
    if (o_.closed || (!bound.empty() && pick(4) != 0)) return bound.empty() ? "" : pick_from(bound);
    return pick_from(o_.mu_names);
  }

  MuppTerm leaf(std::vector<std::string>& ls, std::vector<std::string>& ms) {
    if (o_.modified && pick(8) == 0) return MuppTerm::lam2();
    std::string x = lam_leaf(ls);
    std::string a = mu_leaf(ms);
    if (!x.empty() && (a.empty() || pick(2) == 0)) return MuppTerm::var(x);
    if (!a.empty()) return a == "delta" ? MuppTerm::delta() : MuppTerm::mu_var(a);
    return MuppTerm::lam("x", MuppTerm::var("x"));
  }

  MuppTerm mupp(int size, std::vector<std::string>& ls, std::vector<std::string>& ms) {
    if (size <= 1) return leaf(ls, ms);
    int c = pick(10);
    if (c < 3) {
      std::string x = pick_from(o_.lam_names);
      ls.push_back(x);
      MuppTerm body = mupp(size - 1, ls, ms);
      ls.pop_back();
      if (o_.modified && pick(3) == 0 && lmu::count_free_lam(body, x) == 1) return MuppTerm::lam1(x, body);
      return MuppTerm::lam(x, body);
    }
    if (c < 5) {
      std::string a = pick_from(o_.mu_names);
      ms.push_back(a);
      MuppTerm body = mupp(size - 1, ls, ms);
      ms.pop_back();
      return MuppTerm::mu(a, body);
    }
    int left = 1 + pick(size - 1);
    if (left >= size) left = size - 1;
    MuppTerm f = mupp(left, ls, ms);
    return MuppTerm::app(f, mupp(size - 1 - left < 1 ? 1 : size - 1 - left, ls, ms));
  }

  LmuTerm lmu(int size, std::vector<std::string>& ls, std::vector<std::string>& ms) {
    if (size <= 1) {
      std::string x = lam_leaf(ls);
      if (x.empty()) return LmuTerm::lam("x", LmuTerm::var("x"));
      return LmuTerm::var(x);
    }
    int c = pick(10);
    if (c < 3) {
      std::string x = pick_from(o_.lam_names);
      ls.push_back(x);
      LmuTerm body = lmu(size - 1, ls, ms);
      ls.pop_back();
      return LmuTerm::lam(x, body);
    }
    if (c < 6) {
      std::string a = pick_from(o_.mu_names);
      ms.push_back(a);
      std::string n = mu_leaf(ms);
      if (n.empty() || n == "delta") n = a;
      LmuTerm body = lmu(size - 1, ls, ms);
      ms.pop_back();
      return LmuTerm::mu(a, n, body);
    }
    int left = 1 + pick(size - 1);
    if (left >= size) left = size - 1;
    LmuTerm f = lmu(left, ls, ms);
    return LmuTerm::app(f, lmu(size - 1 - left < 1 ? 1 : size - 1 - left, ls, ms));
  }

  std::mt19937 rng_;
  GenOptions o_;
};

}  // namespace oracle
