#include <stdexcept>

#include "lmupp/stdlib.hpp"
#include "lmupp/syntax.hpp"

namespace lmu {

namespace {

MuppTerm iterate(const std::string& f, int n, MuppTerm x) {
  for (int i = 0; i < n; ++i) x = MuppTerm::app(MuppTerm::var(f), x);
  return x;
}

LmuTerm iterate_lmu(const std::string& f, int n, LmuTerm x) {
  for (int i = 0; i < n; ++i) x = LmuTerm::app(LmuTerm::var(f), x);
  return x;
}

// 1^ and 0^ inside larger terms.
MuppTerm h1() { return hat(1); }
MuppTerm h0() { return hat(0); }

MuppTerm app(std::initializer_list<MuppTerm> ts) { return MuppTerm::apps(ts); }
MuppTerm v(const std::string& x) { return MuppTerm::var(x); }
MuppTerm a(const std::string& x) { return MuppTerm::mu_var(x); }

// \d.\y.(y n)
MuppTerm offer(int n) { return MuppTerm::lam("d", MuppTerm::lam("y", app({v("y"), church(n)}))); }

}  // namespace

MuppTerm church(int n) {
  if (n < 0) throw std::invalid_argument("church numerals are non-negative");
  return MuppTerm::lam("x", MuppTerm::lam("y", iterate("y", n, v("x"))));
}

MuppTerm btrue() { return parse_mupp("\\x.\\y.x"); }
MuppTerm bfalse() { return parse_mupp("\\x.\\y.y"); }
MuppTerm id_term() { return parse_mupp("\\x.x"); }

LmuTerm theta() { return theta_nm(1, 1); }

LmuTerm theta_nm(int n, int m) {
  if (n < 0 || m < n) throw std::invalid_argument("theta_nm needs 0 <= n <= m");
  LmuTerm inner = LmuTerm::mu("b", "a", iterate_lmu("f", m, LmuTerm::var("x")));
  LmuTerm body = LmuTerm::mu("a", "a", iterate_lmu("f", n, inner));
  return LmuTerm::lam("x", LmuTerm::lam("f", body));
}

MuppTerm exit_term() { return parse_mupp("\\x.mu #a.x"); }
MuppTerm cc_term() { return parse_mupp("\\x.mu #a.(x #a)"); }
MuppTerm callcc_term() { return parse_mupp("\\x.mu #a.(#a (x #a))"); }

MuppTerm hat(int b) { return MuppTerm::lam("p", b ? btrue() : bfalse()); }

MuppTerm por_term() {
  MuppTerm inner = app({a("a"), app({v("y"), h1(), app({v("x"), h1(), h0()}), a("a")})});
  MuppTerm outer = app({a("a"), app({v("x"), h1(), app({v("y"), h1(), h0()}), app({exit_term(), inner})})});
  return MuppTerm::lam("x", MuppTerm::lam("y", MuppTerm::mu("a", outer)));
}

MuppTerm succ_term() { return parse_mupp("\\n.\\x.\\y.(y (n x y))"); }

MuppTerm ytur() { return turing_fixpoint(); }

MuppTerm loop_bool() { return parse_mupp("\\x.\\y.(\\z.(z z) \\z.(z z))"); }

MuppTerm producer_term(const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("producer needs a nonempty sequence");
  MuppTerm u;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (ns[k] < 0) throw std::invalid_argument("producer values are non-negative");
    MuppTerm last = k == 0 ? a("a") : app({exit_term(), u});
    u = app({a("a"), app({v("x"), offer(ns[k]), id_term(), last})});
  }
  return MuppTerm::lam("x", MuppTerm::mu("a", u));
}

MuppTerm producer_step_term() {
  MuppTerm inner = app({a("a"), app({v("y"), MuppTerm::lam("d", MuppTerm::lam("z", app({v("z"), v("y")}))),
                                     id_term(), a("a")})});
  MuppTerm outer = app({a("a"), app({v("y"), MuppTerm::lam("d", app({v("x"), app({succ_term(), v("y")})})),
                                     id_term(), app({exit_term(), inner})})});
  return MuppTerm::lam("x", MuppTerm::lam("y", MuppTerm::mu("a", outer)));
}

}  // namespace lmu
