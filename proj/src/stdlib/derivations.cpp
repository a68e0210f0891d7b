#include "lmupp/stdlib.hpp"

namespace lmu {

using namespace dv;

namespace {

Formula X(const FoTerm& t) { return Formula::atom("X", {t}); }
Formula X0() { return Formula::atom("X"); }
FoTerm var(const std::string& x) { return FoTerm::var(x); }
FoTerm num(int n) { return FoTerm::numeral(n); }
FoTerm bit(int b) { return b ? FoTerm::b1() : FoTerm::b0(); }

// all y.X(y) -> X(S(y))
Formula step_type() { return Formula::forall_ind("y", Formula::imp(X(var("y")), X(FoTerm::succ(var("y"))))); }

// (f^n x) with f : all y.X(y) -> X(S(y)) and x : X(S^k(Z)) given as start.
Derivation iterate(const std::string& f, int n, Derivation start, int k) {
  for (int i = 0; i < n; ++i) start = imp_e(forall_e_ind(ax(f, step_type()), num(k + i)), start);
  return start;
}

// ex y.Ent[y]
Formula ex_ent() { return Formula::exists("y", ent(var("y"))); }
// all y.~Ent[y]
Formula no_ent() { return Formula::forall_ind("y", Formula::neg(ent(var("y")))); }

Derivation exit_at(const Formula& g) { return forall_e_pred(exit_derivation(), {{}, g}); }

// id : A -> A, generalised over y when wrapped.
Derivation id_at(const Formula& a) { return imp_i("x", a, ax("x", a)); }

// B[t] = ~Bool[t] -> Bool[t]
Formula bb(const FoTerm& t) { return Formula::imp(Formula::neg(bool_type(t)), bool_type(t)); }

// \d.\y.(y n) : ~E -> E
Derivation offer_derivation(int n) {
  Derivation use = imp_e(forall_e_ind(ax("y", no_ent()), num(n)), church_derivation(n));
  return imp_i("d", Formula::neg(ex_ent()), imp_i("y", no_ent(), use));
}

// x : Ent[t] at X := \z.(~E -> E).
Derivation ent_to_offer(const std::string& x, const FoTerm& t) {
  Formula g = Formula::imp(Formula::neg(ex_ent()), ex_ent());
  return forall_e_pred(ax(x, ent(t)), {{"z"}, g});
}

// id : all y.((~E -> E) -> (~E -> E))
Derivation id_offer() { return forall_i_ind("y", id_at(Formula::imp(Formula::neg(ex_ent()), ex_ent()))); }

Derivation exit_use(const Derivation& d) { return imp_e(exit_at(Formula::neg(ex_ent())), d); }

}  // namespace

Derivation church_derivation(int n) {
  Derivation body = iterate("y", n, ax("x", X(num(0))), 0);
  return forall_i_pred("X", 1, imp_i("x", X(num(0)), imp_i("y", step_type(), body)));
}

Derivation bool_derivation(int b) {
  Derivation body = b ? ax("x", X(FoTerm::b1())) : ax("y", X(FoTerm::b0()));
  return forall_i_pred("X", 1, imp_i("x", X(FoTerm::b1()), imp_i("y", X(FoTerm::b0()), body)));
}

Derivation theta_nm_lmu_derivation(int n, int m) {
  Derivation inner = mu_named("#b", "#a", X(num(m - n)), iterate("f", m, ax("x", X(num(0))), 0));
  Derivation outer = mu_named("#a", "#a", X(num(m)), iterate("f", n, inner, m - n));
  return forall_i_pred("X", 1, imp_i("x", X(num(0)), imp_i("f", step_type(), outer)));
}

Derivation id_derivation() { return forall_i_pred("X", 0, id_at(X0())); }

Derivation exit_derivation() {
  return forall_i_pred("X", 0, imp_i("x", Formula::bottom(), mu("#a", X0(), ax("x", Formula::bottom()))));
}

Derivation cc_derivation() {
  Formula nnx = Formula::neg(Formula::neg(X0()));
  Derivation body = imp_e(ax("x", nnx), ax("#a", Formula::neg(X0())));
  return forall_i_pred("X", 0, imp_i("x", nnx, mu("#a", X0(), body)));
}

Derivation callcc_derivation() {
  Formula f = Formula::imp(Formula::neg(X0()), X0());
  Derivation body = imp_e(ax("#a", Formula::neg(X0())), imp_e(ax("x", f), ax("#a", Formula::neg(X0()))));
  return forall_i_pred("X", 0, imp_i("x", f, mu("#a", X0(), body)));
}

Derivation hat_derivation(int b) { return imp_i("p", Formula::neg(bool_type(bit(b))), bool_derivation(b)); }

Derivation succ_derivation() {
  FoTerm z = var("z");
  Derivation n = forall_e_pred(ax("n", ent(z)), {{"w"}, X(var("w"))});
  Derivation nxy = imp_e(imp_e(n, ax("x", X(num(0)))), ax("y", step_type()));
  Derivation body = imp_e(forall_e_ind(ax("y", step_type()), z), nxy);
  Derivation church = forall_i_pred("X", 1, imp_i("x", X(num(0)), imp_i("y", step_type(), body)));
  return forall_i_ind("z", imp_i("n", ent(z), church));
}

Derivation por_derivation() {
  FoTerm x = var("x"), y = var("y"), w = var("w");
  FoTerm both = FoTerm::or_(x, y);
  Formula neg_or = Formula::neg(bool_type(both));
  // x : B[1] -> B[0] -> B[x] and y likewise.
  auto plain = [](const std::string& v) { return forall_e_pred(ax(v, bool_type(var(v))), {{"z"}, bb(var("z"))}); };
  Derivation x_hat = imp_e(imp_e(plain("x"), hat_derivation(1)), hat_derivation(0));
  Derivation y_hat = imp_e(imp_e(plain("y"), hat_derivation(1)), hat_derivation(0));

  // y : B[or(x,1)] -> B[or(x,0)] -> B[or(x,y)], then B[1] -> B[x] -> B[or(x,y)].
  Derivation y_or = forall_e_pred(ax("y", bool_type(y)), {{"z"}, bb(FoTerm::or_(x, var("z")))});
  y_or = eq(y_or, "w", Formula::imps({bb(w), bb(FoTerm::or_(x, FoTerm::b0()))}, bb(both)),
            FoTerm::or_(x, FoTerm::b1()), FoTerm::b1());
  y_or = eq(y_or, "w", Formula::imps({bb(FoTerm::b1()), bb(w)}, bb(both)), FoTerm::or_(x, FoTerm::b0()), x);

  // x : B[or(1,y)] -> B[or(0,y)] -> B[or(x,y)], then B[1] -> B[y] -> B[or(x,y)].
  Derivation x_or = forall_e_pred(ax("x", bool_type(x)), {{"z"}, bb(FoTerm::or_(var("z"), y))});
  x_or = eq(x_or, "w", Formula::imps({bb(w), bb(FoTerm::or_(FoTerm::b0(), y))}, bb(both)),
            FoTerm::or_(FoTerm::b1(), y), FoTerm::b1());
  x_or = eq(x_or, "w", Formula::imps({bb(FoTerm::b1()), bb(w)}, bb(both)), FoTerm::or_(FoTerm::b0(), y), y);

  Derivation inner = imp_e(ax("#a", neg_or), imp_e(imp_e(imp_e(y_or, hat_derivation(1)), x_hat), ax("#a", neg_or)));
  Derivation escape = imp_e(forall_e_pred(exit_derivation(), {{}, neg_or}), inner);
  Derivation outer = imp_e(ax("#a", neg_or), imp_e(imp_e(imp_e(x_or, hat_derivation(1)), y_hat), escape));
  Derivation body = mu("#a", bool_type(both), outer);
  return forall_i_ind("x", forall_i_ind("y", imp_i("x", bool_type(x), imp_i("y", bool_type(y), body))));
}

namespace {

Derivation producer_derivation(const std::vector<int>& ns) {
  Formula neg_e = Formula::neg(ex_ent());
  Derivation u;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    Derivation last = k == 0 ? ax("#a", neg_e) : exit_use(u);
    Derivation call = imp_e(imp_e(imp_e(ent_to_offer("x", var("x")), offer_derivation(ns[k])), id_offer()), last);
    u = imp_e(ax("#a", neg_e), call);
  }
  return forall_i_ind("x", imp_i("x", ent(var("x")), mu("#a", ex_ent(), u)));
}

// all x.Ent[x] -> ex y.Ent[y]
Formula producer_type() { return Formula::forall_ind("x", Formula::imp(ent(var("x")), ex_ent())); }

Derivation producer_step_derivation() {
  Formula neg_e = Formula::neg(ex_ent());
  FoTerm w = var("w");
  // \d.\z.(z y) : ~E -> E
  Derivation zy = imp_e(forall_e_ind(ax("z", no_ent()), w), ax("y", ent(w)));
  Derivation offer_y = imp_i("d", neg_e, imp_i("z", no_ent(), zy));
  Derivation inner = imp_e(ax("#a", neg_e),
                           imp_e(imp_e(imp_e(ent_to_offer("y", w), offer_y), id_offer()), ax("#a", neg_e)));
  // \d.(x (succ y)) : ~E -> E
  Derivation succ_y = imp_e(forall_e_ind(succ_derivation(), w), ax("y", ent(w)));
  Derivation offer_x = imp_i("d", neg_e, imp_e(forall_e_ind(ax("x", producer_type()), FoTerm::succ(w)), succ_y));
  Derivation outer = imp_e(ax("#a", neg_e),
                           imp_e(imp_e(imp_e(ent_to_offer("y", w), offer_x), id_offer()), exit_use(inner)));
  Derivation body = forall_i_ind("w", imp_i("y", ent(w), mu("#a", ex_ent(), outer)));
  return imp_i("x", producer_type(), body);
}

NamedProgram typed(std::string name, MuppTerm term, Derivation d, std::string note = {}) {
  NamedProgram p;
  p.name = std::move(name);
  p.term = std::move(term);
  p.derivation = std::move(d);
  p.note = std::move(note);
  return p;
}

NamedProgram integer(std::string name, MuppTerm term, Derivation d, int n) {
  NamedProgram p = typed(std::move(name), std::move(term), std::move(d));
  p.integer = n;
  return p;
}

NamedProgram theta_program(int n, int m) {
  NamedProgram p;
  p.name = n == 1 && m == 1 ? "theta_star" : "theta_" + std::to_string(n) + "_" + std::to_string(m) + "_star";
  p.lmu = theta_nm(n, m);
  p.lmu_derivation = theta_nm_lmu_derivation(n, m);
  p.term = star(*p.lmu);
  p.derivation = star_deriv(*p.lmu_derivation);
  p.integer = m;
  p.note = "star image of a classical integer";
  return p;
}

MuppTerm app(std::initializer_list<MuppTerm> ts) { return MuppTerm::apps(ts); }

}  // namespace

NamedProgram producer(const std::vector<int>& ns) {
  NamedProgram p = typed("producer", producer_term(ns), producer_derivation(ns));
  for (int n : ns) p.name += "_" + std::to_string(n);
  p.note = "P_{n1..nm} = \\x.mu #a.U_m";
  return p;
}

NamedProgram producer_step() {
  return typed("producer_step", producer_step_term(), producer_step_derivation(), "F, typed A -> A");
}

NamedProgram producer_nat() {
  NamedProgram p = typed("producer_nat", app({ytur(), producer_step_term()}), yfix(producer_step_derivation()),
                         "P_N = (Y F); typed only with the Y rule");
  p.y_rule = true;
  return p;
}

const std::vector<std::string>& program_names() {
  static const std::vector<std::string> names{"church", "btrue",  "bfalse", "id",   "theta",
                                              "theta_star", "exit", "cc",  "callcc", "por",
                                              "hat1",  "hat0",   "ytur",   "succ", "loop_bool"};
  return names;
}

NamedProgram mk(const std::string& name, int param) {
  if (name == "church") {
    NamedProgram p = integer("church_" + std::to_string(param), church(param), church_derivation(param), param);
    p.note = "\\x.\\y.(y^n x)";
    return p;
  }
  if (name == "btrue") return typed(name, btrue(), bool_derivation(1));
  if (name == "bfalse") return typed(name, bfalse(), bool_derivation(0));
  if (name == "id") return typed(name, id_term(), id_derivation());
  if (name == "theta") {
    NamedProgram p = theta_program(1, 1);
    p.name = "theta";
    p.note = "lambda-mu term; term holds its star image";
    return p;
  }
  if (name == "theta_star") return theta_program(1, 1);
  if (name == "exit") return typed(name, exit_term(), exit_derivation(), "I = \\x.mu #a.x");
  if (name == "cc") return typed(name, cc_term(), cc_derivation(), "C = \\x.mu #a.(x #a)");
  if (name == "callcc") return typed(name, callcc_term(), callcc_derivation(), "P = \\x.mu #a.(#a (x #a))");
  if (name == "por") {
    NamedProgram p = typed(name, por_term(), por_derivation(), "parallel or");
    p.equations = or_equations();
    return p;
  }
  if (name == "hat1") return typed(name, hat(1), hat_derivation(1));
  if (name == "hat0") return typed(name, hat(0), hat_derivation(0));
  if (name == "succ") return typed(name, succ_term(), succ_derivation(), "artifact choice \\n.\\x.\\y.(y (n x y))");
  NamedProgram p;
  p.name = name;
  if (name == "ytur") {
    p.term = ytur();
    p.note = "artifact choice (A A) with A = \\x.\\y.(y ((x x) y))";
  } else if (name == "loop_bool") {
    p.term = loop_bool();
    p.note = "false boolean";
  } else {
    throw std::invalid_argument("unknown program '" + name + "'");
  }
  return p;
}

MuppMacros stdlib_macros() {
  return [](const std::string& name, const std::vector<std::string>& args) -> std::optional<MuppTerm> {
    std::vector<int> ns;
    for (const auto& a : args) ns.push_back(std::stoi(a));
    if (name == "church") return church(ns.empty() ? 0 : ns.at(0));
    if (name == "producer") return producer_term(ns);
    if (name == "producer_step") return producer_step_term();
    if (name == "producer_nat") return app({ytur(), producer_step_term()});
    for (const auto& n : program_names()) {
      if (n == name) return mk(name).term;
    }
    return std::nullopt;
  };
}

std::vector<NamedProgram> typed_corpus() {
  std::vector<NamedProgram> out;
  for (int n = 0; n <= 10; ++n) out.push_back(mk("church", n));
  for (const char* name : {"btrue", "bfalse", "id", "exit", "cc", "callcc", "por", "hat1", "hat0", "succ"}) {
    out.push_back(mk(name));
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {0, 2}}) {
    out.push_back(theta_program(n, m));
  }
  for (const auto& ns : std::vector<std::vector<int>>{{2}, {1, 3}, {0, 4, 7}}) out.push_back(producer(ns));

  // Applications.
  for (int k : {0, 1, 3}) {
    out.push_back(integer("succ_church_" + std::to_string(k), app({succ_term(), church(k)}),
                          imp_e(forall_e_ind(succ_derivation(), num(k)), church_derivation(k)), k + 1));
  }
  out.push_back(integer("id_church_2", app({id_term(), church(2)}),
                        imp_e(forall_e_pred(id_derivation(), {{}, ent(num(2))}), church_derivation(2)), 2));
  {
    // (C \k.(k 1)) : Ent[S(Z)]
    Formula e1 = ent(num(1));
    Derivation k1 = imp_i("k", Formula::neg(e1), imp_e(ax("k", Formula::neg(e1)), church_derivation(1)));
    MuppTerm t = app({cc_term(), MuppTerm::lam("k", app({MuppTerm::var("k"), church(1)}))});
    out.push_back(integer("cc_church_1", t, imp_e(forall_e_pred(cc_derivation(), {{}, e1}), k1), 1));
  }
  {
    // (P \k.2) and (P \k.(I (k 3)))
    Formula e2 = ent(num(2));
    Derivation k2 = imp_i("k", Formula::neg(e2), church_derivation(2));
    MuppTerm t2 = app({callcc_term(), MuppTerm::lam("k", church(2))});
    out.push_back(integer("callcc_church_2", t2, imp_e(forall_e_pred(callcc_derivation(), {{}, e2}), k2), 2));
    Formula e3 = ent(num(3));
    Derivation use = imp_e(forall_e_pred(exit_derivation(), {{}, e3}),
                           imp_e(ax("k", Formula::neg(e3)), church_derivation(3)));
    Derivation k3 = imp_i("k", Formula::neg(e3), use);
    MuppTerm t3 =
        app({callcc_term(), MuppTerm::lam("k", app({exit_term(), app({MuppTerm::var("k"), church(3)})}))});
    out.push_back(integer("callcc_exit_3", t3, imp_e(forall_e_pred(callcc_derivation(), {{}, e3}), k3), 3));
  }
  {
    // mu#a.(#a 0) : Bool[B0] and the or table.
    Formula b0 = bool_type(FoTerm::b0());
    out.push_back(typed("mu_bfalse", MuppTerm::mu("a", app({MuppTerm::mu_var("a"), bfalse()})),
                        mu("#a", b0, imp_e(ax("#a", Formula::neg(b0)), bool_derivation(0)))));
    for (int b1 : {1, 0}) {
      for (int b2 : {1, 0}) {
        FoTerm both = FoTerm::or_(bit(b1), bit(b2));
        Derivation d = imp_e(imp_e(forall_e_ind(forall_e_ind(por_derivation(), bit(b1)), bit(b2)), bool_derivation(b1)),
                             bool_derivation(b2));
        d = eq(d, "w", bool_type(var("w")), both, bit(b1 | b2));
        NamedProgram p = typed("por_" + std::to_string(b1) + std::to_string(b2),
                               app({por_term(), b1 ? btrue() : bfalse(), b2 ? btrue() : bfalse()}), d);
        p.equations = or_equations();
        out.push_back(std::move(p));
      }
    }
  }
  {
    // (P_2 0) : ex y.Ent[y]
    out.push_back(typed("producer_2_zero", app({producer_term({2}), church(0)}),
                        imp_e(forall_e_ind(producer_derivation({2}), num(0)), church_derivation(0))));
  }
  {
    // Open terms: (I x y) with x : _|_, (C x) with x : ~~X.
    Formula ab = Formula::imp(Formula::atom("A"), Formula::atom("B"));
    Derivation ixy = imp_e(imp_e(forall_e_pred(exit_derivation(), {{}, ab}), ax("x", Formula::bottom())),
                           ax("y", Formula::atom("A")));
    out.push_back(typed("exit_open", app({exit_term(), MuppTerm::var("x"), MuppTerm::var("y")}), ixy));
    Formula nnx = Formula::neg(Formula::neg(Formula::atom("A")));
    out.push_back(typed("cc_open", app({cc_term(), MuppTerm::var("x")}),
                        imp_e(forall_e_pred(cc_derivation(), {{}, Formula::atom("A")}), ax("x", nnx))));
  }
  return out;
}

std::vector<NamedProgram> untyped_corpus() {
  std::vector<NamedProgram> out;
  out.push_back(mk("ytur"));
  out.push_back(mk("loop_bool"));
  out.push_back(producer_nat());
  NamedProgram theta_lmu = mk("theta");
  out.push_back(theta_lmu);
  return out;
}

}  // namespace lmu
