#include "lmupp/syntax.hpp"
#include "lmupp/typing.hpp"

namespace lmu {

using nlohmann::json;

namespace {

const char* lam_kind(MuppKind k) {
  switch (k) {
    case MuppKind::Lam1: return "lam1";
    case MuppKind::Lam2: return "lam2";
    case MuppKind::LamVac: return "lamvac";
    default: return "lam";
  }
}

MuppKind lam_kind(const std::string& s) {
  if (s == "lam") return MuppKind::Lam;
  if (s == "lam1") return MuppKind::Lam1;
  if (s == "lam2") return MuppKind::Lam2;
  if (s == "lamvac") return MuppKind::LamVac;
  throw std::invalid_argument("unknown abstraction kind '" + s + "'");
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  if (!j.at(key).is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

json to_json(const Derivation& d) {
  json inst = json::object();
  if (!d.var.empty()) inst["var"] = d.var;
  if (!d.naming.empty()) inst["naming"] = d.naming;
  if (d.rule == TRule::ForallIPred && d.arity >= 0) inst["arity"] = d.arity;
  if (d.formula) inst[d.rule == TRule::Eq ? "template" : "formula"] = print(*d.formula);
  if (d.rule == TRule::Eq) {
    if (d.witness) inst["from"] = print(*d.witness);
    if (d.target) inst["to"] = print(*d.target);
  } else if (d.witness) {
    inst["term"] = print(*d.witness);
  }
  if (d.pred) {
    inst["params"] = d.pred->params;
    inst["formula"] = print(d.pred->body);
  }
  if (d.rule == TRule::ImpI && d.lam != MuppKind::Lam) inst["lam"] = lam_kind(d.lam);
  json out{{"rule", to_string(d.rule)}};
  if (!inst.empty()) out["inst"] = inst;
  if (!d.premises.empty()) {
    json ps = json::array();
    for (const auto& p : d.premises) ps.push_back(to_json(p));
    out["premises"] = ps;
  }
  return out;
}

Derivation derivation_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("derivation node must be an object");
  Derivation d;
  d.rule = trule_from_string(get_string(j, "rule"));
  const json inst = j.value("inst", json::object());
  if (inst.contains("var")) d.var = get_string(inst, "var");
  if (inst.contains("naming")) d.naming = get_string(inst, "naming");
  if (inst.contains("arity")) d.arity = inst.at("arity").get<int>();
  if (inst.contains("lam")) d.lam = lam_kind(get_string(inst, "lam"));
  if (d.rule == TRule::ForallEPred) {
    PredAbstraction g;
    g.params = inst.value("params", std::vector<std::string>{});
    g.body = parse_formula(get_string(inst, "formula"));
    d.pred = std::move(g);
  } else if (inst.contains("formula")) {
    d.formula = parse_formula(get_string(inst, "formula"));
  }
  if (inst.contains("template")) d.formula = parse_formula(get_string(inst, "template"));
  if (inst.contains("term")) d.witness = parse_fo_term(get_string(inst, "term"));
  if (inst.contains("from")) d.witness = parse_fo_term(get_string(inst, "from"));
  if (inst.contains("to")) d.target = parse_fo_term(get_string(inst, "to"));
  if (j.contains("premises")) {
    for (const auto& p : j.at("premises")) d.premises.push_back(derivation_from_json(p));
  }
  return d;
}

DerivationDocument document_from_json(const json& j) {
  DerivationDocument doc;
  if (!j.is_object()) throw std::invalid_argument("derivation document must be an object");
  if (!j.contains("derivation")) {
    doc.derivation = derivation_from_json(j);
    return doc;
  }
  std::string sys = j.value("system", std::string("mupp"));
  if (sys == "mupp") {
    doc.system = System::Mupp;
  } else if (sys == "lmu") {
    doc.system = System::Lmu;
  } else {
    throw std::invalid_argument("system must be \"mupp\" or \"lmu\"");
  }
  if (j.contains("equations")) {
    const json& e = j.at("equations");
    if (e.is_string()) {
      doc.equations = e.get<std::string>() == "or" ? or_equations() : Equations::parse(e.get<std::string>());
    } else {
      std::string text;
      for (const auto& line : e) text += line.get<std::string>() + "\n";
      doc.equations = Equations::parse(text);
    }
  }
  doc.y_rule = j.value("y_rule", false);
  if (j.contains("expect")) {
    const json& x = j.at("expect");
    if (x.contains("term")) doc.expect_term = get_string(x, "term");
    if (x.contains("formula")) doc.expect_formula = get_string(x, "formula");
  }
  doc.derivation = derivation_from_json(j.at("derivation"));
  return doc;
}

json to_json(const DerivationDocument& doc) {
  json out{{"system", doc.system == System::Mupp ? "mupp" : "lmu"}};
  if (!doc.equations.list.empty()) {
    json e = json::array();
    for (const auto& eq : doc.equations.list) e.push_back(print(eq.left) + " = " + print(eq.right));
    out["equations"] = e;
  }
  if (doc.y_rule) out["y_rule"] = true;
  if (doc.expect_term || doc.expect_formula) {
    json x = json::object();
    if (doc.expect_term) x["term"] = *doc.expect_term;
    if (doc.expect_formula) x["formula"] = *doc.expect_formula;
    out["expect"] = x;
  }
  out["derivation"] = to_json(doc.derivation);
  return out;
}

namespace dv {

Derivation ax(std::string var, Formula a) {
  Derivation d;
  d.rule = TRule::Ax;
  d.var = std::move(var);
  d.formula = std::move(a);
  return d;
}

Derivation imp_i(std::string var, Formula domain, Derivation body, MuppKind lam) {
  Derivation d;
  d.rule = TRule::ImpI;
  d.var = std::move(var);
  d.formula = std::move(domain);
  d.lam = lam;
  d.premises.push_back(std::move(body));
  return d;
}

Derivation imp_e(Derivation fun, Derivation arg) {
  Derivation d;
  d.rule = TRule::ImpE;
  d.premises.push_back(std::move(fun));
  d.premises.push_back(std::move(arg));
  return d;
}

Derivation forall_i_ind(std::string var, Derivation p) {
  Derivation d;
  d.rule = TRule::ForallIInd;
  d.var = std::move(var);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation forall_e_ind(Derivation p, FoTerm witness) {
  Derivation d;
  d.rule = TRule::ForallEInd;
  d.witness = std::move(witness);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation forall_i_pred(std::string var, int arity, Derivation p) {
  Derivation d;
  d.rule = TRule::ForallIPred;
  d.var = std::move(var);
  d.arity = arity;
  d.premises.push_back(std::move(p));
  return d;
}

Derivation forall_e_pred(Derivation p, PredAbstraction g) {
  Derivation d;
  d.rule = TRule::ForallEPred;
  d.pred = std::move(g);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation eq(Derivation p, std::string var, Formula templ, FoTerm from, FoTerm to) {
  Derivation d;
  d.rule = TRule::Eq;
  d.var = std::move(var);
  d.formula = std::move(templ);
  d.witness = std::move(from);
  d.target = std::move(to);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation mu(std::string binder, Formula b, Derivation p) {
  Derivation d;
  d.rule = TRule::Mu;
  d.var = std::move(binder);
  d.formula = std::move(b);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation mu_named(std::string binder, std::string naming, std::optional<Formula> b, Derivation p) {
  Derivation d;
  d.rule = TRule::Mu;
  d.var = std::move(binder);
  d.naming = std::move(naming);
  d.formula = std::move(b);
  d.premises.push_back(std::move(p));
  return d;
}

Derivation yfix(Derivation f) {
  Derivation d;
  d.rule = TRule::YFix;
  d.premises.push_back(std::move(f));
  return d;
}

}  // namespace dv

}  // namespace lmu
