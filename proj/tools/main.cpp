#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lmupp/report.hpp"
#include "lmupp/stdlib.hpp"

using namespace lmu;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string engine = "mupp";
  std::optional<std::size_t> budget, depth, size;
  std::string dot;
  bool json = false;
  bool y_rule = false;
  std::string equations;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text, or the contents of a file for "@path".
std::string source(const std::string& arg) { return arg.rfind('@', 0) == 0 ? read_file(arg.substr(1)) : arg; }

MuppTerm mupp_arg(const std::string& arg) { return parse_mupp(source(arg), stdlib_macros()); }
LmuTerm lmu_arg(const std::string& arg) { return parse_lmu(source(arg)); }

bool is_lmu_engine(const std::string& e) { return e == "lmu" || e == "lmu+"; }

Budget budget_of(const Options& o) {
  return Budget{o.budget.value_or(default_budget()), o.depth, o.size};
}

void write_dot(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_reduce(const Options& o, const std::string& term, bool trace) {
  std::size_t fuel = o.budget.value_or(10000);
  json steps = json::array();
  std::string text;
  auto finish = [&](const std::string& result, bool normal, std::size_t n) {
    text += result + "\n";
    if (!normal) text += "(fuel exhausted after " + std::to_string(n) + " steps)\n";
    emit(o, {{"result", result}, {"normal", normal}, {"steps", n}, {"trace", steps}}, text);
    return 0;
  };
  if (o.engine == "lmu") {
    NormalizeResult r = normalize_lmu(lmu_arg(term), fuel, trace);
    for (const auto& s : r.trace) {
      steps.push_back(to_json(s));
      text += trace_line(s) + "\n";
    }
    if (r.normal) return finish(show(*r.normal), true, r.steps);
    LmuTerm last = r.trace.empty() ? lmu_arg(term) : r.trace.back().reduct;
    return finish(show(last), false, r.steps);
  }
  // Non-deterministic engines: always contract the first enumerated redex.
  std::size_t n = 0;
  if (o.engine == "lmu+") {
    LmuTerm t = lmu_arg(term);
    for (; n < fuel; ++n) {
      auto rs = redexes_lmu(t, LmuMode::MuPlus);
      if (rs.empty()) return finish(show(t), true, n);
      if (trace) {
        steps.push_back(to_json(rs.front()));
        text += trace_line(rs.front()) + "\n";
      }
      t = rs.front().reduct;
    }
    return finish(show(t), redexes_lmu(t, LmuMode::MuPlus).empty(), n);
  }
  MuppMode mode = o.engine == "weak" ? MuppMode::Weak : MuppMode::Core;
  MuppTerm t = mupp_arg(term);
  if (t.level() == Level::Modified && mode == MuppMode::Core) mode = MuppMode::Modified;
  for (; n < fuel; ++n) {
    auto rs = redexes_mupp(t, mode);
    if (rs.empty()) return finish(show(t), true, n);
    if (trace) {
      steps.push_back(to_json(rs.front()));
      text += trace_line(rs.front()) + "\n";
    }
    t = rs.front().reduct;
  }
  return finish(show(t), redexes_mupp(t, mode).empty(), n);
}

int cmd_values(const Options& o, const std::string& term) {
  Budget b = budget_of(o);
  if (is_lmu_engine(o.engine)) {
    LmuExplorer ex = make_lmu_explorer(o.engine == "lmu" ? LmuMode::Mu : LmuMode::MuPlus);
    ex.record_edges(!o.dot.empty());
    ex.run(lmu_arg(term), b);
    if (!o.dot.empty()) write_dot(o.dot, to_dot(ex));
    LmuValues v = ex.values();
    emit(o, to_json(v), text_report(v));
    return 0;
  }
  MuppTerm t = mupp_arg(term);
  MuppMode mode = o.engine == "weak" ? MuppMode::Weak : t.level() == Level::Core ? MuppMode::Core : MuppMode::Modified;
  MuppExplorer ex = make_mupp_explorer(mode);
  ex.record_edges(!o.dot.empty());
  ex.keep_terms(!o.dot.empty());
  ex.run(t, b);
  if (!o.dot.empty()) write_dot(o.dot, to_dot(ex));
  MuppValues v = ex.values();
  if (mode == MuppMode::Weak) {
    MuppValues kept;
    for (std::size_t i = 0; i < v.normals.size(); ++i) {
      if (has_xi(v.normals[i])) continue;
      kept.normals.push_back(v.normals[i]);
      kept.canon.push_back(v.canon[i]);
    }
    kept.explored = v.explored;
    kept.pending = v.pending;
    v = std::move(kept);
  }
  emit(o, to_json(v), text_report(v));
  return 0;
}

Equations equations_of(const Options& o, Equations base) {
  if (o.equations.empty()) return base;
  Equations extra = Equations::parse(read_file(o.equations));
  for (auto& e : extra.list) base.list.push_back(std::move(e));
  return base;
}

int cmd_typecheck(const Options& o, const std::string& file) {
  DerivationDocument doc = document_from_json(json::parse(read_file(file)));
  Equations e = equations_of(o, doc.equations);
  ValidateOptions vo;
  vo.y_rule = o.y_rule || doc.y_rule;
  json out{{"file", file}};
  try {
    Judgment j = validate(doc.derivation, doc.system, e, vo);
    std::string term = doc.system == System::Mupp ? show(j.mupp) : show(j.lmu);
    std::vector<std::string> problems;
    if (doc.expect_term) {
      bool same = doc.system == System::Mupp ? alpha_eq(j.mupp, parse_mupp(*doc.expect_term, stdlib_macros()))
                                             : alpha_eq(j.lmu, parse_lmu(*doc.expect_term));
      if (!same) problems.push_back("subject differs from expected " + *doc.expect_term);
    }
    if (doc.expect_formula && !alpha_eq(j.formula, parse_formula(*doc.expect_formula))) {
      problems.push_back("type differs from expected " + *doc.expect_formula);
    }
    out["valid"] = problems.empty();
    out["judgment"] = print(j);
    out["term"] = term;
    out["formula"] = print(j.formula);
    out["problems"] = problems;
    std::string text = print(j) + "\n";
    if (j.sn_forfeited) text += "(uses the Y rule)\n";
    for (const auto& p : problems) text += "error: " + p + "\n";
    emit(o, out, text);
    return problems.empty() ? 0 : 1;
  } catch (const ValidationError& err) {
    out["valid"] = false;
    out["rule"] = rule_tag(err.rule());
    out["path"] = err.path();
    out["error"] = err.reason();
    emit(o, out, std::string("invalid: ") + err.what() + "\n");
    return 1;
  }
}

int cmd_translate(const Options& o, const std::string& dir, const std::string& input, bool derivation) {
  if (dir != "star" && dir != "circ") throw UsageError("--dir must be star or circ");
  if (derivation) {
    DerivationDocument doc = document_from_json(json::parse(read_file(input)));
    Equations e = equations_of(o, doc.equations);
    ValidateOptions vo;
    vo.y_rule = o.y_rule || doc.y_rule;
    DerivationDocument out;
    out.equations = e;
    out.system = dir == "star" ? System::Mupp : System::Lmu;
    out.derivation = dir == "star" ? star_deriv(doc.derivation, e, vo) : circ_deriv(doc.derivation, e, vo);
    Judgment j = validate(out.derivation, out.system, e, vo);
    if (o.json) {
      std::cout << to_json(out).dump(2) << "\n";
    } else {
      std::cout << print(j) << "\n";
    }
    return 0;
  }
  std::string result = dir == "star" ? show(star(lmu_arg(input))) : show(circ(mupp_arg(input)));
  emit(o, {{"direction", dir}, {"result", result}}, result + "\n");
  return 0;
}

NamedProgram find_program(const std::string& name) {
  for (auto corpus : {typed_corpus(), untyped_corpus()}) {
    for (auto& p : corpus) {
      if (p.name == name) return p;
    }
  }
  if (name.rfind("church_", 0) == 0) return mk("church", std::stoi(name.substr(7)));
  return mk(name);
}

std::optional<Judgment> judge(const NamedProgram& p) {
  if (!p.derivation) return std::nullopt;
  ValidateOptions vo;
  vo.y_rule = p.y_rule;
  return validate(*p.derivation, System::Mupp, p.equations, vo);
}

int cmd_examples(const Options& o, const std::vector<std::string>& args) {
  if (args.empty()) {
    json list = json::array();
    std::string text;
    for (auto corpus : {typed_corpus(), untyped_corpus()}) {
      for (const auto& p : corpus) {
        auto j = judge(p);
        std::string type = j ? print(j->formula) : "untyped";
        list.push_back({{"name", p.name}, {"type", type}});
        text += p.name + " : " + type + "\n";
      }
    }
    emit(o, list, text);
    return 0;
  }
  if ((args[0] != "dump" && args[0] != "export") || args.size() != 2) {
    throw UsageError("usage: examples [dump NAME | export NAME]");
  }
  NamedProgram p;
  try {
    p = find_program(args[1]);
  } catch (const std::exception&) {
    throw UsageError("unknown example " + args[1]);
  }
  auto j = judge(p);
  if (args[0] == "export") {
    // A derivation document that typecheck reads back.
    if (!j) throw UsageError(p.name + " has no derivation");
    DerivationDocument doc;
    doc.equations = p.equations;
    doc.y_rule = p.y_rule;
    doc.expect_term = print(p.term);
    doc.expect_formula = print(j->formula);
    doc.derivation = *p.derivation;
    std::cout << to_json(doc).dump(2) << "\n";
    return 0;
  }
  json out{{"name", p.name}, {"term", show(p.term)}};
  std::string text = p.name + " = " + show(p.term) + "\n";
  if (p.lmu) {
    out["lmu"] = show(*p.lmu);
    text += "lambda-mu: " + show(*p.lmu) + "\n";
  }
  if (j) {
    out["type"] = print(j->formula);
    out["derivation"] = to_json(*p.derivation);
    text += "type: " + print(j->formula) + "\n";
    if (p.y_rule) text += "(typed with the Y rule)\n";
  }
  if (!p.equations.list.empty()) {
    out["equations"] = p.equations.print();
    text += "equations:\n" + p.equations.print();
  }
  if (!p.note.empty()) text += p.note + "\n";
  emit(o, out, text);
  return 0;
}

int cmd_simulate(const Options& o, const std::string& dir, const std::string& u, const std::string& v, std::size_t n) {
  Budget b = sim_budget();
  if (o.budget) b.max_nodes = o.budget;
  if (o.depth) b.max_depth = o.depth;
  if (dir == "star") {
    auto w = check_sim_star(lmu_arg(u), lmu_arg(v), n, b);
    json out{{"direction", "star"}, {"found", w.has_value()}};
    std::string text;
    if (w) {
      out["steps"] = w->steps;
      out["path"] = json::array();
      for (const auto& r : w->path) {
        out["path"].push_back(to_json(r));
        text += trace_line(r) + "\n";
      }
      text += "m = " + std::to_string(w->steps) + " >= n = " + std::to_string(n) + "\n";
    } else {
      text = "no witness within budget (inconclusive)\n";
    }
    emit(o, out, text);
    return w ? 0 : 1;
  }
  if (dir != "circ") throw UsageError("--dir must be star or circ");
  JoinOutcome r = join_circ(mupp_arg(u), mupp_arg(v), b);
  json out{{"direction", "circ"}, {"status", to_string(r.status)}};
  std::string text = std::string("status: ") + to_string(r.status) + "\n";
  if (r.witness) {
    out["w"] = show(r.witness->w);
    out["left"] = json::array();
    out["right"] = json::array();
    text += "w = " + show(r.witness->w) + "\nleft:\n";
    for (const auto& s : r.witness->left) {
      out["left"].push_back(to_json(s));
      text += "  " + trace_line(s) + "\n";
    }
    text += "right:\n";
    for (const auto& s : r.witness->right) {
      out["right"].push_back(to_json(s));
      text += "  " + trace_line(s) + "\n";
    }
  }
  emit(o, out, text);
  return r.witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the lambda-mu and lambda-mu++ calculi"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--engine", o.engine, "Reduction engine")
      ->check(CLI::IsMember({"lmu", "lmu+", "mupp", "weak"}));
  app.add_option("--budget", o.budget, "Node budget (fuel for reduce)");
  app.add_option("--depth", o.depth, "Depth bound");
  app.add_option("--max-size", o.size, "Drop reducts larger than this");
  app.add_option("--dot", o.dot, "Write the explored graph in DOT format");
  app.add_flag("--json", o.json, "Structured output");
  app.add_flag("--y-rule", o.y_rule, "Enable the fixed-point typing rule");
  app.add_option("--equations", o.equations, "Equation file, one 'lhs = rhs' per line");

  std::string term, dir = "star", file, v;
  bool trace = false, derivation = false;
  std::size_t steps = 1;
  std::vector<std::string> example_args;

  auto* reduce = app.add_subcommand("reduce", "Reduce a term with one engine");
  reduce->add_option("term", term, "Term, or @file")->required();
  reduce->add_flag("--trace", trace, "Print every step");
  auto* values = app.add_subcommand("values", "Explore all reachable normal forms");
  values->add_option("term", term, "Term, or @file")->required();
  auto* typecheck = app.add_subcommand("typecheck", "Validate a derivation file");
  typecheck->add_option("file", file, "Derivation JSON")->required();
  auto* translate = app.add_subcommand("translate", "Apply t* or t°");
  translate->add_option("--dir", dir, "star or circ")->check(CLI::IsMember({"star", "circ"}));
  translate->add_flag("--derivation", derivation, "Input is a derivation file");
  translate->add_option("input", term, "Term, @file, or derivation file")->required();
  auto* examples = app.add_subcommand("examples", "List or dump the curated programs");
  examples->add_option("args", example_args, "dump NAME or export NAME");
  auto* simulate = app.add_subcommand("simulate", "Check a simulation step");
  simulate->add_option("--dir", dir, "star or circ")->check(CLI::IsMember({"star", "circ"}));
  simulate->add_option("--steps", steps, "n for the star direction");
  simulate->add_option("u", term, "Source term")->required();
  simulate->add_option("v", v, "Target term")->required();
  for (auto* sub : {reduce, values, typecheck, translate, examples, simulate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce) return cmd_reduce(o, term, trace);
    if (*values) return cmd_values(o, term);
    if (*typecheck) return cmd_typecheck(o, file);
    if (*translate) return cmd_translate(o, dir, term, derivation);
    if (*examples) return cmd_examples(o, example_args);
    if (*simulate) return cmd_simulate(o, dir, term, v, steps);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
