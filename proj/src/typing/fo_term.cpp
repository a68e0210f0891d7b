#include <map>

#include "lmupp/formula.hpp"

namespace lmu {

namespace {

const std::map<std::string, std::size_t, std::less<>>& builtin_arities() {
  static const std::map<std::string, std::size_t, std::less<>> table{
      {"Z", 0}, {"S", 1}, {"B0", 0}, {"B1", 0}, {"or", 2}};
  return table;
}

void collect(const FoTerm& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect(a, out);
}

}  // namespace

FoTerm FoTerm::var(std::string x) { return FoTerm{Kind::Var, std::move(x), {}}; }
FoTerm FoTerm::fn(std::string f, std::vector<FoTerm> args) { return FoTerm{Kind::Fn, std::move(f), std::move(args)}; }
FoTerm FoTerm::succ(FoTerm t) { return fn("S", {std::move(t)}); }
FoTerm FoTerm::or_(FoTerm a, FoTerm b) { return fn("or", {std::move(a), std::move(b)}); }

FoTerm FoTerm::numeral(int n) {
  FoTerm t = zero();
  for (int i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

std::set<std::string> free_vars(const FoTerm& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

FoTerm subst(const FoTerm& t, const std::map<std::string, FoTerm>& s) {
  if (t.is_var()) {
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
  }
  FoTerm out = t;
  for (auto& a : out.args) a = subst(a, s);
  return out;
}

FoTerm subst(const FoTerm& t, const std::string& x, const FoTerm& a) { return subst(t, {{x, a}}); }

std::string print(const FoTerm& t) {
  if (t.is_var() || t.args.empty()) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += print(t.args[i]);
  }
  return out + ")";
}

void check_arity(const FoTerm& t) {
  if (t.is_var()) return;
  auto it = builtin_arities().find(t.name);
  if (it != builtin_arities().end() && it->second != t.args.size()) {
    throw FormulaError("function symbol " + t.name + " expects " + std::to_string(it->second) + " argument(s), got " +
                       std::to_string(t.args.size()));
  }
  for (const auto& a : t.args) check_arity(a);
}

}  // namespace lmu
