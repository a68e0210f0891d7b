#include <functional>
#include <map>
#include <sstream>

#include "lmupp/equations.hpp"

namespace lmu {

Equations Equations::parse(std::string_view text) {
  Equations out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw FormulaError("line " + std::to_string(number) + ": expected 'lhs = rhs'");
    out.list.push_back({parse_fo_term(line.substr(0, eq)), parse_fo_term(line.substr(eq + 1))});
  }
  return out;
}

std::string Equations::print() const {
  std::string out;
  for (const auto& e : list) out += lmu::print(e.left) + " = " + lmu::print(e.right) + "\n";
  return out;
}

Equations or_equations() {
  return Equations::parse(
      "or(B1,x) = B1\n"
      "or(B0,x) = x\n"
      "or(x,B1) = B1\n"
      "or(x,B0) = x\n");
}

namespace {

using Subst = std::map<std::string, FoTerm>;

bool match(const FoTerm& pattern, const FoTerm& t, Subst& s) {
  if (pattern.is_var()) {
    auto [it, inserted] = s.emplace(pattern.name, t);
    return inserted || it->second == t;
  }
  if (t.is_var() || t.name != pattern.name || t.args.size() != pattern.args.size()) return false;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (!match(pattern.args[i], t.args[i], s)) return false;
  }
  return true;
}

void subterms(const FoTerm& t, std::set<FoTerm>& out) {
  out.insert(t);
  for (const auto& a : t.args) subterms(a, out);
}

class Rewriter {
 public:
  Rewriter(const Equations& e, std::vector<FoTerm> vocabulary) : e_(e), vocab_(std::move(vocabulary)) {}

  std::vector<FoTerm> neighbours(const FoTerm& t) const {
    std::vector<FoTerm> out;
    visit(t, [&](const FoTerm& r) { out.push_back(r); });
    return out;
  }

 private:
  using Emit = std::function<void(const FoTerm&)>;

  void visit(const FoTerm& t, const Emit& emit) const {
    for (const auto& eq : e_.list) {
      rewrite(t, eq.left, eq.right, emit);
      rewrite(t, eq.right, eq.left, emit);
    }
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      visit(t.args[i], [&](const FoTerm& r) {
        FoTerm copy = t;
        copy.args[i] = r;
        emit(copy);
      });
    }
  }

  void rewrite(const FoTerm& t, const FoTerm& from, const FoTerm& to, const Emit& emit) const {
    Subst s;
    if (!match(from, t, s)) return;
    std::vector<std::string> unbound;
    for (const auto& x : free_vars(to)) {
      if (!s.count(x)) unbound.push_back(x);
    }
    instantiate(to, s, unbound, 0, emit);
  }

  void instantiate(const FoTerm& to, Subst& s, const std::vector<std::string>& unbound, std::size_t i,
                   const Emit& emit) const {
    if (i == unbound.size()) {
      emit(subst(to, s));
      return;
    }
    for (const auto& v : vocab_) {
      s[unbound[i]] = v;
      instantiate(to, s, unbound, i + 1, emit);
    }
    s.erase(unbound[i]);
  }

  const Equations& e_;
  std::vector<FoTerm> vocab_;
};

constexpr std::size_t kNodeCap = 200000;

}  // namespace

bool eq_modulo(const FoTerm& a, const FoTerm& b, const Equations& e, int depth) {
  if (a == b) return true;
  if (depth <= 0 || e.list.empty()) return false;
  std::set<FoTerm> vocab;
  subterms(a, vocab);
  subterms(b, vocab);
  Rewriter rw(e, std::vector<FoTerm>(vocab.begin(), vocab.end()));

  // Two frontiers grown one layer at a time, always the smaller one.
  std::map<FoTerm, int> seen[2];
  std::vector<FoTerm> frontier[2] = {{a}, {b}};
  seen[0][a] = 0;
  seen[1][b] = 0;
  int radius[2] = {0, 0};
  while (radius[0] + radius[1] < depth) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    if (frontier[side].empty()) return false;
    std::vector<FoTerm> next;
    ++radius[side];
    for (const auto& t : frontier[side]) {
      for (auto& n : rw.neighbours(t)) {
        if (seen[1 - side].count(n)) return true;
        if (seen[side].emplace(n, radius[side]).second) next.push_back(std::move(n));
      }
      if (seen[side].size() > kNodeCap) return false;
    }
    frontier[side] = std::move(next);
  }
  return false;
}

std::vector<std::string> sanity_violations(const Equations& e, int max_n, int depth) {
  std::vector<std::string> out;
  auto check = [&](const FoTerm& a, const FoTerm& b) {
    if (eq_modulo(a, b, e, depth)) out.push_back(print(a) + " ~ " + print(b));
  };
  check(FoTerm::b0(), FoTerm::b1());
  for (int n = 0; n <= max_n; ++n) {
    for (int m = n + 1; m <= max_n; ++m) check(FoTerm::numeral(n), FoTerm::numeral(m));
  }
  return out;
}

}  // namespace lmu
