#include "lmupp/term_json.hpp"

namespace lmu {

using nlohmann::json;

json to_json(const MuppTerm& t) {
  switch (t.kind()) {
    case MuppKind::Var: return {{"k", "var"}, {"x", t.name()}};
    case MuppKind::MuVar: return {{"k", "mvar"}, {"a", t.name()}};
    case MuppKind::Lam: return {{"k", "lam"}, {"x", t.name()}, {"body", to_json(t.body())}};
    case MuppKind::Lam1: return {{"k", "lam1"}, {"x", t.name()}, {"body", to_json(t.body())}};
    case MuppKind::Lam2: return {{"k", "lam2"}};
    case MuppKind::LamVac: return {{"k", "lamvac"}, {"x", t.name()}, {"body", to_json(t.body())}};
    case MuppKind::Mu: return {{"k", "mu"}, {"a", t.name()}, {"body", to_json(t.body())}};
    case MuppKind::MuVac: return {{"k", "muvac"}, {"a", t.name()}, {"body", to_json(t.body())}};
    case MuppKind::App: return {{"k", "app"}, {"fun", to_json(t.fun())}, {"arg", to_json(t.arg())}};
    case MuppKind::Xi: return {{"k", "xi"}, {"a", t.name()}};
  }
  return {};
}

json to_json(const LmuTerm& t) {
  switch (t.kind()) {
    case LmuKind::Var: return {{"k", "var"}, {"x", t.name()}};
    case LmuKind::Lam: return {{"k", "lam"}, {"x", t.name()}, {"body", to_json(t.body())}};
    case LmuKind::App: return {{"k", "app"}, {"fun", to_json(t.fun())}, {"arg", to_json(t.arg())}};
    case LmuKind::Mu: return {{"k", "mu"}, {"a", t.name()}, {"name", t.naming()}, {"body", to_json(t.body())}};
  }
  return {};
}

namespace {

std::string field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) throw TermError(std::string("term json: missing string field \"") + key + "\"");
  return it->get<std::string>();
}

const json& sub(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_object()) throw TermError(std::string("term json: missing object field \"") + key + "\"");
  return *it;
}

}  // namespace

MuppTerm mupp_from_json(const json& j) {
  if (!j.is_object()) throw TermError("term json: expected object");
  std::string k = field(j, "k");
  if (k == "var") return MuppTerm::var(field(j, "x"));
  if (k == "mvar") {
    std::string a = field(j, "a");
    return is_delta(a) ? MuppTerm::delta() : MuppTerm::mu_var(a);
  }
  if (k == "lam") return MuppTerm::lam(field(j, "x"), mupp_from_json(sub(j, "body")));
  if (k == "lam1") return MuppTerm::lam1(field(j, "x"), mupp_from_json(sub(j, "body")));
  if (k == "lam2") return MuppTerm::lam2();
  if (k == "lamvac") return MuppTerm::lam_vac(field(j, "x"), mupp_from_json(sub(j, "body")));
  if (k == "mu") return MuppTerm::mu(field(j, "a"), mupp_from_json(sub(j, "body")));
  if (k == "muvac") return MuppTerm::mu_vac(field(j, "a"), mupp_from_json(sub(j, "body")));
  if (k == "app") return MuppTerm::app(mupp_from_json(sub(j, "fun")), mupp_from_json(sub(j, "arg")));
  if (k == "xi") return MuppTerm::xi(field(j, "a"));
  throw TermError("term json: unknown tag \"" + k + "\"");
}

LmuTerm lmu_from_json(const json& j) {
  if (!j.is_object()) throw TermError("term json: expected object");
  std::string k = field(j, "k");
  if (k == "var") return LmuTerm::var(field(j, "x"));
  if (k == "lam") return LmuTerm::lam(field(j, "x"), lmu_from_json(sub(j, "body")));
  if (k == "app") return LmuTerm::app(lmu_from_json(sub(j, "fun")), lmu_from_json(sub(j, "arg")));
  if (k == "mu") return LmuTerm::mu(field(j, "a"), field(j, "name"), lmu_from_json(sub(j, "body")));
  throw TermError("term json: unknown tag \"" + k + "\" for a lambda-mu term");
}

}  // namespace lmu
