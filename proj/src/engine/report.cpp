#include "lmupp/report.hpp"

namespace lmu {

using nlohmann::json;

std::string show(const MuppTerm& t) { return print(tidy(t)); }
std::string show(const LmuTerm& t) { return print(tidy(t)); }

std::string trace_line(const Redex& r) {
  return std::string(to_string(r.rule)) + " @ " + r.at.str() + " : " + show(r.reduct);
}

std::string trace_line(const LmuRedex& r) {
  return std::string(to_string(r.rule)) + " @ " + r.at.str() + " : " + show(r.reduct);
}

json to_json(const Redex& r) {
  json j{{"rule", to_string(r.rule)}, {"at", r.at.str()}, {"reduct", show(r.reduct)}};
  if (r.occurrence) j["occurrence"] = r.occurrence->str();
  return j;
}

json to_json(const LmuRedex& r) {
  json j{{"rule", to_string(r.rule)}, {"at", r.at.str()}, {"reduct", show(r.reduct)}};
  if (r.occurrence) j["occurrence"] = r.occurrence->str();
  return j;
}

namespace {

template <class Values>
json values_json(const Values& v) {
  json normals = json::array();
  for (const auto& n : v.normals) normals.push_back(show(n));
  return {{"normals", normals}, {"explored", v.explored}, {"exhaustive", v.exhaustive()}, {"pending", v.pending}};
}

template <class Values>
std::string values_text(const Values& v) {
  std::string out;
  for (const auto& n : v.normals) out += show(n) + "\n";
  out += std::to_string(v.normals.size()) + " normal form(s), " + std::to_string(v.explored) + " explored, ";
  out += v.exhaustive() ? std::string("exhaustive") : std::to_string(v.pending) + " pending (budget exhausted)";
  out += "\n";
  return out;
}

}  // namespace

json to_json(const MuppValues& v) { return values_json(v); }
json to_json(const LmuValues& v) { return values_json(v); }
std::string text_report(const MuppValues& v) { return values_text(v); }
std::string text_report(const LmuValues& v) { return values_text(v); }

std::string truncate_label(const std::string& s, std::size_t width) {
  if (width == 0 || s.size() <= width) return s;
  return s.substr(0, width) + "...";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace lmu
