#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "lmupp/engine_lmu.hpp"
#include "lmupp/engine_mupp.hpp"
#include "lmupp/syntax.hpp"

namespace lmu {

// Display form used in reports: readable binder names, ASCII syntax.
std::string show(const MuppTerm& t);
std::string show(const LmuTerm& t);

// "rule @ position : term"
std::string trace_line(const Redex& r);
std::string trace_line(const LmuRedex& r);

nlohmann::json to_json(const Redex& r);
nlohmann::json to_json(const LmuRedex& r);
nlohmann::json to_json(const MuppValues& v);
nlohmann::json to_json(const LmuValues& v);

std::string text_report(const MuppValues& v);
std::string text_report(const LmuValues& v);

std::string truncate_label(const std::string& s, std::size_t width);
std::string dot_escape(const std::string& s);

// Reduction graph in DOT format. Normal forms are drawn as boxes.
template <class Term, class Step>
std::string to_dot(const Explorer<Term, Step>& ex, std::size_t width = 60) {
  std::ostringstream out;
  out << "digraph reductions {\n  node [fontname=\"monospace\"];\n";
  const auto& nodes = ex.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(truncate_label(show(nodes[i].term), width)) << "\"";
    if (nodes[i].normal) out << ", shape=box";
    if (!nodes[i].expanded) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& e : ex.edges()) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.rule) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lmu
