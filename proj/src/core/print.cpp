#include <vector>

#include "lmupp/syntax.hpp"

namespace lmu {

namespace {

struct Glyphs {
  const char* lam;
  const char* lam1;
  const char* lam2;
  const char* lam_vac;
  const char* mu;
  const char* mu_vac;
  const char* xi;
  const char* delta;
};

constexpr Glyphs kAscii{"\\", "\\1", "\\2", "\\'", "mu ", "mu' ", "xi", "#delta"};
constexpr Glyphs kUnicode{"\xCE\xBB", "\xCE\xBB\xC2\xB9", "\xCE\xBB\xC2\xB2", "\xCE\xBB\xE2\x80\xB2", "\xCE\xBC",
                          "\xCE\xBC\xE2\x80\xB2", "\xCE\xBE", "\xCE\xB4"};

const Glyphs& glyphs(Style s) { return s == Style::Unicode ? kUnicode : kAscii; }

template <class Term, class Emit>
void emit_app(const Term& t, std::string& out, Emit&& emit) {
  std::vector<const Term*> spine;
  const Term* head = &t;
  while (head->arity() == 2) {
    spine.push_back(&head->arg());
    head = &head->fun();
  }
  out += '(';
  emit(*head);
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    out += ' ';
    emit(**it);
  }
  out += ')';
}

void mu_name(const std::string& a, const Glyphs& g, std::string& out) {
  if (is_delta(a)) {
    out += g.delta;
  } else {
    out += '#';
    out += a;
  }
}

void emit(const MuppTerm& t, const Glyphs& g, std::string& out) {
  switch (t.kind()) {
    case MuppKind::Var: out += t.name(); return;
    case MuppKind::MuVar: mu_name(t.name(), g, out); return;
    case MuppKind::Lam2: out += g.lam2; return;
    case MuppKind::Xi:
      out += g.xi;
      out += '#';
      out += t.name();
      return;
    case MuppKind::Lam:
    case MuppKind::Lam1:
    case MuppKind::LamVac:
      out += t.is(MuppKind::Lam) ? g.lam : t.is(MuppKind::Lam1) ? g.lam1 : g.lam_vac;
      out += t.name();
      out += '.';
      emit(t.body(), g, out);
      return;
    case MuppKind::Mu:
    case MuppKind::MuVac:
      out += t.is(MuppKind::Mu) ? g.mu : g.mu_vac;
      out += '#';
      out += t.name();
      out += '.';
      emit(t.body(), g, out);
      return;
    case MuppKind::App:
      emit_app(t, out, [&](const MuppTerm& s) { emit(s, g, out); });
      return;
  }
}

void emit(const LmuTerm& t, const Glyphs& g, std::string& out) {
  switch (t.kind()) {
    case LmuKind::Var: out += t.name(); return;
    case LmuKind::Lam:
      out += g.lam;
      out += t.name();
      out += '.';
      emit(t.body(), g, out);
      return;
    case LmuKind::Mu:
      out += g.mu;
      out += '#';
      out += t.name();
      out += ".[";
      mu_name(t.naming(), g, out);
      out += ']';
      emit(t.body(), g, out);
      return;
    case LmuKind::App:
      emit_app(t, out, [&](const LmuTerm& s) { emit(s, g, out); });
      return;
  }
}

}  // namespace

std::string print(const MuppTerm& t, Style style) {
  std::string out;
  emit(t, glyphs(style), out);
  return out;
}

std::string print(const LmuTerm& t, Style style) {
  std::string out;
  emit(t, glyphs(style), out);
  return out;
}

}  // namespace lmu
