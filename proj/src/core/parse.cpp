#include <cctype>

#include "lmupp/syntax.hpp"

namespace lmu {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kLambdaUtf8 = "\xCE\xBB";
constexpr std::string_view kMuUtf8 = "\xCE\xBC";

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  // No whitespace skipping: used inside tokens such as \1x or xi#a.
  char peek_raw() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool starts_with(std::string_view p) {
    skip_ws();
    return s_.substr(i_).starts_with(p);
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool consume(std::string_view p) {
    if (!starts_with(p)) return false;
    i_ += p.size();
    return true;
  }
  bool consume_raw(char c) {
    if (peek_raw() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  // "mu" keyword not followed by an identifier character.
  bool keyword_mu() {
    skip_ws();
    if (s_.substr(i_).starts_with(kMuUtf8)) {
      i_ += kMuUtf8.size();
      return true;
    }
    if (!s_.substr(i_).starts_with("mu")) return false;
    char next = i_ + 2 < s_.size() ? s_[i_ + 2] : '\0';
    if (next != '\'' && ident_char(next)) return false;
    i_ += 2;
    return true;
  }

  std::string ident(const char* what) {
    skip_ws();
    return ident_raw(what);
  }

  std::string ident_raw(const char* what) {
    if (i_ >= s_.size() || !ident_start(s_[i_])) fail(std::string("expected ") + what);
    std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  std::string mu_name(const char* what) {
    skip_ws();
    if (!consume_raw('#')) fail(std::string("expected '#' before ") + what);
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      fail(std::string("expected ") + what);
    }
    std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  std::vector<std::string> macro_body(std::string& name) {
    name = ident("macro name");
    std::vector<std::string> args;
    while (true) {
      skip_ws();
      if (i_ >= s_.size()) fail("unterminated {...} reference");
      if (s_[i_] == '}') {
        ++i_;
        return args;
      }
      std::size_t start = i_;
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '}') ++i_;
      args.emplace_back(s_.substr(start, i_ - start));
    }
  }

  std::size_t offset() const { return i_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(i_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, line, col);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::string delta_binder_message() { return "delta is a mu-constant: mu #delta is not a term"; }

class MuppParser {
 public:
  MuppParser(std::string_view text, const MuppMacros& macros) : c_(text), macros_(macros) {}

  MuppTerm parse() {
    MuppTerm t = expr();
    if (!c_.at_end()) c_.fail("unexpected trailing input");
    return t;
  }

 private:
  MuppTerm expr() {
    MuppTerm t = unit();
    while (!c_.at_end() && c_.peek() != ')') t = MuppTerm::app(t, unit());
    return t;
  }

  MuppTerm unit() {
    std::size_t at = (c_.skip_ws(), c_.offset());
    try {
      return unit_inner();
    } catch (const TermError& e) {
      c_.fail_at(at, e.what());
    }
  }

  MuppTerm unit_inner() {
    if (c_.at_end()) c_.fail("unexpected end of input");
    if (c_.consume('(')) {
      MuppTerm t = expr();
      c_.expect(')', "')'");
      return t;
    }
    if (c_.consume('\\') || c_.consume(kLambdaUtf8)) return abstraction();
    if (c_.keyword_mu()) {
      bool vac = c_.consume_raw('\'');
      std::string a = c_.mu_name("mu-variable");
      if (is_delta(a)) c_.fail(delta_binder_message());
      c_.expect('.', "'.' after mu binder");
      MuppTerm body = unit();
      return vac ? MuppTerm::mu_vac(a, body) : MuppTerm::mu(a, body);
    }
    if (c_.consume("xi#")) {
      std::string a = c_.ident_raw("mu-variable after xi#");
      return MuppTerm::xi(a);
    }
    if (c_.peek() == '#') {
      std::string a = c_.mu_name("mu-variable");
      return is_delta(a) ? MuppTerm::delta() : MuppTerm::mu_var(a);
    }
    if (c_.consume('{')) {
      std::string name;
      auto args = c_.macro_body(name);
      std::optional<MuppTerm> t = macros_ ? macros_(name, args) : std::nullopt;
      if (!t) c_.fail("unknown reference {" + name + "}");
      return *t;
    }
    if (c_.peek() == '[') c_.fail("namings [#a] belong to the lambda-mu calculus");
    std::string x = c_.ident("term");
    if (x == "mu") c_.fail("'mu' is reserved");
    return MuppTerm::var(x);
  }

  MuppTerm abstraction() {
    if (c_.consume_raw('1')) {
      std::string x = c_.ident_raw("variable after \\1");
      c_.expect('.', "'.' after binder");
      return MuppTerm::lam1(x, unit());
    }
    if (c_.consume_raw('2')) {
      // Optional explicit form \2x.x
      if (ident_start(c_.peek_raw())) {
        std::string x = c_.ident_raw("variable");
        c_.expect('.', "'.' after binder");
        std::string y = c_.ident("variable");
        if (x != y) c_.fail("\\2 only abstracts the identity \\2x.x");
      }
      return MuppTerm::lam2();
    }
    if (c_.consume_raw('\'')) {
      std::string x = c_.ident_raw("variable after \\'");
      c_.expect('.', "'.' after binder");
      return MuppTerm::lam_vac(x, unit());
    }
    std::string x = c_.ident("variable after \\");
    c_.expect('.', "'.' after binder");
    return MuppTerm::lam(x, unit());
  }

  Cursor c_;
  const MuppMacros& macros_;
};

class LmuParser {
 public:
  LmuParser(std::string_view text, const LmuMacros& macros) : c_(text), macros_(macros) {}

  LmuTerm parse() {
    LmuTerm t = expr();
    if (!c_.at_end()) c_.fail("unexpected trailing input");
    return t;
  }

 private:
  LmuTerm expr() {
    LmuTerm t = unit();
    while (!c_.at_end() && c_.peek() != ')') t = LmuTerm::app(t, unit());
    return t;
  }

  LmuTerm unit() {
    std::size_t at = (c_.skip_ws(), c_.offset());
    try {
      return unit_inner();
    } catch (const TermError& e) {
      c_.fail_at(at, e.what());
    }
  }

  LmuTerm unit_inner() {
    if (c_.at_end()) c_.fail("unexpected end of input");
    if (c_.consume('(')) {
      LmuTerm t = expr();
      c_.expect(')', "')'");
      return t;
    }
    if (c_.consume('\\') || c_.consume(kLambdaUtf8)) {
      std::string x = c_.ident("variable after \\");
      c_.expect('.', "'.' after binder");
      return LmuTerm::lam(x, unit());
    }
    if (c_.keyword_mu()) {
      std::string a = c_.mu_name("mu-variable");
      if (is_delta(a)) c_.fail(delta_binder_message());
      c_.expect('.', "'.' after mu binder");
      c_.expect('[', "naming [#b] directly under mu");
      std::string b = c_.mu_name("mu-variable in naming");
      c_.expect(']', "']'");
      return LmuTerm::mu(a, b, unit());
    }
    if (c_.peek() == '#') c_.fail("mu-variables only occur in namings mu #a.[#b]t");
    if (c_.peek() == '[') c_.fail("a naming must occur directly under mu");
    if (c_.consume('{')) {
      std::string name;
      auto args = c_.macro_body(name);
      std::optional<LmuTerm> t = macros_ ? macros_(name, args) : std::nullopt;
      if (!t) c_.fail("unknown reference {" + name + "}");
      return *t;
    }
    std::string x = c_.ident("term");
    if (x == "mu") c_.fail("'mu' is reserved");
    return LmuTerm::var(x);
  }

  Cursor c_;
  const LmuMacros& macros_;
};

}  // namespace

MuppTerm parse_mupp(std::string_view text, const MuppMacros& macros) { return MuppParser(text, macros).parse(); }

LmuTerm parse_lmu(std::string_view text, const LmuMacros& macros) { return LmuParser(text, macros).parse(); }

}  // namespace lmu
