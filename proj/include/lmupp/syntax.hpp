#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lmupp/lmu_term.hpp"
#include "lmupp/mupp_term.hpp"

namespace lmu {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_, column_;
};

// Expands {name arg ...} references inside term text. Returning nullopt
// reports an unknown name.
using MuppMacros = std::function<std::optional<MuppTerm>(const std::string& name, const std::vector<std::string>& args)>;
using LmuMacros = std::function<std::optional<LmuTerm>(const std::string& name, const std::vector<std::string>& args)>;

// Concrete syntax (ASCII):
//   x            lambda-variable (lowercase identifier)
//   #a           mu-variable; #delta is the mu-constant
//   xi#a         the xi symbol of #a
//   \x.t         abstraction;  \1x.t linear, \2 identity, \'x.t vacuous
//   mu #a.t      mu-abstraction; mu' #a.t vacuous
//   (t u v)      application, left-associative
// A binder's body is a single unit: a variable, a parenthesised group or
// another binder. Thus (\x.x y) applies \x.x to y. The lambda-mu calculus
// uses the same syntax with mu #a.[#b]t and no bare mu-variables.
MuppTerm parse_mupp(std::string_view text, const MuppMacros& macros = {});
LmuTerm parse_lmu(std::string_view text, const LmuMacros& macros = {});

enum class Style { Ascii, Unicode };

std::string print(const MuppTerm& t, Style style = Style::Ascii);
std::string print(const LmuTerm& t, Style style = Style::Ascii);

}  // namespace lmu
