#ifndef MIRROR_SYNTAX_HPP
#define MIRROR_SYNTAX_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "mirror/term.hpp"

namespace mirror {

/// First syntax error in the input, by position. Lines and columns are
/// 1-based; columns count bytes within the line.
struct ParseError {
  std::size_t byte_offset;
  std::size_t line;
  std::size_t column;
  std::string expected;  // what the parser was looking for
  std::string found;     // offending lexeme, or "end of input"
};

using ParseResult = std::variant<Term, ParseError>;

/// Parses the concrete term grammar:
///
///   term   := "base" | "self"
///           | "node" "(" term ")" | "cap" "(" term ")" | "enter" "(" term ")"
///           | "named" "(" string "," term ")"
///   string := double-quoted; escapes \" \\ \n \t \u{XXXX}
///
/// Whitespace between tokens is insignificant. The whole input must be a
/// single term; trailing content is an error.
ParseResult parse(std::string_view input);

/// Canonical rendering: no whitespace except one space after the comma in
/// named(...), labels quoted with minimal escaping. parse(print(t)) == t.
std::string print(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

/// "line L, column C (byte B): expected E, found F"
std::string describe(const ParseError& error);

}  // namespace mirror

#endif  // MIRROR_SYNTAX_HPP
