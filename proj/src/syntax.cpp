#include "mirror/syntax.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace mirror {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string render_byte(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) {
    return std::string("'") + c + "'";
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "byte 0x%02X", static_cast<unsigned char>(c));
  return buf;
}

struct Pos {
  std::size_t offset;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  ParseResult run() {
    std::optional<Term> term = parse_term();
    if (!term) return std::move(error_);
    skip_ws();
    if (!at_end()) {
      fail_here("end of input");
      return std::move(error_);
    }
    return std::move(*term);
  }

 private:
  static constexpr const char* kTermExpected =
      "a term ('base', 'self', 'node', 'cap', 'enter' or 'named')";

  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  void advance() {
    if (in_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Pos here() const { return {pos_, line_, column_}; }

  // Renders the lexeme starting at the current position, for "found".
  std::string found_here() const {
    if (at_end()) return "end of input";
    char c = peek();
    if (is_ident_start(c)) {
      std::size_t end = pos_;
      while (end < in_.size() && is_ident_char(in_[end])) ++end;
      return "'" + std::string(in_.substr(pos_, end - pos_)) + "'";
    }
    return render_byte(c);
  }

  void fail_here(std::string expected) {
    fail_at(here(), std::move(expected), found_here());
  }

  void fail_at(Pos p, std::string expected, std::string found) {
    error_ = ParseError{p.offset, p.line, p.column, std::move(expected), std::move(found)};
  }

  bool expect(char c, const char* what) {
    skip_ws();
    if (at_end() || peek() != c) {
      fail_here(what);
      return false;
    }
    advance();
    return true;
  }

  // Consumes an identifier, or fails with the term-keyword message.
  std::optional<std::string_view> lex_identifier() {
    skip_ws();
    if (at_end() || !is_ident_start(peek())) {
      fail_here(kTermExpected);
      return std::nullopt;
    }
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) advance();
    return in_.substr(start, pos_ - start);
  }

  std::optional<std::string> lex_string() {
    if (!expect('"', "a double-quoted string")) return std::nullopt;
    std::string out;
    for (;;) {
      if (at_end()) {
        fail_here("closing '\"'");
        return std::nullopt;
      }
      char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        if (!lex_escape(out)) return std::nullopt;
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x20) {
        fail_here("an escaped control character (raw control bytes are not allowed in strings)");
        return std::nullopt;
      }
      out.push_back(c);
      advance();
    }
  }

  bool lex_escape(std::string& out) {
    Pos start = here();
    advance();  // backslash
    if (at_end()) {
      fail_at(start, "an escape ('\\\"', '\\\\', '\\n', '\\t' or '\\u{...}')", "end of input");
      return false;
    }
    char c = peek();
    switch (c) {
      case '"': out.push_back('"'); advance(); return true;
      case '\\': out.push_back('\\'); advance(); return true;
      case 'n': out.push_back('\n'); advance(); return true;
      case 't': out.push_back('\t'); advance(); return true;
      case 'u': advance(); return lex_unicode_escape(start, out);
      default:
        fail_at(start, "an escape ('\\\"', '\\\\', '\\n', '\\t' or '\\u{...}')",
                "'\\" + std::string(1, c) + "'");
        return false;
    }
  }

  bool lex_unicode_escape(Pos start, std::string& out) {
    if (at_end() || peek() != '{') {
      fail_here("'{' after '\\u'");
      return false;
    }
    advance();
    std::uint32_t cp = 0;
    std::size_t digits = 0;
    while (!at_end() && std::isxdigit(static_cast<unsigned char>(peek()))) {
      char c = peek();
      std::uint32_t v = c <= '9' ? static_cast<std::uint32_t>(c - '0')
                                 : static_cast<std::uint32_t>((c | 0x20) - 'a' + 10);
      cp = cp * 16 + v;
      ++digits;
      if (digits > 6) {
        fail_at(start, "at most six hex digits in '\\u{...}'", "a longer escape");
        return false;
      }
      advance();
    }
    if (digits == 0) {
      fail_here("a hex digit in '\\u{...}'");
      return false;
    }
    if (at_end() || peek() != '}') {
      fail_here("'}' closing '\\u{...}'");
      return false;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail_at(start, "a Unicode scalar value in '\\u{...}'", "an out-of-range code point");
      return false;
    }
    advance();
    append_utf8(out, cp);
    return true;
  }

  std::optional<Term> parse_term() {
    struct Frame {
      TermKind kind;
      std::string label;
    };
    std::vector<Frame> frames;
    std::optional<Term> leaf;
    // The grammar is a chain of unary prefixes over a leaf keyword; collect
    // the prefixes, then fold the matching ')' run.
    for (;;) {
      skip_ws();
      Pos start = here();
      std::optional<std::string_view> id = lex_identifier();
      if (!id) return std::nullopt;
      if (*id == "base") {
        leaf = Term::base();
        break;
      }
      if (*id == "self") {
        leaf = Term::self_ref();
        break;
      }
      if (*id == "node" || *id == "cap" || *id == "enter") {
        if (!expect('(', "'('")) return std::nullopt;
        TermKind k = *id == "node" ? TermKind::Node
                   : *id == "cap"  ? TermKind::Cap
                                   : TermKind::Enter;
        frames.push_back({k, {}});
        continue;
      }
      if (*id == "named") {
        if (!expect('(', "'('")) return std::nullopt;
        skip_ws();
        std::optional<std::string> label = lex_string();
        if (!label) return std::nullopt;
        if (!expect(',', "','")) return std::nullopt;
        frames.push_back({TermKind::Named, std::move(*label)});
        continue;
      }
      fail_at(start, kTermExpected, "'" + std::string(*id) + "'");
      return std::nullopt;
    }
    Term term = std::move(*leaf);
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      if (!expect(')', "')'")) return std::nullopt;
      switch (it->kind) {
        case TermKind::Node: term = Term::node(std::move(term)); break;
        case TermKind::Cap: term = Term::cap(std::move(term)); break;
        case TermKind::Enter: term = Term::enter(std::move(term)); break;
        default: term = Term::named(std::move(it->label), std::move(term)); break;
      }
    }
    return term;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  ParseError error_;
};

void append_escaped(std::string& out, const std::string& label) {
  for (char c : label) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[16];
          std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
}

}  // namespace

ParseResult parse(std::string_view input) {
  return Parser(input).run();
}

std::string print(const Term& t) {
  std::string out;
  std::size_t closes = 0;
  const Term* cur = &t;
  for (;;) {
    switch (cur->kind()) {
      case TermKind::Base:
        out += "base";
        out.append(closes, ')');
        return out;
      case TermKind::SelfRef:
        out += "self";
        out.append(closes, ')');
        return out;
      case TermKind::Node:
        out += "node(";
        break;
      case TermKind::Cap:
        out += "cap(";
        break;
      case TermKind::Enter:
        out += "enter(";
        break;
      case TermKind::Named:
        out += "named(\"";
        append_escaped(out, cur->label());
        out += "\", ";
        break;
    }
    ++closes;
    cur = &cur->child();
  }
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << print(t);
}

std::string describe(const ParseError& error) {
  std::ostringstream os;
  os << "line " << error.line << ", column " << error.column << " (byte "
     << error.byte_offset << "): expected " << error.expected << ", found "
     << error.found;
  return os.str();
}

}  // namespace mirror
