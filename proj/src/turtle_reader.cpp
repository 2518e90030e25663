#include "harmon/turtle_reader.hpp"

#include <cctype>
#include <cstdint>

#include "harmon/vocab.hpp"

namespace harmon {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::syntax:
      return "syntax";
    case DiagnosticKind::unbound_prefix:
      return "unbound-prefix";
    case DiagnosticKind::bad_literal:
      return "bad-literal";
    case DiagnosticKind::unsupported_construct:
      return "unsupported-construct";
  }
  return "syntax";
}

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column,
                       DiagnosticKind kind, std::string message) {
  throw ParseError(ParseDiagnostic{line, column, std::move(message), kind});
}

bool is_alpha(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_alnum(unsigned char c) { return is_alpha(c) || is_digit(c); }

// Characters allowed to continue a local name. '.' needs lookahead and is
// handled separately.
bool is_local_continuation(unsigned char c) {
  return is_alnum(c) || c == '_' || c == '-';
}

void encode_utf8(std::uint32_t code, std::string& out, std::size_t line,
                 std::size_t column) {
  if (code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) {
    fail(line, column, DiagnosticKind::bad_literal,
         "escape does not denote a Unicode scalar value");
  }
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else if (code < 0x10000) {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (code >> 18));
    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_whitespace_and_comments();
      if (at_end()) {
        tokens.push_back({TokenKind::eof, "", "", line_, column_});
        return tokens;
      }
      tokens.push_back(next_token());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size()
               ? static_cast<unsigned char>(text_[pos_ + ahead])
               : 0;
  }

  unsigned char advance() {
    unsigned char c = static_cast<unsigned char>(text_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_whitespace_and_comments() {
    while (!at_end()) {
      unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token next_token() {
    std::size_t line = line_;
    std::size_t col = column_;
    unsigned char c = peek();

    switch (c) {
      case '<':
        return lex_iri_ref(line, col);
      case '"':
        return lex_string(line, col);
      case '@':
        return lex_at_word(line, col);
      case '_':
        return lex_blank_label(line, col);
      case '.':
        if (is_digit(peek(1))) return lex_number(line, col);
        advance();
        return {TokenKind::dot, ".", "", line, col};
      case ';':
        advance();
        return {TokenKind::semicolon, ";", "", line, col};
      case ',':
        advance();
        return {TokenKind::comma, ",", "", line, col};
      case '[':
        advance();
        return {TokenKind::lbracket, "[", "", line, col};
      case ']':
        advance();
        return {TokenKind::rbracket, "]", "", line, col};
      case '(':
        advance();
        return {TokenKind::lparen, "(", "", line, col};
      case ')':
        advance();
        return {TokenKind::rparen, ")", "", line, col};
      case '^':
        advance();
        if (peek() != '^') {
          fail(line_, column_, DiagnosticKind::syntax, "expected '^^'");
        }
        advance();
        return {TokenKind::double_caret, "^^", "", line, col};
      default:
        break;
    }

    if (c == '+' || c == '-' || is_digit(c)) return lex_number(line, col);
    if (is_alpha(c)) return lex_word(line, col);
    if (c == ':') {
      // Prefixed name with the default (empty) prefix.
      advance();
      return {TokenKind::pname, "", lex_local_part(), line, col};
    }
    fail(line, col, DiagnosticKind::syntax, "illegal byte");
  }

  Token lex_iri_ref(std::size_t line, std::size_t col) {
    advance();  // '<'
    std::string value;
    for (;;) {
      if (at_end()) {
        fail(line, col, DiagnosticKind::syntax, "unterminated IRI");
      }
      std::size_t char_line = line_;
      std::size_t char_col = column_;
      unsigned char c = advance();
      if (c == '>') break;
      if (c <= 0x20 || c == 0x7F || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
        fail(char_line, char_col, DiagnosticKind::syntax,
             "character not allowed in an IRI");
      }
      value += static_cast<char>(c);
    }
    return {TokenKind::iri_ref, std::move(value), "", line, col};
  }

  Token lex_string(std::size_t line, std::size_t col) {
    advance();  // opening '"'
    bool long_form = false;
    if (peek() == '"' && peek(1) == '"') {
      advance();
      advance();
      long_form = true;
    } else if (peek() == '"') {
      // Empty short string.
      advance();
      return {TokenKind::string, "", "", line, col};
    }

    std::string value;
    for (;;) {
      if (at_end()) {
        fail(line, col, DiagnosticKind::syntax, "unterminated string");
      }
      std::size_t char_line = line_;
      std::size_t char_col = column_;
      unsigned char c = advance();
      if (c == '"') {
        if (!long_form) break;
        if (peek() == '"' && peek(1) == '"') {
          advance();
          advance();
          break;
        }
        value += '"';
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) {
        fail(char_line, char_col, DiagnosticKind::syntax,
             "newline in single-line string");
      }
      if (c != '\\') {
        value += static_cast<char>(c);
        continue;
      }
      if (at_end()) {
        fail(line, col, DiagnosticKind::syntax, "unterminated string");
      }
      std::size_t esc_line = line_;
      std::size_t esc_col = column_;
      unsigned char esc = advance();
      switch (esc) {
        case 't':
          value += '\t';
          break;
        case 'n':
          value += '\n';
          break;
        case 'r':
          value += '\r';
          break;
        case '"':
          value += '"';
          break;
        case '\\':
          value += '\\';
          break;
        case 'u':
          encode_utf8(lex_hex(4), value, esc_line, esc_col);
          break;
        case 'U':
          encode_utf8(lex_hex(8), value, esc_line, esc_col);
          break;
        default:
          fail(esc_line, esc_col, DiagnosticKind::bad_literal,
               "unsupported escape sequence");
      }
    }
    return {TokenKind::string, std::move(value), "", line, col};
  }

  std::uint32_t lex_hex(int count) {
    std::uint32_t code = 0;
    for (int i = 0; i < count; ++i) {
      std::size_t char_line = line_;
      std::size_t char_col = column_;
      if (at_end()) {
        fail(char_line, char_col, DiagnosticKind::bad_literal,
             "truncated unicode escape");
      }
      unsigned char c = advance();
      code <<= 4;
      if (c >= '0' && c <= '9') {
        code |= c - '0';
      } else if (c >= 'a' && c <= 'f') {
        code |= c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        code |= c - 'A' + 10;
      } else {
        fail(char_line, char_col, DiagnosticKind::bad_literal,
             "bad hex digit in unicode escape");
      }
    }
    return code;
  }

  Token lex_at_word(std::size_t line, std::size_t col) {
    advance();  // '@'
    if (!is_alpha(peek())) {
      fail(line_, column_, DiagnosticKind::syntax, "expected name after '@'");
    }
    std::string word;
    while (is_alnum(peek()) || peek() == '-') {
      word += static_cast<char>(advance());
    }
    return {TokenKind::at_word, std::move(word), "", line, col};
  }

  Token lex_blank_label(std::size_t line, std::size_t col) {
    advance();  // '_'
    if (peek() != ':') {
      fail(line_, column_, DiagnosticKind::syntax, "expected ':' after '_'");
    }
    advance();
    if (!is_alnum(peek()) && peek() != '_') {
      fail(line_, column_, DiagnosticKind::syntax,
           "expected blank node label");
    }
    std::string label;
    while (is_alnum(peek()) || peek() == '_') {
      label += static_cast<char>(advance());
    }
    return {TokenKind::blank_label, std::move(label), "", line, col};
  }

  // Integers and decimals only; an exponent makes it a double, which this
  // subset does not carry.
  Token lex_number(std::size_t line, std::size_t col) {
    std::string lexical;
    if (peek() == '+' || peek() == '-') {
      lexical += static_cast<char>(advance());
    }
    bool has_dot = false;
    while (is_digit(peek())) lexical += static_cast<char>(advance());
    if (peek() == '.' && is_digit(peek(1))) {
      has_dot = true;
      lexical += static_cast<char>(advance());
      while (is_digit(peek())) lexical += static_cast<char>(advance());
    }
    if (lexical.empty() || !is_digit(static_cast<unsigned char>(
                               lexical.back()))) {
      fail(line, col, DiagnosticKind::syntax, "malformed number");
    }
    if (peek() == 'e' || peek() == 'E') {
      fail(line, col, DiagnosticKind::unsupported_construct,
           "double (exponent) literals are not supported");
    }
    if (is_alpha(peek()) || peek() == '_') {
      fail(line_, column_, DiagnosticKind::syntax,
           "unexpected character after number");
    }
    return {has_dot ? TokenKind::decimal : TokenKind::integer,
            std::move(lexical), "", line, col};
  }

  Token lex_word(std::size_t line, std::size_t col) {
    std::string word;
    while (is_alnum(peek()) || peek() == '_' || peek() == '-') {
      word += static_cast<char>(advance());
    }
    if (peek() == ':') {
      advance();
      return {TokenKind::pname, std::move(word), lex_local_part(), line, col};
    }
    if (word == "a") return {TokenKind::keyword_a, "a", "", line, col};
    if (word == "true" || word == "false") {
      return {TokenKind::boolean, std::move(word), "", line, col};
    }
    if (word.size() == 6 || word.size() == 4) {
      std::string upper;
      for (char w : word) upper += static_cast<char>(std::toupper(
          static_cast<unsigned char>(w)));
      if (upper == "PREFIX") {
        return {TokenKind::sparql_prefix, std::move(word), "", line, col};
      }
      if (upper == "BASE") {
        fail(line, col, DiagnosticKind::unsupported_construct,
             "base declarations are not supported");
      }
    }
    fail(line, col, DiagnosticKind::syntax, "unexpected name");
  }

  // Local part of a prefixed name: alphanumerics and '_' to start, then
  // alphanumerics, '_', '-', and interior '.' (a trailing '.' ends the
  // statement instead). May be empty.
  std::string lex_local_part() {
    std::string local;
    unsigned char c = peek();
    if (!(is_alnum(c) || c == '_')) return local;
    local += static_cast<char>(advance());
    for (;;) {
      c = peek();
      if (is_local_continuation(c)) {
        local += static_cast<char>(advance());
      } else if (c == '.' && is_local_continuation(peek(1))) {
        local += static_cast<char>(advance());
      } else {
        return local;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParsedDocument run() {
    while (peek().kind != TokenKind::eof) {
      if (peek().kind == TokenKind::at_word) {
        directive();
      } else if (peek().kind == TokenKind::sparql_prefix) {
        sparql_prefix_directive();
      } else {
        triples();
      }
    }
    return std::move(doc_);
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }

  const Token& take() { return tokens_[cursor_++]; }

  [[noreturn]] void fail_at(const Token& token, DiagnosticKind kind,
                            std::string message) const {
    fail(token.line, token.column, kind, std::move(message));
  }

  void directive() {
    const Token& at = take();
    if (at.text == "base") {
      fail_at(at, DiagnosticKind::unsupported_construct,
              "base declarations are not supported");
    }
    if (at.text != "prefix") {
      fail_at(at, DiagnosticKind::syntax, "unknown directive");
    }
    bind_prefix();
    if (peek().kind != TokenKind::dot) {
      fail_at(peek(), DiagnosticKind::syntax,
              "expected '.' after @prefix directive");
    }
    take();
  }

  void sparql_prefix_directive() {
    take();
    bind_prefix();
    // SPARQL-style PREFIX takes no trailing dot.
  }

  void bind_prefix() {
    if (peek().kind != TokenKind::pname || !peek().aux.empty()) {
      fail_at(peek(), DiagnosticKind::syntax,
              "expected a prefix ending in ':'");
    }
    Token name = take();
    if (peek().kind != TokenKind::iri_ref) {
      fail_at(peek(), DiagnosticKind::syntax, "expected an IRI");
    }
    Token iri = take();
    try {
      doc_.namespaces.bind(name.text, Iri(iri.text));
    } catch (const Error& e) {
      fail_at(iri, DiagnosticKind::syntax, e.what());
    }
  }

  void triples() {
    Term subject = parse_subject();
    parse_predicate_object_list(subject);
    if (peek().kind != TokenKind::dot) {
      fail_at(peek(), DiagnosticKind::syntax,
              "expected '.' at end of statement");
    }
    take();
  }

  void parse_predicate_object_list(const Term& subject) {
    for (;;) {
      Term predicate = parse_predicate();
      for (;;) {
        Term object = parse_object();
        doc_.graph.insert(Triple(subject, predicate, object));
        if (peek().kind != TokenKind::comma) break;
        take();
      }
      if (peek().kind != TokenKind::semicolon) return;
      take();
      // A trailing ';' before '.' is allowed.
      if (peek().kind == TokenKind::dot) return;
    }
  }

  Term parse_subject() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::iri_ref:
      case TokenKind::pname:
        return Term(parse_iri());
      case TokenKind::blank_label:
        return Term(BlankNode(take().text));
      case TokenKind::lbracket:
        fail_at(token, DiagnosticKind::unsupported_construct,
                "blank node property lists are not supported");
      case TokenKind::lparen:
        fail_at(token, DiagnosticKind::unsupported_construct,
                "collections are not supported");
      case TokenKind::string:
      case TokenKind::integer:
      case TokenKind::decimal:
      case TokenKind::boolean:
        fail_at(token, DiagnosticKind::syntax,
                "a literal cannot be the subject of a triple");
      case TokenKind::keyword_a:
        fail_at(token, DiagnosticKind::syntax,
                "'a' is only allowed as a predicate");
      default:
        fail_at(token, DiagnosticKind::syntax, "expected a subject");
    }
  }

  Term parse_predicate() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::keyword_a:
        take();
        return Term(vocab::rdf_type());
      case TokenKind::iri_ref:
      case TokenKind::pname:
        return Term(parse_iri());
      case TokenKind::blank_label:
        fail_at(token, DiagnosticKind::syntax,
                "a blank node cannot be the predicate of a triple");
      case TokenKind::string:
      case TokenKind::integer:
      case TokenKind::decimal:
      case TokenKind::boolean:
        fail_at(token, DiagnosticKind::syntax,
                "a literal cannot be the predicate of a triple");
      default:
        fail_at(token, DiagnosticKind::syntax, "expected a predicate");
    }
  }

  Term parse_object() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::iri_ref:
      case TokenKind::pname:
        return Term(parse_iri());
      case TokenKind::blank_label:
        return Term(BlankNode(take().text));
      case TokenKind::string:
        return Term(parse_string_literal());
      case TokenKind::integer: {
        Token t = take();
        return Term(Literal(t.text, vocab::xsd_integer()));
      }
      case TokenKind::decimal: {
        Token t = take();
        return Term(Literal(t.text, vocab::xsd_decimal()));
      }
      case TokenKind::boolean: {
        Token t = take();
        return Term(Literal(t.text, vocab::xsd_boolean()));
      }
      case TokenKind::lbracket:
        fail_at(token, DiagnosticKind::unsupported_construct,
                "blank node property lists are not supported");
      case TokenKind::lparen:
        fail_at(token, DiagnosticKind::unsupported_construct,
                "collections are not supported");
      case TokenKind::keyword_a:
        fail_at(token, DiagnosticKind::syntax,
                "'a' is only allowed as a predicate");
      default:
        fail_at(token, DiagnosticKind::syntax, "expected an object");
    }
  }

  Literal parse_string_literal() {
    Token value = take();
    if (peek().kind == TokenKind::at_word) {
      Token tag = take();
      try {
        return Literal::with_lang(std::move(value.text), tag.text);
      } catch (const Error& e) {
        fail_at(tag, DiagnosticKind::bad_literal, e.what());
      }
    }
    if (peek().kind == TokenKind::double_caret) {
      take();
      if (peek().kind != TokenKind::iri_ref &&
          peek().kind != TokenKind::pname) {
        fail_at(peek(), DiagnosticKind::syntax, "expected a datatype IRI");
      }
      Iri datatype = parse_iri();
      return Literal(std::move(value.text), std::move(datatype));
    }
    return Literal(std::move(value.text));
  }

  Iri parse_iri() {
    const Token& token = peek();
    if (token.kind == TokenKind::iri_ref) {
      Token t = take();
      try {
        return Iri(std::move(t.text));
      } catch (const InvalidIri& e) {
        fail_at(t, DiagnosticKind::syntax, e.what());
      }
    }
    Token t = take();
    try {
      return doc_.namespaces.expand(t.text + ":" + t.aux);
    } catch (const UnboundPrefix& e) {
      fail_at(t, DiagnosticKind::unbound_prefix, e.what());
    } catch (const Error& e) {
      fail_at(t, DiagnosticKind::syntax, e.what());
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  ParsedDocument doc_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  return Lexer(text).run();
}

ParsedDocument parse_turtle(std::string_view text) {
  return Parser(tokenize(text)).run();
}

}  // namespace harmon
