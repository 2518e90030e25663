#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "harmon/graph.hpp"
#include "harmon/namespace_map.hpp"

namespace harmon {

// What went wrong, and where. Parsing is fail-fast: the first problem stops
// the run and is the only diagnostic. line and column are 1-based and count
// bytes within the line, pointing at the first offending byte.
enum class DiagnosticKind { syntax, unbound_prefix, bad_literal,
                            unsupported_construct };

std::string_view to_string(DiagnosticKind kind);

struct ParseDiagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  DiagnosticKind kind = DiagnosticKind::syntax;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic)
      : Error(std::to_string(diagnostic.line) + ":" +
              std::to_string(diagnostic.column) + ": " + diagnostic.message),
        diagnostic_(std::move(diagnostic)) {}

  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

enum class TokenKind {
  iri_ref,       // <...>, text holds the IRI
  pname,         // prefix:local, text holds the prefix, aux the local part
  blank_label,   // _:label, text holds the label
  string,        // text holds the decoded value
  integer,       // text holds the verbatim lexical form
  decimal,       // text holds the verbatim lexical form
  boolean,       // text is "true" or "false"
  keyword_a,
  at_word,       // @word, text holds the word (directive or language tag)
  sparql_prefix, // the keyword PREFIX
  dot,
  semicolon,
  comma,
  double_caret,
  lbracket,
  rbracket,
  lparen,
  rparen,
  eof
};

struct Token {
  TokenKind kind;
  std::string text;
  std::string aux;
  std::size_t line;
  std::size_t column;
};

// Lexes the supported Turtle subset. Unsupported constructs that are still
// lexically well-formed (brackets, parentheses, @base) come back as tokens
// and are rejected by the parser; byte-level problems throw ParseError here.
std::vector<Token> tokenize(std::string_view text);

struct ParsedDocument {
  Graph graph;
  NamespaceMap namespaces;
};

// Parses the subset: @prefix / PREFIX directives, prefixed names, 'a',
// ';' and ',' lists, blank node labels, short and long double-quoted
// strings with \uXXXX / \UXXXXXXXX and the five short escapes, '^^'
// datatypes, language tags, bare integers / decimals / booleans, and '#'
// comments. @base, collections, and blank-node property lists are reported
// as unsupported constructs; relative IRIs are rejected.
ParsedDocument parse_turtle(std::string_view text);

}  // namespace harmon
