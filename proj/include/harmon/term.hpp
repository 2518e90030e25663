#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "harmon/error.hpp"

namespace harmon {

// An absolute IRI. Validation is purely syntactic: a non-empty,
// alphabetic-leading scheme before the first ':', and none of the characters
// that are illegal inside an N-Triples IRIREF (whitespace and other control
// bytes, < > " { } | ^ ` and backslash).
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& value() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// An RDF literal. The lexical form is kept verbatim, byte for byte; no
// numeric or whitespace normalisation ever happens. Equality is structural,
// so "4.6" and "4.60" are distinct literals even under the same datatype.
// A literal carries at most one of {datatype, language tag}.
class Literal {
 public:
  explicit Literal(std::string lexical) : lexical_(std::move(lexical)) {}

  Literal(std::string lexical, Iri datatype)
      : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {}

  static Literal with_lang(std::string lexical, std::string lang);

  const std::string& lexical() const noexcept { return lexical_; }
  const std::optional<Iri>& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& lang() const noexcept { return lang_; }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  std::optional<Iri> datatype_;
  std::optional<std::string> lang_;
};

// Builds a literal from optional qualifiers, rejecting the datatype+lang
// combination.
Literal make_literal(std::string lexical, std::optional<Iri> datatype = {},
                     std::optional<std::string> lang = {});

class BlankNode {
 public:
  explicit BlankNode(std::string label);

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

// Hands out session-scoped blank node labels b0, b1, ...
class BlankNodeGenerator {
 public:
  BlankNode next() { return BlankNode("b" + std::to_string(counter_++)); }

 private:
  std::uint64_t counter_ = 0;
};

using Term = std::variant<Iri, Literal, BlankNode>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_literal(const Term& t) {
  return std::holds_alternative<Literal>(t);
}
inline bool is_blank(const Term& t) {
  return std::holds_alternative<BlankNode>(t);
}

inline const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }
inline const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }
inline const BlankNode& as_blank(const Term& t) {
  return std::get<BlankNode>(t);
}

std::size_t hash_term(const Term& t);

}  // namespace harmon
