#include "harmon/term.hpp"

#include <functional>

namespace harmon {

namespace {

bool is_forbidden_iri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;  // whitespace and control bytes
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

bool is_ascii_alpha(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_ascii_alnum(unsigned char c) {
  return is_ascii_alpha(c) || (c >= '0' && c <= '9');
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  for (std::size_t i = 0; i < value_.size(); ++i) {
    if (is_forbidden_iri_char(static_cast<unsigned char>(value_[i]))) {
      throw InvalidIri(value_, i, "character not allowed in an IRI");
    }
  }
  auto colon = value_.find(':');
  if (colon == std::string::npos) {
    throw InvalidIri(value_, value_.size(), "missing ':' after scheme");
  }
  if (colon == 0) {
    throw InvalidIri(value_, 0, "empty scheme");
  }
  if (!is_ascii_alpha(static_cast<unsigned char>(value_[0]))) {
    throw InvalidIri(value_, 0, "scheme must start with a letter");
  }
  for (std::size_t i = 1; i < colon; ++i) {
    unsigned char c = static_cast<unsigned char>(value_[i]);
    if (!is_ascii_alnum(c) && c != '+' && c != '-' && c != '.') {
      throw InvalidIri(value_, i,
                       "scheme may only contain letters, digits, '+', '-' "
                       "or '.'");
    }
  }
}

Literal Literal::with_lang(std::string lexical, std::string lang) {
  bool ok = !lang.empty() && is_ascii_alpha(static_cast<unsigned char>(lang[0]));
  bool seen_hyphen = false;
  for (std::size_t i = 0; ok && i < lang.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(lang[i]);
    if (c == '-') {
      // no leading, trailing, or doubled hyphens
      if (i + 1 == lang.size() || lang[i + 1] == '-') ok = false;
      seen_hyphen = true;
    } else if (seen_hyphen ? !is_ascii_alnum(c) : !is_ascii_alpha(c)) {
      ok = false;
    }
  }
  if (!ok) throw InvalidLanguageTag(lang);
  Literal lit(std::move(lexical));
  lit.lang_ = std::move(lang);
  return lit;
}

Literal make_literal(std::string lexical, std::optional<Iri> datatype,
                     std::optional<std::string> lang) {
  if (datatype && lang) throw ConflictingQualifiers();
  if (lang) return Literal::with_lang(std::move(lexical), std::move(*lang));
  if (datatype) return Literal(std::move(lexical), std::move(*datatype));
  return Literal(std::move(lexical));
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw InvalidBlankNodeLabel(label_);
  for (char c : label_) {
    if (!is_ascii_alnum(static_cast<unsigned char>(c)) && c != '_') {
      throw InvalidBlankNodeLabel(label_);
    }
  }
}

std::size_t hash_term(const Term& t) {
  std::hash<std::string> h;
  auto mix = [](std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  return std::visit(
      [&](const auto& node) -> std::size_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Iri>) {
          return mix(1, h(node.value()));
        } else if constexpr (std::is_same_v<T, Literal>) {
          std::size_t seed = mix(2, h(node.lexical()));
          if (node.datatype()) seed = mix(seed, h(node.datatype()->value()));
          if (node.lang()) seed = mix(seed, h(*node.lang()));
          return seed;
        } else {
          return mix(3, h(node.label()));
        }
      },
      t);
}

}  // namespace harmon
