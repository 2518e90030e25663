#pragma once

#include <cstddef>

#include "harmon/term.hpp"

namespace harmon {

// One RDF statement. Construction enforces the slot rules: the subject is an
// IRI or blank node, the predicate is an IRI.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object)
      : subject_(std::move(subject)),
        predicate_(std::move(predicate)),
        object_(std::move(object)) {
    if (is_literal(subject_)) {
      throw InvalidTriple("a literal cannot be the subject of a triple");
    }
    if (!is_iri(predicate_)) {
      throw InvalidTriple("the predicate of a triple must be an IRI");
    }
  }

  const Term& subject() const noexcept { return subject_; }
  const Term& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::size_t seed = hash_term(t.subject());
    seed ^= hash_term(t.predicate()) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
    seed ^= hash_term(t.object()) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
    return seed;
  }
};

}  // namespace harmon
