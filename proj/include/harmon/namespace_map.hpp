#pragma once

#include <map>
#include <string>
#include <string_view>

#include "harmon/term.hpp"

namespace harmon {

// Prefix -> base IRI bindings used for CURIE expansion and Turtle output.
// A prefix matches [A-Za-z][A-Za-z0-9_-]* or is empty (the default prefix);
// rebinding a prefix replaces the earlier binding.
class NamespaceMap {
 public:
  void bind(std::string prefix, Iri base);

  const Iri* find(std::string_view prefix) const;

  // Expands "prefix:local" (exactly one ':'). The concatenated result is
  // validated like any other IRI.
  Iri expand(std::string_view curie) const;

  const std::map<std::string, Iri, std::less<>>& bindings() const noexcept {
    return bindings_;
  }
  std::size_t size() const noexcept { return bindings_.size(); }

 private:
  std::map<std::string, Iri, std::less<>> bindings_;
};

}  // namespace harmon
