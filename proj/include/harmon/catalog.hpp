#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "harmon/term.hpp"

namespace harmon {

// One vocabulary term as it appears in a catalog: the local name is the IRI
// tail after the last '/' or '#', the label is kept verbatim for humans.
struct VocabEntry {
  std::string local;
  std::string label;
  Iri iri;

  friend bool operator==(const VocabEntry&, const VocabEntry&) = default;
};

enum class VocabKind { unit, quantity_kind, observable_property };

std::string_view to_string(VocabKind kind);
std::optional<VocabKind> vocab_kind_from_string(std::string_view text);

// Accessor name -> vocabulary entry, sorted by name. The manifest text is
// the catalog's durable form and the runtime source of truth; lookups are
// O(log n).
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(VocabKind kind) : kind_(kind) {}

  // Rejects duplicate names.
  void add(std::string name, VocabEntry entry);

  const VocabEntry* find(std::string_view name) const;

  // Reverse lookup used to recover the accessor of a unit IRI.
  const std::string* accessor_for_iri(const Iri& iri) const;
  bool contains_iri(const Iri& iri) const {
    return accessor_for_iri(iri) != nullptr;
  }

  VocabKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<std::string, VocabEntry, std::less<>>& entries() const
      noexcept {
    return entries_;
  }

 private:
  VocabKind kind_ = VocabKind::unit;
  std::map<std::string, VocabEntry, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> by_iri_;
};

// Manifest form: one "name<TAB>iri<TAB>label" line per entry, sorted by
// name, LF line endings, trailing newline; an empty catalog is the empty
// string. Byte-identical across runs and platforms.
std::string catalog_manifest(const Catalog& catalog);

// Strict inverse of catalog_manifest: enforces field count, name grammar and
// uniform kind prefix, IRI validity, sortedness, uniqueness, and the final
// newline. Line numbers in errors are 1-based.
Catalog load_catalog(std::string_view manifest_text);

}  // namespace harmon
