#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmon/catalog.hpp"
#include "harmon/graph.hpp"
#include "harmon/sparql_results.hpp"

namespace harmon {

// Derives the accessor name "get_qudt_{kind}_{slug}" from a vocabulary
// entry's label (falling back to the local name when the label is empty).
// Slugging lowercases, strips Latin diacritics to ASCII, spells out a fixed
// set of symbols (Ω -> ohm, ° -> deg, µ -> micro, % -> percent,
// ‰ -> permille), drops any other non-ASCII, then squashes every remaining
// non-alphanumeric run into a single '_'. An empty slug is an error.
// Collision suffixes (_2, _3, ...) are applied later, when a catalog is
// assembled.
std::string mangle_accessor_name(VocabKind kind, std::string_view label,
                                 std::string_view local);

// Values for "{{ dotted.path }}" placeholders.
struct TemplateContext {
  std::map<std::string, std::string, std::less<>> values;
};

// Substitution-only rendering: replaces each "{{ path }}" with the context
// value, no conditionals, no loops, no escaping. Unknown paths raise
// UnknownPlaceholder with the byte offset of the opening braces.
std::string render_template(std::string_view template_text,
                            const TemplateContext& context);

struct ExtractedVocab {
  std::vector<VocabEntry> entries;  // sorted by mangled accessor name
  std::vector<std::string> warnings;
};

// Pulls vocabulary entries out of a graph: subjects typed as the kind's
// class, labelled via rdfs:label. Multiple labels prefer an English-tagged
// one, then the lexically smallest. Entries without a usable label or local
// name are skipped and reported, never fatal.
ExtractedVocab extract_vocab_entries(const Graph& graph, VocabKind kind);

// Same contract over a SPARQL result set; the subject variable is named
// after the kind ("unit", "quantity_kind", "observable_property"), the
// label variable is "label". CSV-shaped results may carry the subject IRI
// as a plain literal.
ExtractedVocab extract_vocab_entries(const ResultSet& results, VocabKind kind);

struct GeneratedCatalog {
  Catalog catalog;
  std::string manifest;
  std::string source;
};

// Builds the catalog (unique accessor names, collision-suffixed in order),
// its manifest text, and the rendered source: one template expansion per
// entry in name order, blank-line separated. Byte-identical for the same
// entries regardless of input order.
GeneratedCatalog generate_catalog(std::vector<VocabEntry> entries,
                                  std::string_view template_text,
                                  VocabKind kind);

}  // namespace harmon
