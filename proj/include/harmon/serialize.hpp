#pragma once

#include <string>
#include <string_view>

#include "harmon/graph.hpp"
#include "harmon/namespace_map.hpp"

namespace harmon {

// Applies the five mandatory N-Triples escapes (\\ \" \n \r \t); every other
// byte passes through untouched, so non-ASCII stays raw UTF-8.
std::string escape_ntriples_literal(std::string_view text);

// N-Triples rendering of a single term / statement (statements carry the
// trailing " ." but no newline).
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);

// Canonical N-Triples document: one line per triple, lines sorted bytewise,
// trailing newline. A pure function of the triple set.
std::string to_ntriples_canonical(const Graph& graph);

// Prefixed Turtle document: @prefix header for every binding the document
// actually uses, subject-grouped blocks with ';' and ',', rdf:type written
// as 'a'. IRIs compact to CURIEs when a bound namespace prefixes them and
// the remainder is a safe local name; everything else stays in <>.
// Deterministic for a given graph and namespace map, and always reparses to
// an equal graph.
std::string to_turtle(const Graph& graph, const NamespaceMap& namespaces);

enum class OutputFormat { ntriples_canonical, turtle };

struct SerializationOptions {
  OutputFormat format = OutputFormat::ntriples_canonical;
  NamespaceMap namespaces;
};

std::string serialize_graph(const Graph& graph,
                            const SerializationOptions& options);

}  // namespace harmon
