#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmon/term.hpp"

namespace harmon {

// One solution row: variable name -> bound term. Unbound variables are
// simply absent.
struct BindingRow {
  std::map<std::string, Term, std::less<>> bindings;

  const Term* find(std::string_view var) const {
    auto it = bindings.find(var);
    return it == bindings.end() ? nullptr : &it->second;
  }
};

struct ResultSet {
  std::vector<std::string> vars;  // declaration order preserved
  std::vector<BindingRow> rows;
};

// Reads the W3C SPARQL 1.1 Query Results JSON format. Every structural
// problem is reported as MalformedResults naming the offending path.
ResultSet parse_sparql_results_json(std::string_view text);

// Reads SPARQL results CSV (RFC 4180): header row names the variables, every
// cell becomes a plain literal, an empty cell is an absent binding, ragged
// rows are malformed.
ResultSet parse_sparql_results_csv(std::string_view text);

}  // namespace harmon
