#include "harmon/sparql_results.hpp"

#include <algorithm>

#include "harmon/csv.hpp"
#include "json.hpp"

namespace harmon {

namespace {

using nlohmann::json;

std::string item_path(const std::string& base, std::size_t index) {
  return base + "[" + std::to_string(index) + "]";
}

Term term_from_binding(const json& node, const std::string& path) {
  if (!node.is_object()) {
    throw MalformedResults(path, "binding must be an object");
  }
  auto type_it = node.find("type");
  if (type_it == node.end() || !type_it->is_string()) {
    throw MalformedResults(path + ".type", "missing or non-string");
  }
  auto value_it = node.find("value");
  if (value_it == node.end() || !value_it->is_string()) {
    throw MalformedResults(path + ".value", "missing or non-string");
  }
  const std::string& type = type_it->get_ref<const std::string&>();
  const std::string& value = value_it->get_ref<const std::string&>();

  if (type == "uri") {
    try {
      return Term(Iri(value));
    } catch (const InvalidIri& e) {
      throw MalformedResults(path + ".value", e.what());
    }
  }
  if (type == "bnode") {
    try {
      return Term(BlankNode(value));
    } catch (const Error& e) {
      throw MalformedResults(path + ".value", e.what());
    }
  }
  if (type == "literal") {
    auto lang_it = node.find("xml:lang");
    auto datatype_it = node.find("datatype");
    if (lang_it != node.end() && datatype_it != node.end()) {
      throw MalformedResults(path,
                             "literal carries both datatype and xml:lang");
    }
    if (lang_it != node.end()) {
      if (!lang_it->is_string()) {
        throw MalformedResults(path + ".xml:lang", "must be a string");
      }
      try {
        return Term(Literal::with_lang(value,
                                       lang_it->get_ref<const std::string&>()));
      } catch (const Error& e) {
        throw MalformedResults(path + ".xml:lang", e.what());
      }
    }
    if (datatype_it != node.end()) {
      if (!datatype_it->is_string()) {
        throw MalformedResults(path + ".datatype", "must be a string");
      }
      try {
        return Term(
            Literal(value, Iri(datatype_it->get_ref<const std::string&>())));
      } catch (const InvalidIri& e) {
        throw MalformedResults(path + ".datatype", e.what());
      }
    }
    return Term(Literal(value));
  }
  throw MalformedResults(path + ".type",
                         "unknown term type \"" + type + "\"");
}

}  // namespace

ResultSet parse_sparql_results_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedResults("$", e.what());
  }
  if (!doc.is_object()) {
    throw MalformedResults("$", "document must be an object");
  }

  auto head_it = doc.find("head");
  if (head_it == doc.end() || !head_it->is_object()) {
    throw MalformedResults("head", "missing or not an object");
  }
  auto vars_it = head_it->find("vars");
  if (vars_it == head_it->end() || !vars_it->is_array()) {
    throw MalformedResults("head.vars", "missing or not an array");
  }

  ResultSet result;
  for (std::size_t i = 0; i < vars_it->size(); ++i) {
    const json& var = (*vars_it)[i];
    if (!var.is_string()) {
      throw MalformedResults(item_path("head.vars", i), "must be a string");
    }
    const std::string& name = var.get_ref<const std::string&>();
    if (name.empty()) {
      throw MalformedResults(item_path("head.vars", i), "must be non-empty");
    }
    if (std::find(result.vars.begin(), result.vars.end(), name) !=
        result.vars.end()) {
      throw MalformedResults(item_path("head.vars", i),
                             "duplicate variable \"" + name + "\"");
    }
    result.vars.push_back(name);
  }

  auto results_it = doc.find("results");
  if (results_it == doc.end() || !results_it->is_object()) {
    throw MalformedResults("results", "missing or not an object");
  }
  auto bindings_it = results_it->find("bindings");
  if (bindings_it == results_it->end() || !bindings_it->is_array()) {
    throw MalformedResults("results.bindings", "missing or not an array");
  }

  for (std::size_t i = 0; i < bindings_it->size(); ++i) {
    const json& row = (*bindings_it)[i];
    std::string row_path = item_path("results.bindings", i);
    if (!row.is_object()) {
      throw MalformedResults(row_path, "row must be an object");
    }
    BindingRow out;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(result.vars.begin(), result.vars.end(), it.key()) ==
          result.vars.end()) {
        throw MalformedResults(row_path + "." + it.key(),
                               "variable not declared in head.vars");
      }
      out.bindings.emplace(it.key(),
                           term_from_binding(*it, row_path + "." + it.key()));
    }
    result.rows.push_back(std::move(out));
  }
  return result;
}

ResultSet parse_sparql_results_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  try {
    rows = parse_csv_rows(text);
  } catch (const CsvError& e) {
    throw MalformedResults("row " + std::to_string(e.row()), e.what());
  }
  if (rows.empty()) {
    throw MalformedResults("header", "missing header row");
  }

  ResultSet result;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    const std::string& name = rows[0][i];
    if (name.empty()) {
      throw MalformedResults(item_path("header", i), "must be non-empty");
    }
    if (std::find(result.vars.begin(), result.vars.end(), name) !=
        result.vars.end()) {
      throw MalformedResults(item_path("header", i),
                             "duplicate variable \"" + name + "\"");
    }
    result.vars.push_back(name);
  }

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != result.vars.size()) {
      throw MalformedResults(
          "row " + std::to_string(r + 1),
          "expected " + std::to_string(result.vars.size()) + " cells, found " +
              std::to_string(cells.size()));
    }
    BindingRow out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) continue;  // absent binding
      out.bindings.emplace(result.vars[c], Term(Literal(cells[c])));
    }
    result.rows.push_back(std::move(out));
  }
  return result;
}

}  // namespace harmon
