#include "harmon/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "harmon/vocab.hpp"

namespace harmon {

std::string escape_ntriples_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '"':
        out += "\\\"";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string to_ntriples(const Term& term) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Iri>) {
          return "<" + node.value() + ">";
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          return "_:" + node.label();
        } else {
          std::string out = "\"" + escape_ntriples_literal(node.lexical()) +
                            "\"";
          if (node.lang()) {
            out += "@" + *node.lang();
          } else if (node.datatype()) {
            out += "^^<" + node.datatype()->value() + ">";
          }
          return out;
        }
      },
      term);
}

std::string to_ntriples(const Triple& triple) {
  return to_ntriples(triple.subject()) + " " + to_ntriples(triple.predicate()) +
         " " + to_ntriples(triple.object()) + " .";
}

std::string to_ntriples_canonical(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const Triple& t : graph) lines.push_back(to_ntriples(t));
  std::sort(lines.begin(), lines.end());
  std::size_t total = 0;
  for (const std::string& line : lines) total += line.size() + 1;
  std::string out;
  out.reserve(total);
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

// Local names this writer is willing to put after a prefix. Deliberately a
// strict subset of what Turtle allows, so that anything emitted reparses to
// the same term: alphanumerics and underscores, with '.' and '-' permitted
// in the interior and '-' at the end.
bool safe_local_name(std::string_view s) {
  if (s.empty()) return true;  // "ex:" alone is a valid prefixed name
  unsigned char first = static_cast<unsigned char>(s[0]);
  bool ok_first = (first >= 'A' && first <= 'Z') ||
                  (first >= 'a' && first <= 'z') ||
                  (first >= '0' && first <= '9') || first == '_';
  if (!ok_first) return false;
  for (unsigned char c : s.substr(1)) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return s.back() != '.';
}

class TurtleWriter {
 public:
  TurtleWriter(const Graph& graph, const NamespaceMap& namespaces)
      : graph_(graph), namespaces_(namespaces) {}

  std::string run() {
    // Group triples by subject, keyed by the subject's N-Triples form so
    // block order is canonical.
    std::map<std::string, std::vector<const Triple*>> by_subject;
    for (const Triple& t : graph_) {
      by_subject[to_ntriples(t.subject())].push_back(&t);
    }

    std::vector<std::string> blocks;
    blocks.reserve(by_subject.size());
    for (const auto& [subject_key, triples] : by_subject) {
      blocks.push_back(render_block(*triples.front(), triples));
    }

    std::string out;
    for (const auto& [prefix, base] : namespaces_.bindings()) {
      if (used_prefixes_.count(prefix) == 0) continue;
      out += "@prefix " + prefix + ": <" + base.value() + "> .\n";
    }
    if (!out.empty() && !blocks.empty()) out += "\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i > 0) out += "\n";
      out += blocks[i];
    }
    return out;
  }

 private:
  std::string render_block(const Triple& first,
                           const std::vector<const Triple*>& triples) {
    // rdf:type comes first as 'a'; every other predicate group follows in
    // N-Triples order, objects within a group likewise.
    std::map<std::string, std::pair<const Term*, std::vector<std::string>>>
        groups;
    std::vector<std::string> type_objects;
    for (const Triple* t : triples) {
      if (is_iri(t->predicate()) &&
          as_iri(t->predicate()) == vocab::rdf_type()) {
        type_objects.push_back(render_term(t->object()));
      } else {
        auto& group = groups[to_ntriples(t->predicate())];
        group.first = &t->predicate();
        group.second.push_back(render_term(t->object()));
      }
    }

    std::vector<std::string> entries;
    if (!type_objects.empty()) {
      std::sort(type_objects.begin(), type_objects.end());
      entries.push_back("a " + join(type_objects));
    }
    for (auto& [key, group] : groups) {
      std::sort(group.second.begin(), group.second.end());
      entries.push_back(render_term(*group.first) + " " + join(group.second));
    }

    std::string subject = render_subject(first.subject());
    std::string block = subject + " " + entries.front();
    for (std::size_t i = 1; i < entries.size(); ++i) {
      block += ";\n  " + entries[i];
    }
    block += " .\n";
    return block;
  }

  static std::string join(const std::vector<std::string>& rendered) {
    std::string out = rendered.front();
    for (std::size_t i = 1; i < rendered.size(); ++i) out += ", " + rendered[i];
    return out;
  }

  std::string render_subject(const Term& term) {
    if (is_blank(term)) return "_:" + as_blank(term).label();
    return render_iri(as_iri(term));
  }

  std::string render_term(const Term& term) {
    return std::visit(
        [this](const auto& node) -> std::string {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Iri>) {
            return render_iri(node);
          } else if constexpr (std::is_same_v<T, BlankNode>) {
            return "_:" + node.label();
          } else {
            std::string out =
                "\"" + escape_ntriples_literal(node.lexical()) + "\"";
            if (node.lang()) {
              out += "@" + *node.lang();
            } else if (node.datatype()) {
              out += "^^" + render_iri(*node.datatype());
            }
            return out;
          }
        },
        term);
  }

  // Longest matching base wins; ties go to the lexicographically smallest
  // prefix. Falls back to <...> whenever the remainder would not survive a
  // round trip as a local name.
  std::string render_iri(const Iri& iri) {
    const std::string& value = iri.value();
    const std::string* best_prefix = nullptr;
    std::size_t best_len = 0;
    for (const auto& [prefix, base] : namespaces_.bindings()) {
      const std::string& b = base.value();
      if (b.empty() || b.size() > value.size()) continue;
      if (value.compare(0, b.size(), b) != 0) continue;
      if (!safe_local_name(std::string_view(value).substr(b.size()))) continue;
      if (best_prefix == nullptr || b.size() > best_len) {
        best_prefix = &prefix;
        best_len = b.size();
      }
    }
    if (best_prefix == nullptr) return "<" + value + ">";
    used_prefixes_.insert(*best_prefix);
    return *best_prefix + ":" + value.substr(best_len);
  }

  const Graph& graph_;
  const NamespaceMap& namespaces_;
  std::set<std::string> used_prefixes_;
};

}  // namespace

std::string to_turtle(const Graph& graph, const NamespaceMap& namespaces) {
  return TurtleWriter(graph, namespaces).run();
}

std::string serialize_graph(const Graph& graph,
                            const SerializationOptions& options) {
  switch (options.format) {
    case OutputFormat::turtle:
      return to_turtle(graph, options.namespaces);
    case OutputFormat::ntriples_canonical:
    default:
      return to_ntriples_canonical(graph);
  }
}

}  // namespace harmon
