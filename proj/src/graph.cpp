#include "harmon/graph.hpp"

#include <algorithm>

#include "harmon/serialize.hpp"

namespace harmon {

namespace {

bool triple_has_blank(const Triple& t) {
  return is_blank(t.subject()) || is_blank(t.object());
}

}  // namespace

bool Graph::insert(Triple t) {
  bool blank = triple_has_blank(t);
  bool added = triples_.insert(std::move(t)).second;
  if (added && blank) ++blank_triples_;
  return added;
}

Graph& Graph::operator+=(const Graph& other) {
  for (const Triple& t : other.triples_) insert(t);
  return *this;
}

Graph& Graph::operator+=(Graph&& other) {
  if (triples_.empty()) {
    *this = std::move(other);
    return *this;
  }
  for (auto it = other.triples_.begin(); it != other.triples_.end();) {
    insert(std::move(other.triples_.extract(it++).value()));
  }
  other.triples_.clear();
  other.blank_triples_ = 0;
  return *this;
}

std::vector<Triple> Graph::match(const std::optional<Term>& subject,
                                 const std::optional<Term>& predicate,
                                 const std::optional<Term>& object) const {
  std::vector<std::pair<std::string, const Triple*>> hits;
  for (const Triple& t : triples_) {
    if (subject && !(t.subject() == *subject)) continue;
    if (predicate && !(t.predicate() == *predicate)) continue;
    if (object && !(t.object() == *object)) continue;
    hits.emplace_back(to_ntriples(t), &t);
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Triple> out;
  out.reserve(hits.size());
  for (const auto& [line, t] : hits) out.push_back(*t);
  return out;
}

std::vector<Triple> Graph::triples_sorted() const {
  return match(std::nullopt, std::nullopt, std::nullopt);
}

bool ground_equal(const Graph& a, const Graph& b) {
  if (a.has_blank_nodes() || b.has_blank_nodes()) throw HasBlankNodes();
  if (a.size() != b.size()) return false;
  for (const Triple& t : a) {
    if (!b.contains(t)) return false;
  }
  return true;
}

}  // namespace harmon
