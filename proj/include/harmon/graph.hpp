#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "harmon/triple.hpp"

namespace harmon {

// A set of triples: insertion order is irrelevant and duplicates collapse.
// Graphs are ordinary values; the merging mutators exist so that building a
// large graph out of many small ones stays linear.
class Graph {
 public:
  using Storage = std::unordered_set<Triple, TripleHash>;
  using const_iterator = Storage::const_iterator;

  Graph() = default;

  // Returns true when the triple was not present yet.
  bool insert(Triple t);

  Graph& operator+=(const Graph& other);
  Graph& operator+=(Graph&& other);

  friend Graph operator+(Graph a, const Graph& b) {
    a += b;
    return a;
  }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  bool has_blank_nodes() const noexcept { return blank_triples_ != 0; }

  // Triples matching the pattern; an empty optional matches any term. The
  // result is sorted by the triples' canonical N-Triples lines.
  std::vector<Triple> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;

  std::vector<Triple> triples_sorted() const;

  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

 private:
  Storage triples_;
  std::size_t blank_triples_ = 0;
};

// Set equality for graphs without blank nodes. Graphs containing blank nodes
// would need isomorphism checking, which this library does not do, so they
// are rejected outright.
bool ground_equal(const Graph& a, const Graph& b);

}  // namespace harmon
