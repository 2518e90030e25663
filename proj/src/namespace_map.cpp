#include "harmon/namespace_map.hpp"

namespace harmon {

namespace {

bool valid_prefix(std::string_view prefix) {
  if (prefix.empty()) return true;
  unsigned char first = static_cast<unsigned char>(prefix[0]);
  if (!((first >= 'A' && first <= 'Z') || (first >= 'a' && first <= 'z'))) {
    return false;
  }
  for (unsigned char c : prefix.substr(1)) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

void NamespaceMap::bind(std::string prefix, Iri base) {
  if (!valid_prefix(prefix)) throw InvalidPrefix(prefix);
  bindings_.insert_or_assign(std::move(prefix), std::move(base));
}

const Iri* NamespaceMap::find(std::string_view prefix) const {
  auto it = bindings_.find(prefix);
  return it == bindings_.end() ? nullptr : &it->second;
}

Iri NamespaceMap::expand(std::string_view curie) const {
  auto colon = curie.find(':');
  if (colon == std::string_view::npos ||
      curie.find(':', colon + 1) != std::string_view::npos) {
    throw InvalidCurie(std::string(curie));
  }
  std::string_view prefix = curie.substr(0, colon);
  std::string_view local = curie.substr(colon + 1);
  const Iri* base = find(prefix);
  if (base == nullptr) throw UnboundPrefix(std::string(prefix));
  return Iri(base->value() + std::string(local));
}

}  // namespace harmon
