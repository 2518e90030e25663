#include "harmon/catalog.hpp"

#include <algorithm>

namespace harmon {

std::string_view to_string(VocabKind kind) {
  switch (kind) {
    case VocabKind::unit:
      return "unit";
    case VocabKind::quantity_kind:
      return "quantity_kind";
    case VocabKind::observable_property:
      return "observable_property";
  }
  return "unit";
}

std::optional<VocabKind> vocab_kind_from_string(std::string_view text) {
  if (text == "unit") return VocabKind::unit;
  if (text == "quantity_kind") return VocabKind::quantity_kind;
  if (text == "observable_property") return VocabKind::observable_property;
  return std::nullopt;
}

void Catalog::add(std::string name, VocabEntry entry) {
  std::string iri = entry.iri.value();
  auto [it, inserted] = entries_.emplace(std::move(name), std::move(entry));
  if (!inserted) {
    throw Error("duplicate catalog entry \"" + it->first + "\"");
  }
  by_iri_.emplace(std::move(iri), it->first);
}

const VocabEntry* Catalog::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* Catalog::accessor_for_iri(const Iri& iri) const {
  auto it = by_iri_.find(iri.value());
  return it == by_iri_.end() ? nullptr : &it->second;
}

std::string catalog_manifest(const Catalog& catalog) {
  std::string out;
  for (const auto& [name, entry] : catalog.entries()) {
    out += name;
    out += '\t';
    out += entry.iri.value();
    out += '\t';
    out += entry.label;
    out += '\n';
  }
  return out;
}

namespace {

bool valid_accessor_name(std::string_view name) {
  if (name.empty()) return false;
  unsigned char first = static_cast<unsigned char>(name[0]);
  if (!((first >= 'a' && first <= 'z') || first == '_')) return false;
  for (unsigned char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string local_name_of(const std::string& iri) {
  auto cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

}  // namespace

Catalog load_catalog(std::string_view manifest_text) {
  if (manifest_text.empty()) return Catalog(VocabKind::unit);
  if (manifest_text.back() != '\n') {
    throw MalformedManifest(1 + std::count(manifest_text.begin(),
                                           manifest_text.end(), '\n'),
                            "missing trailing newline");
  }

  std::optional<VocabKind> kind;
  Catalog catalog;
  std::string previous_name;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < manifest_text.size()) {
    ++line_number;
    auto eol = manifest_text.find('\n', pos);
    std::string_view line = manifest_text.substr(pos, eol - pos);
    pos = eol + 1;

    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string_view::npos
                    ? std::string_view::npos
                    : line.find('\t', tab1 + 1);
    if (tab1 == std::string_view::npos || tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw MalformedManifest(line_number,
                              "expected name<TAB>iri<TAB>label");
    }
    std::string name(line.substr(0, tab1));
    std::string iri_text(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string label(line.substr(tab2 + 1));

    if (!valid_accessor_name(name)) {
      throw MalformedManifest(line_number,
                              "invalid accessor name \"" + name + "\"");
    }
    std::optional<VocabKind> line_kind;
    for (VocabKind k : {VocabKind::quantity_kind,
                        VocabKind::observable_property, VocabKind::unit}) {
      std::string prefix = "get_qudt_" + std::string(to_string(k)) + "_";
      if (name.size() > prefix.size() &&
          name.compare(0, prefix.size(), prefix) == 0) {
        line_kind = k;
        break;
      }
    }
    if (!line_kind) {
      throw MalformedManifest(
          line_number, "accessor name \"" + name +
                           "\" does not carry a known kind prefix");
    }
    if (!kind) {
      kind = line_kind;
      catalog = Catalog(*kind);
    } else if (*line_kind != *kind) {
      throw MalformedManifest(line_number, "mixed kinds in one manifest");
    }
    if (!previous_name.empty() && !(previous_name < name)) {
      throw MalformedManifest(
          line_number, previous_name == name
                           ? "duplicate name \"" + name + "\""
                           : "names are not sorted");
    }
    previous_name = name;

    try {
      Iri iri(iri_text);
      catalog.add(std::move(name),
                  VocabEntry{local_name_of(iri.value()), std::move(label),
                             std::move(iri)});
    } catch (const InvalidIri& e) {
      throw MalformedManifest(line_number, e.what());
    }
  }
  return catalog;
}

}  // namespace harmon
