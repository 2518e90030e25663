#include "harmon/codegen.hpp"

#include <algorithm>
#include <cstdint>

#include "harmon/serialize.hpp"
#include "harmon/vocab.hpp"

namespace harmon {

namespace {

// Replacement for one code point, or nullptr when the code point is dropped.
// ASCII is handled by the caller; '%' is the one ASCII character with a
// spelled-out replacement.
const char* fold_codepoint(std::uint32_t cp) {
  switch (cp) {
    case 0x25:    return "percent";   // %
    case 0xB0:    return "deg";       // degree sign
    case 0xB5:    return "micro";     // micro sign
    case 0x3BC:   return "micro";     // greek small mu
    case 0x3A9:   return "ohm";       // greek capital omega
    case 0x3C9:   return "ohm";       // greek small omega
    case 0x2126:  return "ohm";       // ohm sign
    case 0x2030:  return "permille";  // per mille sign
    default:      break;
  }
  // Latin-1 supplement letters.
  if (cp >= 0xC0 && cp <= 0xFF) {
    static const char* table[] = {
        "a", "a", "a", "a", "a", "a", "ae", "c",   // C0..C7
        "e", "e", "e", "e", "i", "i", "i",  "i",   // C8..CF
        "d", "n", "o", "o", "o", "o", "o",  nullptr,  // D0..D7 (D7 = x)
        "o", "u", "u", "u", "u", "y", "th", "ss",  // D8..DF
        "a", "a", "a", "a", "a", "a", "ae", "c",   // E0..E7
        "e", "e", "e", "e", "i", "i", "i",  "i",   // E8..EF
        "d", "n", "o", "o", "o", "o", "o",  nullptr,  // F0..F7 (F7 = division)
        "o", "u", "u", "u", "u", "y", "th", "y"};  // F8..FF
    return table[cp - 0xC0];
  }
  // Latin Extended-A.
  if (cp >= 0x100 && cp <= 0x17F) {
    struct Range {
      std::uint32_t first, last;
      const char* base;
    };
    static const Range ranges[] = {
        {0x100, 0x105, "a"}, {0x106, 0x10D, "c"},  {0x10E, 0x111, "d"},
        {0x112, 0x11B, "e"}, {0x11C, 0x123, "g"},  {0x124, 0x127, "h"},
        {0x128, 0x131, "i"}, {0x132, 0x133, "ij"}, {0x134, 0x135, "j"},
        {0x136, 0x138, "k"}, {0x139, 0x142, "l"},  {0x143, 0x149, "n"},
        {0x14A, 0x14B, "n"}, {0x14C, 0x151, "o"},  {0x152, 0x153, "oe"},
        {0x154, 0x159, "r"}, {0x15A, 0x161, "s"},  {0x162, 0x167, "t"},
        {0x168, 0x173, "u"}, {0x174, 0x175, "w"},  {0x176, 0x178, "y"},
        {0x179, 0x17E, "z"}, {0x17F, 0x17F, "s"}};
    for (const Range& r : ranges) {
      if (cp >= r.first && cp <= r.last) return r.base;
    }
  }
  return nullptr;
}

// Decodes one UTF-8 sequence; malformed bytes decode as no code point and
// are dropped by the slugger.
std::uint32_t decode_utf8(std::string_view text, std::size_t& pos,
                          bool& valid) {
  unsigned char c = static_cast<unsigned char>(text[pos]);
  std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                    : (c >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || pos + len > text.size()) {
    ++pos;
    valid = false;
    return 0;
  }
  std::uint32_t cp = len == 1 ? c : c & (0x7F >> len);
  for (std::size_t i = 1; i < len; ++i) {
    unsigned char cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) {
      ++pos;
      valid = false;
      return 0;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  pos += len;
  valid = true;
  return cp;
}

std::string slug(std::string_view source) {
  // Fold to ASCII first.
  std::string folded;
  folded.reserve(source.size());
  std::size_t pos = 0;
  while (pos < source.size()) {
    bool valid = false;
    std::uint32_t cp = decode_utf8(source, pos, valid);
    if (!valid) continue;
    if (const char* repl = fold_codepoint(cp)) {
      folded += repl;
    } else if (cp < 0x80) {
      folded += static_cast<char>(cp);
    }
    // Any other non-ASCII code point is dropped.
  }
  // Lowercase, then squash every non-alphanumeric run into one '_'.
  std::string out;
  bool pending_sep = false;
  for (unsigned char c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      if (pending_sep && !out.empty()) out += '_';
      pending_sep = false;
      out += static_cast<char>(c);
    } else {
      pending_sep = true;
    }
  }
  return out;
}

}  // namespace

std::string mangle_accessor_name(VocabKind kind, std::string_view label,
                                 std::string_view local) {
  std::string_view source = label.empty() ? local : label;
  std::string s = slug(source);
  if (s.empty()) throw UnmanglableName(std::string(source));
  return "get_qudt_" + std::string(to_string(kind)) + "_" + s;
}

std::string render_template(std::string_view template_text,
                            const TemplateContext& context) {
  std::string out;
  out.reserve(template_text.size());
  std::size_t pos = 0;
  for (;;) {
    auto open = template_text.find("{{", pos);
    if (open == std::string_view::npos) {
      out += template_text.substr(pos);
      return out;
    }
    out += template_text.substr(pos, open - pos);
    auto close = template_text.find("}}", open + 2);
    if (close == std::string_view::npos) {
      throw Error("unterminated placeholder at offset " +
                  std::to_string(open));
    }
    std::string_view path = template_text.substr(open + 2, close - open - 2);
    while (!path.empty() && (path.front() == ' ' || path.front() == '\t')) {
      path.remove_prefix(1);
    }
    while (!path.empty() && (path.back() == ' ' || path.back() == '\t')) {
      path.remove_suffix(1);
    }
    auto it = context.values.find(path);
    if (it == context.values.end()) {
      throw UnknownPlaceholder(std::string(path), open);
    }
    out += it->second;
    pos = close + 2;
  }
}

namespace {

std::string local_name_of(const std::string& iri) {
  auto cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

struct LabelChoice {
  std::string label;
  bool has_english = false;
  bool has_any = false;

  // English-tagged labels win; within a band the lexically smallest sticks.
  void offer(const std::string& lexical,
             const std::optional<std::string>& lang) {
    bool english = false;
    if (lang) {
      std::string_view tag = *lang;
      auto primary = tag.substr(0, tag.find('-'));
      english = primary.size() == 2 &&
                (primary[0] == 'e' || primary[0] == 'E') &&
                (primary[1] == 'n' || primary[1] == 'N');
    }
    if (!has_any || (english && !has_english) ||
        (english == has_english && lexical < label)) {
      label = lexical;
      has_english = english;
      has_any = true;
    }
  }
};

// Shared tail of both extraction paths: resolve labels, skip unusable
// entries with a warning, sort by mangled name.
ExtractedVocab assemble_entries(
    const std::vector<std::pair<Iri, LabelChoice>>& subjects, VocabKind kind,
    std::vector<std::string> warnings) {
  struct Keyed {
    std::string key;
    VocabEntry entry;
  };
  std::vector<Keyed> keyed;
  for (const auto& [iri, choice] : subjects) {
    if (!choice.has_any) {
      warnings.push_back("skipped " + iri.value() + ": no usable label");
      continue;
    }
    std::string local = local_name_of(iri.value());
    if (local.empty()) {
      warnings.push_back("skipped " + iri.value() + ": empty local name");
      continue;
    }
    std::string name;
    try {
      name = mangle_accessor_name(kind, choice.label, local);
    } catch (const UnmanglableName& e) {
      warnings.push_back("skipped " + iri.value() + ": " + e.what());
      continue;
    }
    keyed.push_back({std::move(name), VocabEntry{std::move(local),
                                                 choice.label, iri}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.entry.local != b.entry.local) return a.entry.local < b.entry.local;
    return a.entry.iri < b.entry.iri;
  });
  ExtractedVocab out;
  out.warnings = std::move(warnings);
  out.entries.reserve(keyed.size());
  for (Keyed& k : keyed) out.entries.push_back(std::move(k.entry));
  return out;
}

const Iri& class_of(VocabKind kind) {
  switch (kind) {
    case VocabKind::quantity_kind:
      return vocab::qudt_QuantityKind();
    case VocabKind::observable_property:
      return vocab::sosa_ObservableProperty();
    case VocabKind::unit:
    default:
      return vocab::qudt_Unit();
  }
}

}  // namespace

ExtractedVocab extract_vocab_entries(const Graph& graph, VocabKind kind) {
  std::vector<std::string> warnings;
  std::vector<std::pair<Iri, LabelChoice>> subjects;
  for (const Triple& t : graph.match(std::nullopt, Term(vocab::rdf_type()),
                                     Term(class_of(kind)))) {
    if (!is_iri(t.subject())) {
      warnings.push_back("skipped blank node subject " +
                         to_ntriples(t.subject()));
      continue;
    }
    const Iri& subject = as_iri(t.subject());
    LabelChoice choice;
    for (const Triple& label : graph.match(Term(subject),
                                           Term(vocab::rdfs_label()),
                                           std::nullopt)) {
      if (!is_literal(label.object())) continue;
      const Literal& lit = as_literal(label.object());
      choice.offer(lit.lexical(), lit.lang());
    }
    subjects.emplace_back(subject, std::move(choice));
  }
  return assemble_entries(subjects, kind, std::move(warnings));
}

ExtractedVocab extract_vocab_entries(const ResultSet& results,
                                     VocabKind kind) {
  std::string subject_var(to_string(kind));
  std::vector<std::string> warnings;
  auto has_var = [&](std::string_view name) {
    return std::find(results.vars.begin(), results.vars.end(), name) !=
           results.vars.end();
  };
  if (!has_var(subject_var)) {
    warnings.push_back("missing variable \"" + subject_var +
                       "\": no entries extracted");
    return ExtractedVocab{{}, std::move(warnings)};
  }
  if (!has_var("label")) {
    warnings.push_back("missing variable \"label\": no entries extracted");
    return ExtractedVocab{{}, std::move(warnings)};
  }

  std::vector<std::pair<Iri, LabelChoice>> subjects;
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < results.rows.size(); ++i) {
    const BindingRow& row = results.rows[i];
    const Term* subject_term = row.find(subject_var);
    if (subject_term == nullptr) {
      warnings.push_back("row " + std::to_string(i + 1) + ": no " +
                         subject_var + " binding, skipped");
      continue;
    }
    std::optional<Iri> subject;
    if (is_iri(*subject_term)) {
      subject = as_iri(*subject_term);
    } else if (is_literal(*subject_term)) {
      // CSV results carry IRIs as plain literals.
      try {
        subject = Iri(as_literal(*subject_term).lexical());
      } catch (const InvalidIri&) {
      }
    }
    if (!subject) {
      warnings.push_back("row " + std::to_string(i + 1) + ": " + subject_var +
                         " is not an IRI, skipped");
      continue;
    }
    auto [it, inserted] =
        index_of.emplace(subject->value(), subjects.size());
    if (inserted) subjects.emplace_back(*subject, LabelChoice{});
    LabelChoice& choice = subjects[it->second].second;

    const Term* label_term = row.find("label");
    if (label_term != nullptr && is_literal(*label_term)) {
      const Literal& lit = as_literal(*label_term);
      choice.offer(lit.lexical(), lit.lang());
    }
  }
  return assemble_entries(subjects, kind, std::move(warnings));
}

GeneratedCatalog generate_catalog(std::vector<VocabEntry> entries,
                                  std::string_view template_text,
                                  VocabKind kind) {
  struct Named {
    std::string base;
    VocabEntry entry;
  };
  std::vector<Named> named;
  named.reserve(entries.size());
  for (VocabEntry& e : entries) {
    std::string base = mangle_accessor_name(kind, e.label, e.local);
    named.push_back({std::move(base), std::move(e)});
  }
  std::sort(named.begin(), named.end(), [](const Named& a, const Named& b) {
    if (a.base != b.base) return a.base < b.base;
    if (a.entry.local != b.entry.local) return a.entry.local < b.entry.local;
    return a.entry.iri < b.entry.iri;
  });

  GeneratedCatalog out;
  out.catalog = Catalog(kind);
  for (Named& n : named) {
    std::string name = n.base;
    for (std::size_t suffix = 2; out.catalog.find(name) != nullptr;
         ++suffix) {
      name = n.base + "_" + std::to_string(suffix);
    }
    out.catalog.add(std::move(name), std::move(n.entry));
  }

  std::string ns;
  switch (kind) {
    case VocabKind::unit:
      ns = "QUDT_UNIT";
      break;
    case VocabKind::quantity_kind:
      ns = "QUDT_QUANTITYKIND";
      break;
    case VocabKind::observable_property:
      ns = "OBSERVABLE_PROPERTY";
      break;
  }
  std::vector<std::string> blocks;
  blocks.reserve(out.catalog.size());
  for (const auto& [name, entry] : out.catalog.entries()) {
    TemplateContext ctx;
    ctx.values.emplace("func.name", name);
    ctx.values.emplace("func.return_type", "IRI");
    ctx.values.emplace("func.namespace", ns);
    ctx.values.emplace("func.constant", entry.local);
    ctx.values.emplace("func.label", entry.label);
    ctx.values.emplace("func.kind", std::string(to_string(kind)));
    ctx.values.emplace("func.iri", entry.iri.value());
    std::string block = render_template(template_text, ctx);
    while (!block.empty() && (block.back() == '\n' || block.back() == '\r')) {
      block.pop_back();
    }
    blocks.push_back(std::move(block));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out.source += "\n";
    out.source += blocks[i];
    out.source += "\n";
  }
  out.manifest = catalog_manifest(out.catalog);
  return out;
}

}  // namespace harmon
