#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harmon {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidIri : public Error {
 public:
  InvalidIri(std::string iri, std::size_t position, std::string reason)
      : Error("invalid IRI \"" + iri + "\" at offset " +
              std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class ConflictingQualifiers : public Error {
 public:
  ConflictingQualifiers()
      : Error("a literal cannot carry both a datatype and a language tag") {}
};

class InvalidLanguageTag : public Error {
 public:
  explicit InvalidLanguageTag(const std::string& tag)
      : Error("invalid language tag \"" + tag + "\"") {}
};

class InvalidBlankNodeLabel : public Error {
 public:
  explicit InvalidBlankNodeLabel(const std::string& label)
      : Error("invalid blank node label \"" + label +
              "\": expected [A-Za-z0-9_]+") {}
};

class InvalidTriple : public Error {
 public:
  explicit InvalidTriple(const std::string& what) : Error(what) {}
};

class InvalidPrefix : public Error {
 public:
  explicit InvalidPrefix(const std::string& prefix)
      : Error("invalid namespace prefix \"" + prefix +
              "\": expected [A-Za-z][A-Za-z0-9_-]* or the empty prefix") {}
};

class InvalidCurie : public Error {
 public:
  explicit InvalidCurie(const std::string& curie)
      : Error("invalid CURIE \"" + curie +
              "\": expected exactly one ':' separating prefix and local part") {
  }
};

class UnboundPrefix : public Error {
 public:
  explicit UnboundPrefix(std::string prefix)
      : Error("unbound namespace prefix \"" + prefix + "\""),
        prefix_(std::move(prefix)) {}

  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

class HasBlankNodes : public Error {
 public:
  HasBlankNodes()
      : Error("ground comparison is undefined on graphs with blank nodes") {}
};

class BadIdentifier : public Error {
 public:
  explicit BadIdentifier(std::string id)
      : Error("bad identifier \"" + id + "\": expected [A-Za-z0-9_.-]+"),
        id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class CoordinateOutOfRange : public Error {
 public:
  CoordinateOutOfRange(std::string axis, double value)
      : Error(axis + " " + std::to_string(value) + " is out of range"),
        axis_(std::move(axis)) {}

  const std::string& axis() const noexcept { return axis_; }

 private:
  std::string axis_;
};

class BadTimestamp : public Error {
 public:
  explicit BadTimestamp(const std::string& what) : Error(what) {}
};

class NonNumericValue : public Error {
 public:
  explicit NonNumericValue(const std::string& what) : Error(what) {}
};

class UnknownAccessor : public Error {
 public:
  UnknownAccessor(std::string name, std::string suggestion)
      : Error("unknown accessor \"" + name + "\"" +
              (suggestion.empty() ? std::string()
                                  : " (did you mean \"" + suggestion + "\"?)")),
        name_(std::move(name)),
        suggestion_(std::move(suggestion)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::string name_;
  std::string suggestion_;
};

class UnmanglableName : public Error {
 public:
  explicit UnmanglableName(const std::string& source)
      : Error("cannot derive an accessor name from \"" + source +
              "\": slug is empty after folding") {}
};

class UnknownPlaceholder : public Error {
 public:
  UnknownPlaceholder(std::string path, std::size_t offset)
      : Error("unknown placeholder \"" + path + "\" at offset " +
              std::to_string(offset)),
        path_(std::move(path)),
        offset_(offset) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string path_;
  std::size_t offset_;
};

class MalformedResults : public Error {
 public:
  MalformedResults(std::string path, std::string reason)
      : Error("malformed results at " + path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

class MalformedManifest : public Error {
 public:
  MalformedManifest(std::size_t line, const std::string& reason)
      : Error("malformed manifest at line " + std::to_string(line) + ": " +
              reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CsvError : public Error {
 public:
  CsvError(std::size_t row, const std::string& reason)
      : Error("CSV error in row " + std::to_string(row) + ": " + reason),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

class WriteError : public Error {
 public:
  explicit WriteError(const std::string& path)
      : Error("cannot write file: " + path) {}
};

}  // namespace harmon
