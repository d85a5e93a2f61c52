#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace astt {

// Tree construction / validation.
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ForestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DanglingChildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// JSON document does not match the AST schema; `path` points at the
/// offending element, e.g. "$.children[2].kind".
struct SchemaError : std::runtime_error {
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path(path) {}
  std::string path;
};

struct LexError : std::runtime_error {
  LexError(std::size_t offset, const std::string& what)
      : std::runtime_error("lex error at offset " + std::to_string(offset) +
                           ": " + what),
        offset(offset) {}
  std::size_t offset;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& expected)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset(offset),
        expected(expected) {}
  std::size_t offset;
  std::string expected;
};

/// A linearized sequence references a node outside its source tree.
struct MapMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric kernel.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyRowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GraphConsumedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corpus / metrics.
struct EmptyCorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyHypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace astt
