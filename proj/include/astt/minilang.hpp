#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "astt/ast.hpp"

namespace astt::lang {

enum class TokKind { Keyword, Ident, IntLit, BoolLit, Punct, Op };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
};

/// Splits source into tokens, skipping whitespace and // line comments.
/// Throws LexError on an illegal byte.
std::vector<Token> tokenize(const std::string& source);

/// Recursive-descent parser for the method grammar:
///   method := type IDENT "(" [param {"," param}] ")" block
///   stmt   := decl | assign | if | while | return | exprstmt
/// Expressions use precedence climbing, left-associative:
///   || ; && ; == != ; < <= > >= ; + - ; * / % ; unary ! -
/// Throws ParseError with the failing offset and expectation.
ast::AstTree parse_method(const std::vector<Token>& tokens);

/// tokenize + parse_method in one step.
ast::AstTree parse_source(const std::string& source);

enum class SizeClass { Small, Medium };

struct Example {
  std::string source;
  std::string summary;  // lowercase English, 4..16 tokens
  int template_id = 0;  // which summary template produced it
};

/// Deterministic synthetic (code, summary) pair. The summary is templated
/// from the generated structure so the mapping is learnable at desk scale.
Example generate_example(std::uint64_t seed, SizeClass size);

}  // namespace astt::lang
