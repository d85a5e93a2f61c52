#include "astt/minilang.hpp"

#include <array>
#include <cctype>
#include <set>

#include "astt/errors.hpp"

namespace astt::lang {

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"int",  "bool",   "void", "if",
                                           "else", "while", "return"};
  return kw;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(const std::string& source) {
  // Multi-char operators first, so "<=" wins over "<" (maximal munch).
  static const std::array<const char*, 6> two_char = {"||", "&&", "==",
                                                      "!=", "<=", ">="};
  static const std::string one_char_ops = "<>+-*/%!=";
  static const std::string puncts = "(){},;";

  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') ++i;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && is_ident_char(source[i])) ++i;
      std::string text = source.substr(start, i - start);
      TokKind kind = TokKind::Ident;
      if (text == "true" || text == "false") {
        kind = TokKind::BoolLit;
      } else if (keywords().count(text)) {
        kind = TokKind::Keyword;
      }
      out.push_back({kind, std::move(text), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      out.push_back({TokKind::IntLit, source.substr(start, i - start), start});
      continue;
    }
    if (i + 1 < n) {
      std::string pair = source.substr(i, 2);
      bool matched = false;
      for (const char* op : two_char) {
        if (pair == op) {
          out.push_back({TokKind::Op, pair, i});
          i += 2;
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    if (one_char_ops.find(c) != std::string::npos) {
      out.push_back({TokKind::Op, std::string(1, c), i});
      ++i;
      continue;
    }
    if (puncts.find(c) != std::string::npos) {
      out.push_back({TokKind::Punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw LexError(i, "illegal character");
  }
  return out;
}

namespace {

// Binary operator precedence levels, low to high. All left-associative.
int binary_level(const std::string& op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
  if (op == "+" || op == "-") return 5;
  if (op == "*" || op == "/" || op == "%") return 6;
  return 0;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  int parse_method() {
    int ret_type = type();
    const Token& name = expect(TokKind::Ident, "method name");
    int method = add("MethodDeclaration", name.text);
    child(method, ret_type);
    expect_punct("(");
    if (!peek_punct(")")) {
      child(method, param());
      while (peek_punct(",")) {
        advance();
        child(method, param());
      }
    }
    expect_punct(")");
    child(method, block());
    if (pos_ < toks_.size()) {
      throw ParseError(toks_[pos_].offset, "end of input");
    }
    return method;
  }

  std::vector<ast::RawNode> take_nodes() { return std::move(nodes_); }

 private:
  int add(const std::string& kind, std::optional<std::string> value = {}) {
    nodes_.push_back({kind, std::move(value), {}});
    return static_cast<int>(nodes_.size()) - 1;
  }
  void child(int parent, int c) {
    nodes_[static_cast<std::size_t>(parent)].children.push_back(c);
  }

  bool done() const { return pos_ >= toks_.size(); }
  const Token& cur() const {
    if (done()) throw ParseError(end_offset(), "more input");
    return toks_[pos_];
  }
  std::size_t end_offset() const {
    return toks_.empty() ? 0 : toks_.back().offset + toks_.back().text.size();
  }
  void advance() { ++pos_; }

  bool peek_punct(const std::string& p) const {
    return !done() && toks_[pos_].kind == TokKind::Punct &&
           toks_[pos_].text == p;
  }
  bool peek_keyword(const std::string& k) const {
    return !done() && toks_[pos_].kind == TokKind::Keyword &&
           toks_[pos_].text == k;
  }
  bool peek_op(const std::string& o) const {
    return !done() && toks_[pos_].kind == TokKind::Op && toks_[pos_].text == o;
  }

  const Token& expect(TokKind kind, const std::string& what) {
    if (done() || toks_[pos_].kind != kind) {
      throw ParseError(done() ? end_offset() : toks_[pos_].offset, what);
    }
    return toks_[pos_++];
  }
  void expect_punct(const std::string& p) {
    if (!peek_punct(p)) {
      throw ParseError(done() ? end_offset() : toks_[pos_].offset,
                       "'" + p + "'");
    }
    advance();
  }

  bool peek_type() const {
    return peek_keyword("int") || peek_keyword("bool") || peek_keyword("void");
  }

  int type() {
    if (!peek_type()) {
      throw ParseError(done() ? end_offset() : toks_[pos_].offset,
                       "type (int, bool or void)");
    }
    int node = add("TypeName", cur().text);
    advance();
    return node;
  }

  int param() {
    int t = type();
    const Token& name = expect(TokKind::Ident, "parameter name");
    int p = add("Parameter");
    child(p, t);
    int id = add("Identifier", name.text);
    child(p, id);
    return p;
  }

  int block() {
    expect_punct("{");
    int b = add("Block");
    while (!peek_punct("}")) {
      if (done()) throw ParseError(end_offset(), "'}'");
      child(b, stmt());
    }
    advance();
    return b;
  }

  int stmt() {
    if (peek_type()) return decl();
    if (peek_keyword("if")) return if_stmt();
    if (peek_keyword("while")) return while_stmt();
    if (peek_keyword("return")) return return_stmt();
    if (!done() && cur().kind == TokKind::Ident && pos_ + 1 < toks_.size() &&
        toks_[pos_ + 1].kind == TokKind::Op && toks_[pos_ + 1].text == "=") {
      return assign();
    }
    int e = expr(1);
    expect_punct(";");
    int s = add("ExprStmt");
    child(s, e);
    return s;
  }

  int decl() {
    int t = type();
    const Token& name = expect(TokKind::Ident, "variable name");
    int d = add("VarDecl");
    child(d, t);
    int id = add("Identifier", name.text);
    child(d, id);
    if (peek_op("=")) {
      advance();
      child(d, expr(1));
    }
    expect_punct(";");
    return d;
  }

  int assign() {
    const Token& name = expect(TokKind::Ident, "assignment target");
    int a = add("Assign");
    int id = add("Identifier", name.text);
    child(a, id);
    if (!peek_op("=")) {
      throw ParseError(done() ? end_offset() : toks_[pos_].offset, "'='");
    }
    advance();
    child(a, expr(1));
    expect_punct(";");
    return a;
  }

  int if_stmt() {
    advance();  // if
    expect_punct("(");
    int node = add("If");
    child(node, expr(1));
    expect_punct(")");
    child(node, block());
    if (peek_keyword("else")) {
      advance();
      child(node, block());
    }
    return node;
  }

  int while_stmt() {
    advance();  // while
    expect_punct("(");
    int node = add("While");
    child(node, expr(1));
    expect_punct(")");
    child(node, block());
    return node;
  }

  int return_stmt() {
    advance();  // return
    int node = add("Return");
    if (!peek_punct(";")) child(node, expr(1));
    expect_punct(";");
    return node;
  }

  int expr(int min_level) {
    int lhs = primary();
    while (!done() && cur().kind == TokKind::Op) {
      int level = binary_level(cur().text);
      if (level < min_level || level == 0) break;
      std::string op = cur().text;
      advance();
      int rhs = expr(level + 1);  // left-associative
      int node = add("BinaryOp", op);
      child(node, lhs);
      child(node, rhs);
      lhs = node;
    }
    return lhs;
  }

  int primary() {
    if (done()) throw ParseError(end_offset(), "expression");
    const Token& t = cur();
    if (t.kind == TokKind::IntLit) {
      advance();
      return add("IntLiteral", t.text);
    }
    if (t.kind == TokKind::BoolLit) {
      advance();
      return add("BoolLiteral", t.text);
    }
    if (t.kind == TokKind::Ident) {
      advance();
      if (peek_punct("(")) {
        advance();
        int call = add("Call", t.text);
        if (!peek_punct(")")) {
          child(call, expr(1));
          while (peek_punct(",")) {
            advance();
            child(call, expr(1));
          }
        }
        expect_punct(")");
        return call;
      }
      return add("Identifier", t.text);
    }
    if (peek_punct("(")) {
      advance();
      int e = expr(1);
      expect_punct(")");
      return e;
    }
    if (peek_op("!") || peek_op("-")) {
      std::string op = t.text;
      advance();
      int operand = primary();
      int node = add("UnaryOp", op);
      child(node, operand);
      return node;
    }
    throw ParseError(t.offset, "expression");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<ast::RawNode> nodes_;
};

}  // namespace

ast::AstTree parse_method(const std::vector<Token>& tokens) {
  Parser p(tokens);
  p.parse_method();
  return ast::build_tree(p.take_nodes());
}

ast::AstTree parse_source(const std::string& source) {
  return parse_method(tokenize(source));
}

}  // namespace astt::lang
