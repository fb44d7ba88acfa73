#pragma once

// Tokenizer, operator table, term parser and printer.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "term.hpp"

namespace mace4 {

enum class OpType { Infix, InfixLeft, InfixRight, Prefix, Postfix };

std::optional<OpType> parse_op_type(std::string_view s);
std::string_view op_type_name(OpType t);
inline bool is_binary(OpType t) {
  return t == OpType::Infix || t == OpType::InfixLeft || t == OpType::InfixRight;
}

struct OpEntry {
  int precedence;
  OpType type;
  friend bool operator==(const OpEntry&, const OpEntry&) = default;
};

constexpr int kMinPrecedence = 1;
constexpr int kMaxPrecedence = 998;

// Parse/print properties of symbols. A symbol has at most one binary and at
// most one unary declaration at any time.
class OpTable {
 public:
  // Table with the twelve predeclared operations.
  static OpTable standard();

  // Throws ParseError when the precedence is outside [1, 998]. Returns true if
  // the symbol already had a declaration of the same arity class.
  bool declare(const std::string& symbol, int precedence, OpType type);

  std::optional<OpEntry> binary(const std::string& symbol) const;
  std::optional<OpEntry> unary(const std::string& symbol) const;
  bool is_operator(const std::string& symbol) const {
    return binary_.count(symbol) > 0 || unary_.count(symbol) > 0;
  }

  // Declarations that differ from the predeclared table, as op commands.
  std::vector<std::string> nonstandard_declarations() const;

 private:
  std::map<std::string, OpEntry> binary_;
  std::map<std::string, OpEntry> unary_;
};

enum class TokenKind { Name, Number, Symbol, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
  int column = 0;
  bool glued = false;  // no whitespace or comment between this and the previous token

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
  // Names and symbolic tokens can both name operators and functions.
  bool is_symbolic_name() const { return kind == TokenKind::Name || kind == TokenKind::Symbol; }
};

// Splits source text into tokens; the returned sequence always ends with an
// End token. Comments run from '%' to end of line.
std::vector<Token> tokenize(std::string_view source);

bool is_symbol_char(char c);

// Cursor over a token sequence with term parsing under an operator table.
class TermReader {
 public:
  TermReader(std::span<const Token> tokens, const OpTable& ops) : tokens_(tokens), ops_(&ops) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::End; }
  void expect_punct(char c);
  std::size_t position() const { return pos_; }
  void set_ops(const OpTable& ops) { ops_ = &ops; }

  Term read_term();
  // Term followed by the '.' terminator.
  Term read_statement();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const;

 private:
  struct Parsed {
    Term term;
    int precedence = 0;
    std::string top;  // operator that formed the term without parentheses
  };

  Parsed parse(int max_precedence);
  Parsed parse_primary(int max_precedence);
  bool ends_operand(const Token& tok) const;

  std::span<const Token> tokens_;
  const OpTable* ops_;
  std::size_t pos_ = 0;
};

// Parses a complete term; a trailing '.' is accepted and ignored.
Term parse_term(std::string_view text, const OpTable& ops);

// Renders a term so that it parses back to the identical term under `ops`.
std::string print_term(const Term& t, const OpTable& ops);

bool is_quantifier_term(const Term& t);

}  // namespace mace4
