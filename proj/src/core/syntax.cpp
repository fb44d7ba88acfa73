#include "syntax.hpp"

#include <cctype>
#include <utility>

#include "errors.hpp"

namespace mace4 {

// ---------------------------------------------------------------------------
// Operator table

std::optional<OpType> parse_op_type(std::string_view s) {
  if (s == "infix") return OpType::Infix;
  if (s == "infix_left") return OpType::InfixLeft;
  if (s == "infix_right") return OpType::InfixRight;
  if (s == "prefix") return OpType::Prefix;
  if (s == "postfix") return OpType::Postfix;
  return std::nullopt;
}

std::string_view op_type_name(OpType t) {
  switch (t) {
    case OpType::Infix: return "infix";
    case OpType::InfixLeft: return "infix_left";
    case OpType::InfixRight: return "infix_right";
    case OpType::Prefix: return "prefix";
    case OpType::Postfix: return "postfix";
  }
  return "infix";
}

OpTable OpTable::standard() {
  OpTable t;
  t.declare("->", 800, OpType::Infix);
  t.declare("<-", 800, OpType::Infix);
  t.declare("<->", 800, OpType::Infix);
  t.declare("|", 790, OpType::InfixRight);
  t.declare("&", 780, OpType::InfixRight);
  t.declare("~", 300, OpType::Prefix);
  t.declare("=", 700, OpType::Infix);
  t.declare("!=", 700, OpType::Infix);
  t.declare("+", 500, OpType::Infix);
  t.declare("*", 400, OpType::Infix);
  t.declare("-", 300, OpType::Prefix);
  t.declare("'", 300, OpType::Postfix);
  return t;
}

bool OpTable::declare(const std::string& symbol, int precedence, OpType type) {
  if (precedence < kMinPrecedence || precedence > kMaxPrecedence) {
    throw ParseError("op precedence " + std::to_string(precedence) + " for " + symbol +
                     " is outside 1..998");
  }
  auto& table = is_binary(type) ? binary_ : unary_;
  bool existed = table.count(symbol) > 0;
  table[symbol] = OpEntry{precedence, type};
  return existed;
}

std::optional<OpEntry> OpTable::binary(const std::string& symbol) const {
  auto it = binary_.find(symbol);
  if (it == binary_.end()) return std::nullopt;
  return it->second;
}

std::optional<OpEntry> OpTable::unary(const std::string& symbol) const {
  auto it = unary_.find(symbol);
  if (it == unary_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> OpTable::nonstandard_declarations() const {
  const OpTable base = standard();
  std::vector<std::string> out;
  auto emit = [&](const std::map<std::string, OpEntry>& mine,
                  const std::map<std::string, OpEntry>& theirs) {
    for (const auto& [sym, e] : mine) {
      auto it = theirs.find(sym);
      if (it != theirs.end() && it->second == e) continue;
      out.push_back("op(" + std::to_string(e.precedence) + ", " + std::string(op_type_name(e.type)) +
                    ", " + sym + ").");
    }
  };
  emit(binary_, base.binary_);
  emit(unary_, base.unary_);
  return out;
}

// ---------------------------------------------------------------------------
// Tokenizer

bool is_symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<': case '>':
    case '=': case '~': case '?': case '@': case '&': case '|': case '!': case '#':
    case '$': case ':': case ';': case '`':
      return true;
    default:
      return false;
  }
}

static bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

static bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

static bool is_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\v' || c == '\f';
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  bool glued = false;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (is_space(c)) {
      advance(1);
      glued = false;
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      glued = false;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t start = i;
    if (is_name_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_name_char(src[j])) ++j;
      tok.kind = TokenKind::Name;
      tok.text = std::string(src.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j - i > 9) throw ParseError("number too large", line, col);
      tok.kind = TokenKind::Number;
      tok.text = std::string(src.substr(start, j - start));
      advance(j - i);
    } else if (c == '\'') {
      tok.kind = TokenKind::Symbol;
      tok.text = "'";
      advance(1);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError("unterminated quoted symbol", line, col);
      tok.kind = TokenKind::Name;
      tok.text = std::string(src.substr(start, j + 1 - start));
      advance(j + 1 - i);
    } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '.' || c == '{' ||
               c == '}') {
      tok.kind = TokenKind::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else if (is_symbol_char(c)) {
      std::size_t j = i;
      while (j < src.size() && is_symbol_char(src[j])) ++j;
      tok.kind = TokenKind::Symbol;
      tok.text = std::string(src.substr(start, j - start));
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    tok.glued = glued;
    glued = true;
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = col;
  out.push_back(std::move(end));
  return out;
}

// Function application requires '(' directly after the symbol.
static bool adjacent_open_paren(const Token& t) { return t.is_punct('(') && t.glued; }

// ---------------------------------------------------------------------------
// Parser

const Token& TermReader::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  if (k >= tokens_.size()) return tokens_.back();
  return tokens_[k];
}

const Token& TermReader::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

void TermReader::fail_at(const Token& tok, const std::string& message) const {
  throw ParseError(message, tok.line, tok.column);
}

void TermReader::fail(const std::string& message) const { fail_at(peek(), message); }

void TermReader::expect_punct(char c) {
  if (!peek().is_punct(c)) {
    std::string got = peek().kind == TokenKind::End ? "end of input" : "'" + peek().text + "'";
    fail(std::string("expected '") + c + "' but found " + got);
  }
  next();
}

bool TermReader::ends_operand(const Token& tok) const {
  return tok.kind == TokenKind::End || tok.is_punct(',') || tok.is_punct(')') ||
         tok.is_punct(']') || tok.is_punct('.');
}

Term TermReader::read_term() { return parse(1000).term; }

Term TermReader::read_statement() {
  Term t = read_term();
  expect_punct('.');
  return t;
}

TermReader::Parsed TermReader::parse(int max_precedence) {
  Parsed left = parse_primary(max_precedence);
  for (;;) {
    const Token& tok = peek();
    if (!tok.is_symbolic_name()) break;
    const std::string sym = tok.text;
    if (auto b = ops_->binary(sym); b && b->precedence <= max_precedence) {
      const int p = b->precedence;
      if (left.precedence > p ||
          (left.precedence == p && !(b->type == OpType::InfixLeft && left.top == sym))) {
        fail("ambiguous use of operator '" + sym + "'; add parentheses");
      }
      const Token& op_tok = next();
      Parsed right = parse(b->type == OpType::InfixRight ? p : p - 1);
      if (right.precedence == p && right.top != sym) {
        fail_at(op_tok, "ambiguous use of operator '" + sym + "'; add parentheses");
      }
      left = Parsed{Term::compound(sym, {std::move(left.term), std::move(right.term)}), p, sym};
      continue;
    }
    if (auto u = ops_->unary(sym);
        u && u->type == OpType::Postfix && u->precedence <= max_precedence) {
      const int p = u->precedence;
      if (left.precedence > p || (left.precedence == p && left.top != sym)) {
        fail("ambiguous use of operator '" + sym + "'; add parentheses");
      }
      next();
      left = Parsed{Term::compound(sym, {std::move(left.term)}), p, sym};
      continue;
    }
    break;
  }
  return left;
}

TermReader::Parsed TermReader::parse_primary(int max_precedence) {
  const Token& tok = peek();
  if (tok.is_punct('(')) {
    next();
    Parsed inner = parse(1000);
    expect_punct(')');
    return Parsed{std::move(inner.term), 0, ""};
  }
  if (tok.kind == TokenKind::Number) {
    next();
    return Parsed{Term::element(std::stoi(tok.text)), 0, ""};
  }
  if (!tok.is_symbolic_name()) {
    if (tok.kind == TokenKind::End) fail("unexpected end of input");
    fail("unexpected '" + tok.text + "'");
  }
  const std::string sym = tok.text;
  if (adjacent_open_paren(peek(1))) {
    next();
    next();
    std::vector<Term> args;
    for (;;) {
      args.push_back(parse(999).term);
      if (peek().is_punct(',')) {
        next();
        continue;
      }
      expect_punct(')');
      break;
    }
    if (args.size() > 10) fail_at(tok, "symbol " + sym + " has more than 10 arguments");
    return Parsed{Term::compound(sym, std::move(args)), 0, ""};
  }
  if ((sym == "all" || sym == "exists") && peek(1).kind == TokenKind::Name &&
      !ends_operand(peek(2))) {
    next();
    std::string var = next().text;
    Parsed body = parse(300);
    return Parsed{Term::compound(sym, {Term::compound(var), std::move(body.term)}), 0, ""};
  }
  if (auto u = ops_->unary(sym); u && u->type == OpType::Prefix && !ends_operand(peek(1))) {
    const int p = u->precedence;
    if (p > max_precedence) fail("prefix operator '" + sym + "' needs parentheses here");
    next();
    Parsed operand = parse(p);
    if (operand.precedence == p && operand.top != sym) {
      fail("ambiguous use of operator '" + sym + "'; add parentheses");
    }
    return Parsed{Term::compound(sym, {std::move(operand.term)}), p, sym};
  }
  if (ops_->is_operator(sym) && !ends_operand(peek(1))) {
    fail("unexpected operator '" + sym + "'");
  }
  next();
  return Parsed{Term::compound(sym), 0, ""};
}

Term parse_term(std::string_view text, const OpTable& ops) {
  auto tokens = tokenize(text);
  TermReader reader(tokens, ops);
  Term t = reader.read_term();
  if (reader.peek().is_punct('.')) reader.next();
  if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after term");
  return t;
}

// ---------------------------------------------------------------------------
// Printer

bool is_quantifier_term(const Term& t) {
  return t.is_compound() && t.arity() == 2 && (t.symbol() == "all" || t.symbol() == "exists") &&
         (t.arg(0).is_constant() || t.arg(0).is_variable());
}

namespace {

struct Rendered {
  std::string text;
  int precedence = 0;
  std::string top;
  bool quantifier = false;
};

enum class CharClass { Name, Symbol, Other };

CharClass char_class(char c) {
  if (is_name_char(c)) return CharClass::Name;
  if (is_symbol_char(c)) return CharClass::Symbol;
  return CharClass::Other;
}

bool would_merge(char a, char b) {
  CharClass ca = char_class(a);
  return ca != CharClass::Other && ca == char_class(b);
}

class Printer {
 public:
  explicit Printer(const OpTable& ops) : ops_(ops) {}

  Rendered render(const Term& t) const {
    if (t.is_element()) return {std::to_string(t.element())};
    if (t.is_variable()) return {t.symbol()};
    const std::string& sym = t.symbol();
    if (is_quantifier_term(t)) {
      Rendered body = render(t.arg(1));
      std::string body_text =
          (!body.quantifier && body.precedence > 300) ? "(" + body.text + ")" : body.text;
      return {sym + " " + t.arg(0).symbol() + " " + body_text, 0, "", true};
    }
    if (t.arity() == 2) {
      if (auto b = ops_.binary(sym)) {
        const int p = b->precedence;
        std::string l = wrap(render(t.arg(0)), p, b->type == OpType::InfixLeft, sym);
        std::string r = wrap(render(t.arg(1)), p, b->type == OpType::InfixRight, sym);
        return {l + " " + sym + " " + r, p, sym};
      }
    }
    if (t.arity() == 1) {
      if (auto u = ops_.unary(sym)) {
        const int p = u->precedence;
        std::string operand = wrap(render(t.arg(0)), p, true, sym);
        if (u->type == OpType::Prefix) {
          bool space = operand.front() == '(' || would_merge(sym.back(), operand.front());
          return {sym + (space ? " " : "") + operand, p, sym};
        }
        bool space = would_merge(operand.back(), sym.front());
        return {operand + (space ? " " : "") + sym, p, sym};
      }
    }
    if (t.arity() == 0) return {sym};
    std::string s = sym + "(";
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i > 0) s += ",";
      s += render(t.arg(i)).text;
    }
    s += ")";
    return {s};
  }

 private:
  static std::string wrap(const Rendered& child, int p, bool same_ok, const std::string& sym) {
    bool bare = !child.quantifier &&
                (child.precedence < p || (child.precedence == p && same_ok && child.top == sym));
    return bare ? child.text : "(" + child.text + ")";
  }

  const OpTable& ops_;
};

}  // namespace

std::string print_term(const Term& t, const OpTable& ops) { return Printer(ops).render(t).text; }

}  // namespace mace4
