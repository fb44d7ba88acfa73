#include "doctest.h"

#include "core/errors.hpp"
#include "support.hpp"

using namespace mace4;

namespace {

std::vector<std::string> token_texts(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(s)) {
    if (t.kind != TokenKind::End) out.push_back(t.text);
  }
  return out;
}

Term parse(std::string_view s) { return parse_term(s, OpTable::standard()); }

}  // namespace

TEST_CASE("tokenizer classes") {
  CHECK(token_texts("x*y!=z | x' ' = x.") ==
        std::vector<std::string>{"x", "*", "y", "!=", "z", "|", "x", "'", "'", "=", "x", "."});
  CHECK(token_texts("a <-> b % comment\n c") == std::vector<std::string>{"a", "<->", "b", "c"});
  CHECK(token_texts("foo_1(23)") == std::vector<std::string>{"foo_1", "(", "23", ")"});

  auto toks = tokenize("f(x)");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].kind == TokenKind::Name);
  CHECK(toks[1].glued);
  CHECK(toks.back().kind == TokenKind::End);
  CHECK(tokenize("12")[0].kind == TokenKind::Number);
  CHECK_THROWS_AS(tokenize("a \x01 b"), ParseError);
}

TEST_CASE("parser builds the expected trees") {
  CHECK(parse("x * y = y * x") ==
        Term::compound("=", {Term::compound("*", {Term::compound("x"), Term::compound("y")}),
                             Term::compound("*", {Term::compound("y"), Term::compound("x")})}));
  // numerals are domain elements
  CHECK(parse("f(0, 12)") == Term::compound("f", {Term::element(0), Term::element(12)}));
  CHECK(parse("x''") == Term::compound("'", {Term::compound("'", {Term::compound("x")})}));
  CHECK(parse("-a") == Term::compound("-", {Term::compound("a")}));
  // | binds tighter than ->, & tighter than |
  Term t = parse("a | b & c -> d");
  CHECK(t.symbol() == "->");
  CHECK(t.arg(0).symbol() == "|");
  CHECK(t.arg(0).arg(1).symbol() == "&");
  // quantifier chains need no inner parentheses
  Term q = parse("all x all y exists z (x * y = z)");
  CHECK(is_quantifier_term(q));
  CHECK(q.arg(1).symbol() == "all");
  CHECK(q.arg(1).arg(1).symbol() == "exists");
}

TEST_CASE("associativity of declared operators") {
  OpTable ops = OpTable::standard();
  ops.declare("@", 500, OpType::InfixRight);
  ops.declare("#", 500, OpType::InfixLeft);
  ops.declare("@@", 500, OpType::Infix);
  Term a = Term::compound("a"), b = Term::compound("b"), c = Term::compound("c");
  CHECK(parse_term("a @ b @ c", ops) == Term::compound("@", {a, Term::compound("@", {b, c})}));
  CHECK(parse_term("a # b # c", ops) == Term::compound("#", {Term::compound("#", {a, b}), c}));
  CHECK_THROWS_AS(parse_term("a @@ b @@ c", ops), ParseError);
  // right-associative | by default
  CHECK(parse("a | b | c") == Term::compound("|", {a, Term::compound("|", {b, c})}));
}

TEST_CASE("mixing distinct operators of equal precedence is rejected") {
  OpTable ops = OpTable::standard();
  ops.declare("@", 790, OpType::InfixRight);
  CHECK_THROWS_AS(parse_term("a | b @ c", ops), ParseError);
  CHECK_NOTHROW(parse_term("a | (b @ c)", ops));
  CHECK_THROWS_AS(parse("a -> b <-> c"), ParseError);
}

TEST_CASE("printer output") {
  const OpTable ops = OpTable::standard();
  CHECK(print_term(parse("x*y=y*x"), ops) == "x * y = y * x");
  CHECK(parse(print_term(parse("x' ' = x"), ops)) == parse("x' ' = x"));
  CHECK(print_term(parse("f(a,g(0))"), ops) == "f(a,g(0))");
  CHECK(parse(print_term(parse("(a * b) * c"), ops)) == parse("(a * b) * c"));
}

TEST_CASE("print then parse is the identity on random terms") {
  testing::TermGenerator gen(20240917);
  const OpTable ops = OpTable::standard();
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.term(gen.uniform(0, 5));
    std::string text = print_term(t, ops);
    Term back;
    try {
      back = parse_term(text, ops);
    } catch (const ParseError& e) {
      INFO(text << " : " << e.what());
      ++failures;
      CHECK(false);
      continue;
    }
    if (!(back == t)) {
      INFO(text);
      ++failures;
      CHECK(false);
    }
    if (failures > 5) break;
  }
  CHECK(failures == 0);
}

TEST_CASE("operator declarations affect only later text") {
  CHECK_THROWS_AS(parse_input("clauses(a). x^y=y^x. end_of_list.\nop(400,infix,^).\n"), ParseError);
  auto p = parse_input("op(400,infix,^). clauses(t). x^y=y^x. end_of_list.");
  REQUIRE(p.lists.size() == 1);
  CHECK(p.lists[0].terms[0].arg(0).symbol() == "^");
  CHECK(p.ops.binary("^") == OpEntry{400, OpType::Infix});
}

TEST_CASE("input programs") {
  auto group = parse_input(testing::fixture("group.in"));
  int assigns = 0;
  for (const auto& c : group.commands) assigns += c.kind == Command::Kind::Assign;
  CHECK(assigns == 1);
  REQUIRE(group.lists.size() == 1);
  CHECK(group.lists[0].terms.size() == 4);

  auto empty = parse_input("% nothing here\n% at all\n");
  CHECK(empty.commands.empty());
  CHECK(empty.lists.empty());

  CHECK_THROWS_AS(parse_input("set(no_such_flag)."), ParseError);
  CHECK_NOTHROW(parse_input("set(no_such_flag).", true));
  CHECK_THROWS_AS(parse_input("clauses(t). a = b."), ParseError);
}
