#include "input.hpp"

#include "errors.hpp"

namespace mace4 {

namespace {

std::string read_name(TermReader& r) {
  const Token& t = r.peek();
  if (!t.is_symbolic_name()) r.fail("expected a name");
  return r.next().text;
}

int read_integer(TermReader& r) {
  bool negative = false;
  if (r.peek().is(TokenKind::Symbol, "-")) {
    negative = true;
    r.next();
  }
  if (r.peek().kind != TokenKind::Number) r.fail("expected an integer");
  int v = std::stoi(r.next().text);
  return negative ? -v : v;
}

// Skips an ignored list body through its end_of_list terminator.
void skip_list(TermReader& r) {
  while (!r.at_end()) {
    if (r.peek().is(TokenKind::Name, "end_of_list") && r.peek(1).is_punct('.')) {
      r.next();
      r.next();
      return;
    }
    r.next();
  }
  r.fail("missing end_of_list");
}

}  // namespace

Command read_op_command(TermReader& r, OpTable& ops) {
  Command cmd;
  cmd.kind = Command::Kind::Op;
  r.next();  // op
  r.expect_punct('(');
  const Token& prec_tok = r.peek();
  cmd.value = read_integer(r);
  r.expect_punct(',');
  const Token& type_tok = r.peek();
  std::string type = read_name(r);
  auto t = parse_op_type(type);
  if (!t) r.fail_at(type_tok, "unknown op type " + type);
  cmd.op_type = *t;
  r.expect_punct(',');
  if (r.peek().is_punct('[')) {
    r.next();
    for (;;) {
      cmd.symbols.push_back(read_name(r));
      if (r.peek().is_punct(',')) {
        r.next();
        continue;
      }
      r.expect_punct(']');
      break;
    }
  } else {
    cmd.symbols.push_back(read_name(r));
  }
  r.expect_punct(')');
  r.expect_punct('.');
  if (cmd.value < kMinPrecedence || cmd.value > kMaxPrecedence) {
    r.fail_at(prec_tok, "op precedence " + std::to_string(cmd.value) + " is outside 1..998");
  }
  for (const auto& s : cmd.symbols) ops.declare(s, cmd.value, cmd.op_type);
  return cmd;
}

InputProgram parse_input(std::string_view text, bool compatibility) {
  InputProgram prog;
  const std::vector<Token> tokens = tokenize(text);
  TermReader r(tokens, prog.ops);
  const OpTable predeclared = OpTable::standard();

  while (!r.at_end()) {
    const Token& head = r.peek();
    if (head.kind != TokenKind::Name || !r.peek(1).is_punct('(')) {
      r.fail("expected a command or a list");
    }
    const std::string word = head.text;

    if (word == "op") {
      Command cmd = read_op_command(r, prog.ops);
      for (const auto& s : cmd.symbols) {
        if (predeclared.is_operator(s)) {
          prog.warnings.push_back("op redeclares predeclared symbol " + s);
        }
      }
      prog.commands.push_back(std::move(cmd));
      continue;
    }

    if (word == "set" || word == "clear") {
      r.next();
      r.expect_punct('(');
      const Token& name_tok = r.peek();
      std::string name = read_name(r);
      r.expect_punct(')');
      r.expect_punct('.');
      if (!find_flag(name)) {
        if (!compatibility) r.fail_at(name_tok, "unrecognized flag " + name);
        prog.warnings.push_back("ignoring " + word + "(" + name + ")");
        continue;
      }
      Command cmd;
      cmd.kind = word == "set" ? Command::Kind::Set : Command::Kind::Clear;
      cmd.name = name;
      prog.commands.push_back(std::move(cmd));
      continue;
    }

    if (word == "assign") {
      r.next();
      r.expect_punct('(');
      const Token& name_tok = r.peek();
      std::string name = read_name(r);
      r.expect_punct(',');
      bool known = find_param(name) != nullptr;
      if (!known && compatibility) {
        // Value may be any term for parameters of other programs.
        r.read_term();
        r.expect_punct(')');
        r.expect_punct('.');
        prog.warnings.push_back("ignoring assign(" + name + ")");
        continue;
      }
      int value = read_integer(r);
      r.expect_punct(')');
      r.expect_punct('.');
      if (!known) r.fail_at(name_tok, "unrecognized parameter " + name);
      Command cmd;
      cmd.kind = Command::Kind::Assign;
      cmd.name = name;
      cmd.value = value;
      prog.commands.push_back(std::move(cmd));
      continue;
    }

    // List header: word(name).
    const bool list_shape = r.peek(2).is_symbolic_name() && r.peek(3).is_punct(')') &&
                            r.peek(4).is_punct('.');
    if (list_shape && (word == "clauses" || word == "formulas")) {
      r.next();
      r.next();
      TermList list;
      list.name = r.next().text;
      list.kind = word == "clauses" ? ListKind::Clauses : ListKind::Formulas;
      r.next();
      r.next();
      for (;;) {
        if (r.at_end()) r.fail("missing end_of_list for list " + list.name);
        if (r.peek().is(TokenKind::Name, "end_of_list") && r.peek(1).is_punct('.')) {
          r.next();
          r.next();
          break;
        }
        list.terms.push_back(r.read_statement());
      }
      prog.lists.push_back(std::move(list));
      continue;
    }
    if (list_shape && compatibility) {
      std::string name = r.peek(2).text;
      for (int i = 0; i < 5; ++i) r.next();
      skip_list(r);
      prog.warnings.push_back("ignoring list " + word + "(" + name + ")");
      continue;
    }
    r.fail("unrecognized command or list " + word);
  }
  return prog;
}

void apply_commands(const InputProgram& program, Options& options) {
  for (const auto& cmd : program.commands) {
    switch (cmd.kind) {
      case Command::Kind::Set: options.set_flag(cmd.name, true); break;
      case Command::Kind::Clear: options.set_flag(cmd.name, false); break;
      case Command::Kind::Assign: options.assign(cmd.name, cmd.value); break;
      case Command::Kind::Op: break;
    }
  }
}

}  // namespace mace4
