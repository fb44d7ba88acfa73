#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "options.hpp"
#include "syntax.hpp"
#include "term.hpp"

namespace mace4 {

struct Command {
  enum class Kind { Set, Clear, Assign, Op };
  Kind kind = Kind::Set;
  std::string name;  // flag or parameter
  int value = 0;     // assign value, or op precedence
  OpType op_type = OpType::Infix;
  std::vector<std::string> symbols;
};

enum class ListKind { Clauses, Formulas };

struct TermList {
  std::string name;
  ListKind kind = ListKind::Clauses;
  std::vector<Term> terms;
};

struct InputProgram {
  std::vector<Command> commands;
  std::vector<TermList> lists;
  OpTable ops = OpTable::standard();  // table in effect at end of input
  std::vector<std::string> warnings;
};

// Reads commands and clause/formula lists. Unrecognized set/clear/assign
// names and unrecognized lists are fatal unless `compatibility` is set, in
// which case they are skipped with a warning. Throws ParseError.
InputProgram parse_input(std::string_view text, bool compatibility = false);

// Applies the program's set/clear/assign commands in order. Throws UsageError
// on out-of-range values.
void apply_commands(const InputProgram& program, Options& options);

// Reads "op(P, type, sym)." or "op(P, type, [s1, s2])." with the reader
// positioned on "op"; declares into `ops`.
Command read_op_command(TermReader& reader, OpTable& ops);

}  // namespace mace4
