#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "input.hpp"
#include "syntax.hpp"
#include "term.hpp"

namespace mace4 {

struct Literal {
  bool positive = true;
  Term atom;  // "=" with two arguments, or a predicate application
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Disjunction of literals; variables are implicitly universal. `variables`
// lists them in order of first occurrence.
struct Clause {
  std::vector<Literal> literals;
  std::vector<std::string> variables;
  friend bool operator==(const Clause&, const Clause&) = default;
};

// Decides which nullary names in clauses are variables.
struct VariableRule {
  bool prolog_style = false;
  bool looks_like_variable(const std::string& name) const;
};

// Interprets a raw `|`/`~` term as a clause. `!=` becomes a negated `=`.
// Throws ParseError on connectives or quantifiers inside the clause.
Clause term_to_clause(const Term& raw, const VariableRule& rule);

// Names of unbound nullary symbols that look like variables; empty when the
// formula is acceptable.
std::vector<std::string> unbound_variable_like(const Term& formula, const VariableRule& rule);

// Formula to clause conversion: implication elimination, negation normal
// form, Skolemization, and CNF by distribution. Skolem symbols are named
// sk1, sk2, ... skipping names in `reserved`.
class Clausifier {
 public:
  Clausifier(const VariableRule& rule, std::set<std::string> reserved,
             std::function<bool(const std::string&)> name_in_use = {});

  // Throws ParseError if the formula is not closed.
  std::vector<Clause> clausify(const Term& formula);

  const std::vector<std::string>& skolem_symbols() const { return skolems_; }

 private:
  std::string fresh_skolem();

  VariableRule rule_;
  std::set<std::string> reserved_;
  std::function<bool(const std::string&)> name_in_use_;
  std::vector<std::string> skolems_;
  int skolem_counter_ = 0;
  int var_counter_ = 0;
};

// Renames clause variables to x, y, z, u, v, w, v6, ... (or the upper-case
// forms under prolog style), skipping names rejected by `avoid`.
void standardize_variables(Clause& c, const VariableRule& rule,
                           const std::function<bool(const std::string&)>& avoid);

Term clause_to_term(const Clause& c);
std::string print_clause(const Clause& c, const OpTable& ops);  // with the final '.'

void collect_symbols(const Term& t, std::set<std::string>& out);

// The clauses of every list of a program, formulas converted.
struct Theory {
  std::vector<Clause> clauses;
  std::vector<std::size_t> from_formula;  // indices of clauses produced by clausification
};
Theory build_theory(const InputProgram& program, const VariableRule& rule);

// ---------------------------------------------------------------------------
// Symbol typing

struct SymbolInfo {
  std::string name;
  int arity = 0;
  bool relation = false;
  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

// Ordered list of symbols: functions before relations, each group by arity
// then first occurrence.
using Signature = std::vector<SymbolInfo>;

// Throws FatalError when a symbol is used both as function and relation, or
// when equality appears inside a term.
Signature collect_signature(const std::vector<Clause>& clauses);

int max_domain_element(const std::vector<Clause>& clauses);  // -1 if none

}  // namespace mace4
