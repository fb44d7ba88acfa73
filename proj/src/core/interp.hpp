#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clausify.hpp"
#include "syntax.hpp"

namespace mace4 {

// Values of one symbol in row-major index order (first argument most
// significant). Relation values are 0 or 1.
struct InterpTable {
  std::string name;
  int arity = 0;
  bool relation = false;
  std::vector<int> values;
  friend bool operator==(const InterpTable&, const InterpTable&) = default;
};

struct Interpretation {
  int size = 0;
  std::vector<InterpTable> tables;

  const InterpTable* find(const std::string& name, int arity) const;
  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

// Multi-line layout with constants on one line, unary tables as a row and
// binary tables as a grid. Larger arities are listed cell by cell.
std::string print_standard(const Interpretation& interp);

// One line: interpretation(N, [function(f(_,_), [v, ...]), relation(...)]).
std::string print_portable(const Interpretation& interp);

// Reads every interpretation in `text`. Leading op commands and a
// terms(...)/end_of_list. wrapper are accepted and skipped. Throws ParseError.
std::vector<Interpretation> parse_portable(std::string_view text);

// Clause evaluation with the clause compiled against one signature.
class ClauseEvaluator {
 public:
  // Throws FatalError if a symbol is not interpreted or an element is out
  // of range.
  ClauseEvaluator(const Clause& clause, const Interpretation& signature);
  bool operator()(const Interpretation& interp) const;

 private:
  struct Node {
    int kind;  // 0 variable, 1 element, 2 application
    int value; // variable index, element, or table index
    int first_arg;
    int arity;
  };
  int eval(const Interpretation& interp, const std::vector<int>& env, int node) const;
  int compile(const Term& t, const Interpretation& sig, const std::vector<std::string>& vars,
              bool relation);

  std::vector<Node> nodes_;
  std::vector<int> arg_nodes_;
  struct Lit {
    bool positive;
    bool equality;
    int lhs;
    int rhs;
  };
  std::vector<Lit> lits_;
  int nvars_ = 0;
};

bool evaluate_clause(const Interpretation& interp, const Clause& clause);

// Truth of a closed formula, quantifiers ranging over the domain. Throws
// FatalError on uninterpreted symbols or elements outside the domain.
bool evaluate_formula(const Interpretation& interp, const Term& formula);

struct IsoStats {
  std::uint64_t checks = 0;
  std::uint64_t perms = 0;
};

// True iff a permutation of the domain maps every table of `a` onto the
// corresponding table of `b`. Throws FatalError on differing signatures.
bool isomorphic(const Interpretation& a, const Interpretation& b, IsoStats* stats = nullptr);

bool same_signature(const Interpretation& a, const Interpretation& b);

}  // namespace mace4
