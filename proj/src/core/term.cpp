#include "term.hpp"

#include <utility>

namespace mace4 {

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::compound(std::string symbol, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Compound;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

Term Term::element(int value) {
  Term t;
  t.kind_ = Kind::Element;
  t.value_ = value;
  return t;
}

static void append_prefix(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Element:
      out += std::to_string(t.element());
      return;
    case Term::Kind::Variable:
      out += t.symbol();
      return;
    case Term::Kind::Compound:
      out += t.symbol();
      if (t.arity() > 0) {
        out += '(';
        for (std::size_t i = 0; i < t.arity(); ++i) {
          if (i > 0) out += ',';
          append_prefix(t.arg(i), out);
        }
        out += ')';
      }
      return;
  }
}

std::string to_prefix_string(const Term& t) {
  std::string out;
  append_prefix(t, out);
  return out;
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& a : t.args()) n += term_size(a);
  return n;
}

}  // namespace mace4
