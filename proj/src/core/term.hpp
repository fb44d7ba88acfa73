#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mace4 {

// A first-order term. Atoms, formulas, and parsed commands all share this
// representation; a constant is a compound with no arguments.
class Term {
 public:
  enum class Kind : unsigned char { Variable, Compound, Element };

  Term() = default;

  static Term variable(std::string name);
  static Term compound(std::string symbol, std::vector<Term> args = {});
  static Term element(int value);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_element() const { return kind_ == Kind::Element; }
  bool is_constant() const { return is_compound() && args_.empty(); }

  // Variable name or compound symbol.
  const std::string& symbol() const { return symbol_; }
  int element() const { return value_; }
  std::size_t arity() const { return args_.size(); }
  const std::vector<Term>& args() const { return args_; }
  std::vector<Term>& args() { return args_; }
  const Term& arg(std::size_t i) const { return args_[i]; }

  bool is_app(const char* symbol, std::size_t arity) const {
    return is_compound() && args_.size() == arity && symbol_ == symbol;
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Kind kind_ = Kind::Compound;
  std::string symbol_;
  int value_ = 0;
  std::vector<Term> args_;
};

// Prefix rendering f(a,g(b)); independent of any operator table.
std::string to_prefix_string(const Term& t);

std::size_t term_size(const Term& t);

}  // namespace mace4
