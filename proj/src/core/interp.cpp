#include "interp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace mace4 {

const InterpTable* Interpretation::find(const std::string& name, int arity) const {
  for (const auto& t : tables) {
    if (t.name == name && t.arity == arity) return &t;
  }
  return nullptr;
}

namespace {

int digits(int v) {
  int d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

std::string cells_row(const std::vector<int>& values, std::size_t from, int n, int w) {
  std::string s;
  for (int j = 0; j < n; ++j) {
    if (j > 0) s += ' ';
    s += pad_left(std::to_string(values[from + static_cast<std::size_t>(j)]), static_cast<std::size_t>(w));
  }
  return s;
}

std::string header_row(int n, int w) {
  std::string s;
  for (int j = 0; j < n; ++j) {
    if (j > 0) s += ' ';
    s += pad_left(std::to_string(j), static_cast<std::size_t>(w));
  }
  return s;
}

std::string index_tuple(std::size_t idx, int arity, int n) {
  std::vector<int> ix(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    ix[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  std::string s;
  for (int k = 0; k < arity; ++k) {
    if (k > 0) s += ',';
    s += std::to_string(ix[static_cast<std::size_t>(k)]);
  }
  return s;
}

}  // namespace

std::string print_standard(const Interpretation& interp) {
  const int n = interp.size;
  const int w = digits(std::max(n - 1, 1));
  const std::size_t label = 5;
  std::ostringstream out;

  std::string constants;
  for (const auto& t : interp.tables) {
    if (t.arity != 0) continue;
    if (!constants.empty()) constants += "    ";
    constants += t.name + " : " + std::to_string(t.values[0]);
  }
  if (!constants.empty()) out << "\n  " << constants << "\n";

  for (const auto& t : interp.tables) {
    if (t.arity == 0) continue;
    out << "\n";
    const std::string head = "  " + t.name + " :";
    if (t.arity == 1) {
      const std::size_t start = label + static_cast<std::size_t>(w) + 3;
      out << pad_right(head, start) << header_row(n, w) << "\n";
      out << std::string(label, ' ')
          << std::string(static_cast<std::size_t>((w + 2) + n * (w + 1)), '-') << "\n";
      out << std::string(start, ' ') << cells_row(t.values, 0, n, w) << "\n";
    } else if (t.arity == 2) {
      out << pad_right(head, label + static_cast<std::size_t>(w) + 1) << "| " << header_row(n, w)
          << "\n";
      out << std::string(label, ' ') << std::string(static_cast<std::size_t>(w + 1), '-') << "+"
          << std::string(static_cast<std::size_t>(n * (w + 1)), '-') << "\n";
      for (int i = 0; i < n; ++i) {
        out << std::string(label, ' ') << pad_left(std::to_string(i), static_cast<std::size_t>(w))
            << " | " << cells_row(t.values, static_cast<std::size_t>(i * n), n, w) << "\n";
      }
    } else {
      out << head << "\n";
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        out << "     " << t.name << "(" << index_tuple(i, t.arity, n) << ") = " << t.values[i]
            << "\n";
      }
    }
  }
  return out.str();
}

std::string print_portable(const Interpretation& interp) {
  std::ostringstream out;
  out << "interpretation(" << interp.size << ", [";
  bool first = true;
  for (const auto& t : interp.tables) {
    if (!first) out << ", ";
    first = false;
    out << (t.relation ? "relation(" : "function(") << t.name;
    if (t.arity > 0) {
      out << "(";
      for (int k = 0; k < t.arity; ++k) out << (k > 0 ? ",_" : "_");
      out << ")";
    }
    out << ", [";
    for (std::size_t i = 0; i < t.values.size(); ++i) out << (i > 0 ? ", " : "") << t.values[i];
    out << "])";
  }
  out << "]).";
  return out.str();
}

namespace {

class PortableReader {
 public:
  explicit PortableReader(std::string_view text) : tokens_(tokenize(text)), reader_(tokens_, ops_) {}

  std::vector<Interpretation> read_all() {
    std::vector<Interpretation> out;
    while (!reader_.at_end()) {
      const Token& t = reader_.peek();
      if (t.is(TokenKind::Name, "op") && reader_.peek(1).is_punct('(')) {
        read_op_command(reader_, ops_);
      } else if (t.is(TokenKind::Name, "terms") && reader_.peek(1).is_punct('(')) {
        reader_.next();
        reader_.expect_punct('(');
        reader_.next();
        reader_.expect_punct(')');
        reader_.expect_punct('.');
      } else if (t.is(TokenKind::Name, "end_of_list")) {
        reader_.next();
        reader_.expect_punct('.');
      } else if (t.is(TokenKind::Name, "interpretation")) {
        out.push_back(read_interpretation());
      } else {
        reader_.fail("expected an interpretation");
      }
    }
    return out;
  }

 private:
  int read_int() {
    if (reader_.peek().kind != TokenKind::Number) reader_.fail("expected a number");
    return std::stoi(reader_.next().text);
  }

  Interpretation read_interpretation() {
    Interpretation interp;
    reader_.next();
    reader_.expect_punct('(');
    const Token& size_tok = reader_.peek();
    interp.size = read_int();
    if (interp.size < 1) reader_.fail_at(size_tok, "domain size must be positive");
    reader_.expect_punct(',');
    reader_.expect_punct('[');
    if (!reader_.peek().is_punct(']')) {
      for (;;) {
        interp.tables.push_back(read_item(interp.size));
        if (reader_.peek().is_punct(',')) {
          reader_.next();
          continue;
        }
        break;
      }
    }
    reader_.expect_punct(']');
    reader_.expect_punct(')');
    reader_.expect_punct('.');
    return interp;
  }

  InterpTable read_item(int n) {
    InterpTable t;
    const Token& kind = reader_.peek();
    if (kind.is(TokenKind::Name, "function")) {
      t.relation = false;
    } else if (kind.is(TokenKind::Name, "relation")) {
      t.relation = true;
    } else {
      reader_.fail("expected function(...) or relation(...)");
    }
    reader_.next();
    reader_.expect_punct('(');
    const Token& sym = reader_.peek();
    if (!sym.is_symbolic_name()) reader_.fail("expected a symbol");
    t.name = reader_.next().text;
    if (reader_.peek().is_punct('(') && reader_.peek().glued) {
      reader_.next();
      for (;;) {
        if (!reader_.peek().is(TokenKind::Name, "_")) reader_.fail("expected _");
        reader_.next();
        ++t.arity;
        if (reader_.peek().is_punct(',')) {
          reader_.next();
          continue;
        }
        break;
      }
      reader_.expect_punct(')');
    }
    reader_.expect_punct(',');
    const Token& list_tok = reader_.peek();
    reader_.expect_punct('[');
    if (!reader_.peek().is_punct(']')) {
      for (;;) {
        const Token& v_tok = reader_.peek();
        int v = read_int();
        if (v >= (t.relation ? 2 : n)) reader_.fail_at(v_tok, "value out of range in " + t.name);
        t.values.push_back(v);
        if (reader_.peek().is_punct(',')) {
          reader_.next();
          continue;
        }
        break;
      }
    }
    reader_.expect_punct(']');
    reader_.expect_punct(')');
    std::size_t expected = 1;
    for (int k = 0; k < t.arity; ++k) expected *= static_cast<std::size_t>(n);
    if (t.values.size() != expected) {
      reader_.fail_at(list_tok, "table " + t.name + " has " + std::to_string(t.values.size()) +
                                    " values, expected " + std::to_string(expected));
    }
    return t;
  }

  std::vector<Token> tokens_;
  OpTable ops_ = OpTable::standard();
  TermReader reader_;
};

}  // namespace

std::vector<Interpretation> parse_portable(std::string_view text) {
  PortableReader r(text);
  return r.read_all();
}

// ---------------------------------------------------------------------------

ClauseEvaluator::ClauseEvaluator(const Clause& clause, const Interpretation& sig) {
  nvars_ = static_cast<int>(clause.variables.size());
  for (const auto& l : clause.literals) {
    Lit lit{l.positive, false, -1, -1};
    if (l.atom.is_app("=", 2)) {
      lit.equality = true;
      lit.lhs = compile(l.atom.arg(0), sig, clause.variables, false);
      lit.rhs = compile(l.atom.arg(1), sig, clause.variables, false);
    } else {
      lit.lhs = compile(l.atom, sig, clause.variables, true);
    }
    lits_.push_back(lit);
  }
}

int ClauseEvaluator::compile(const Term& t, const Interpretation& sig,
                             const std::vector<std::string>& vars, bool relation) {
  Node node{};
  if (t.is_variable()) {
    auto it = std::find(vars.begin(), vars.end(), t.symbol());
    if (it == vars.end()) throw FatalError("unbound variable " + t.symbol());
    node = Node{0, static_cast<int>(it - vars.begin()), 0, 0};
  } else if (t.is_element()) {
    if (t.element() >= sig.size) {
      throw FatalError("domain element " + std::to_string(t.element()) + " out of range");
    }
    node = Node{1, t.element(), 0, 0};
  } else {
    int table = -1;
    for (std::size_t i = 0; i < sig.tables.size(); ++i) {
      const auto& tb = sig.tables[i];
      if (tb.name == t.symbol() && tb.arity == static_cast<int>(t.arity()) &&
          tb.relation == relation) {
        table = static_cast<int>(i);
      }
    }
    if (table < 0) {
      throw FatalError(std::string(relation ? "relation " : "function ") + t.symbol() + "/" +
                       std::to_string(t.arity()) + " is not interpreted");
    }
    std::vector<int> kids;
    for (const auto& a : t.args()) kids.push_back(compile(a, sig, vars, false));
    node = Node{2, table, static_cast<int>(arg_nodes_.size()), static_cast<int>(kids.size())};
    arg_nodes_.insert(arg_nodes_.end(), kids.begin(), kids.end());
  }
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int ClauseEvaluator::eval(const Interpretation& interp, const std::vector<int>& env,
                          int id) const {
  const Node& node = nodes_[static_cast<std::size_t>(id)];
  switch (node.kind) {
    case 0: return env[static_cast<std::size_t>(node.value)];
    case 1: return node.value;
    default: break;
  }
  std::size_t idx = 0;
  for (int k = 0; k < node.arity; ++k) {
    idx = idx * static_cast<std::size_t>(interp.size) +
          static_cast<std::size_t>(
              eval(interp, env, arg_nodes_[static_cast<std::size_t>(node.first_arg + k)]));
  }
  return interp.tables[static_cast<std::size_t>(node.value)].values[idx];
}

bool ClauseEvaluator::operator()(const Interpretation& interp) const {
  std::vector<int> env(static_cast<std::size_t>(nvars_), 0);
  for (;;) {
    bool satisfied = false;
    for (const auto& l : lits_) {
      bool v = l.equality ? eval(interp, env, l.lhs) == eval(interp, env, l.rhs)
                          : eval(interp, env, l.lhs) == 1;
      if (v == l.positive) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
    int k = nvars_ - 1;
    while (k >= 0 && ++env[static_cast<std::size_t>(k)] == interp.size) {
      env[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return true;
  }
}

bool evaluate_clause(const Interpretation& interp, const Clause& clause) {
  return ClauseEvaluator(clause, interp)(interp);
}

namespace {

class FormulaEvaluator {
 public:
  explicit FormulaEvaluator(const Interpretation& interp) : m_(interp) {}

  bool holds(const Term& t) {
    if (is_quantifier_term(t)) {
      const std::string& var = t.arg(0).symbol();
      const bool universal = t.symbol() == "all";
      env_.emplace_back(var, 0);
      bool result = universal;
      for (int d = 0; d < m_.size; ++d) {
        env_.back().second = d;
        if (holds(t.arg(1)) != universal) {
          result = !universal;
          break;
        }
      }
      env_.pop_back();
      return result;
    }
    const std::string& s = t.symbol();
    if (t.is_compound() && t.arity() == 1 && s == "~") return !holds(t.arg(0));
    if (t.is_compound() && t.arity() == 2) {
      if (s == "&") return holds(t.arg(0)) && holds(t.arg(1));
      if (s == "|") return holds(t.arg(0)) || holds(t.arg(1));
      if (s == "->") return !holds(t.arg(0)) || holds(t.arg(1));
      if (s == "<-") return holds(t.arg(0)) || !holds(t.arg(1));
      if (s == "<->") return holds(t.arg(0)) == holds(t.arg(1));
      if (s == "=") return value(t.arg(0)) == value(t.arg(1));
      if (s == "!=") return value(t.arg(0)) != value(t.arg(1));
    }
    return lookup(t, true) == 1;
  }

 private:
  int value(const Term& t) {
    if (t.is_element()) {
      if (t.element() >= m_.size) {
        throw FatalError("element " + std::to_string(t.element()) + " is outside the domain");
      }
      return t.element();
    }
    if (t.is_variable() || t.arity() == 0) {
      for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
        if (it->first == t.symbol()) return it->second;
      }
    }
    return lookup(t, false);
  }

  int lookup(const Term& t, bool relation) {
    const InterpTable* table = m_.find(t.symbol(), static_cast<int>(t.arity()));
    if (!table || table->relation != relation) {
      throw FatalError("symbol " + t.symbol() + "/" + std::to_string(t.arity()) +
                       " is not interpreted");
    }
    std::size_t idx = 0;
    for (const auto& a : t.args()) {
      idx = idx * static_cast<std::size_t>(m_.size) + static_cast<std::size_t>(value(a));
    }
    return table->values[idx];
  }

  const Interpretation& m_;
  std::vector<std::pair<std::string, int>> env_;
};

}  // namespace

bool evaluate_formula(const Interpretation& interp, const Term& formula) {
  return FormulaEvaluator(interp).holds(formula);
}

// ---------------------------------------------------------------------------

bool same_signature(const Interpretation& a, const Interpretation& b) {
  if (a.tables.size() != b.tables.size()) return false;
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    const auto& x = a.tables[i];
    const auto& y = b.tables[i];
    if (x.name != y.name || x.arity != y.arity || x.relation != y.relation) return false;
  }
  return true;
}

namespace {

std::vector<int> decode(std::size_t idx, int arity, int n) {
  std::vector<int> ix(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    ix[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return ix;
}

// Per-element invariants preserved by any isomorphism.
std::vector<std::vector<int>> profiles(const Interpretation& in) {
  const int n = in.size;
  std::vector<std::vector<int>> p(static_cast<std::size_t>(n));
  for (const auto& t : in.tables) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    std::vector<int> diag(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      auto ix = decode(i, t.arity, n);
      const int v = t.values[i];
      if (t.relation) {
        if (t.arity > 0 && v == 1) ++hits[static_cast<std::size_t>(ix[0])];
      } else {
        ++hits[static_cast<std::size_t>(v)];
      }
      if (t.arity > 0 && std::all_of(ix.begin(), ix.end(), [&](int e) { return e == ix[0]; })) {
        diag[static_cast<std::size_t>(ix[0])] = t.relation ? v : (v == ix[0] ? 1 : 0);
      }
    }
    for (int e = 0; e < n; ++e) {
      p[static_cast<std::size_t>(e)].push_back(hits[static_cast<std::size_t>(e)]);
      p[static_cast<std::size_t>(e)].push_back(diag[static_cast<std::size_t>(e)]);
    }
  }
  return p;
}

struct Constraint {
  int table;
  std::size_t cell;
  std::vector<int> args;
  int value;
  bool relation;
};

}  // namespace

bool isomorphic(const Interpretation& a, const Interpretation& b, IsoStats* stats) {
  if (a.size != b.size || !same_signature(a, b)) {
    throw FatalError("isomorphism test on interpretations with different signatures");
  }
  const int n = a.size;
  auto pa = profiles(a);
  auto pb = profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  if (stats) ++stats->checks;

  // Constraints of `a` grouped by the largest element they mention, so each
  // is tested as soon as the permutation covers it.
  std::vector<std::vector<Constraint>> by_level(static_cast<std::size_t>(n));
  for (std::size_t ti = 0; ti < a.tables.size(); ++ti) {
    const auto& t = a.tables[ti];
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      Constraint c{static_cast<int>(ti), i, decode(i, t.arity, n), t.values[i], t.relation};
      int level = t.relation ? 0 : c.value;
      for (int e : c.args) level = std::max(level, e);
      by_level[static_cast<std::size_t>(level)].push_back(std::move(c));
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto holds = [&](const Constraint& c) {
    std::size_t idx = 0;
    for (int e : c.args) {
      idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(perm[static_cast<std::size_t>(e)]);
    }
    const int bv = b.tables[static_cast<std::size_t>(c.table)].values[idx];
    return c.relation ? bv == c.value : bv == perm[static_cast<std::size_t>(c.value)];
  };

  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)] ||
          pa[static_cast<std::size_t>(k)] != pb[static_cast<std::size_t>(img)]) {
        continue;
      }
      if (stats) ++stats->perms;
      perm[static_cast<std::size_t>(k)] = img;
      used[static_cast<std::size_t>(img)] = 1;
      bool ok = true;
      for (const auto& c : by_level[static_cast<std::size_t>(k)]) {
        if (!holds(c)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(k + 1)) return true;
      used[static_cast<std::size_t>(img)] = 0;
      perm[static_cast<std::size_t>(k)] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace mace4
