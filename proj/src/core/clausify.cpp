#include "clausify.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "errors.hpp"

namespace mace4 {

namespace {

bool is_connective(const Term& t) {
  if (!t.is_compound()) return false;
  if (t.arity() == 1) return t.symbol() == "~";
  if (t.arity() == 2) {
    const std::string& s = t.symbol();
    return s == "|" || s == "&" || s == "->" || s == "<-" || s == "<->" || s == "!=";
  }
  return false;
}

// Converts the arguments of an atom: nullary names satisfying `is_var`
// become variables. Rejects logic symbols inside terms.
Term convert_term(const Term& t, const std::function<bool(const std::string&)>& is_var,
                  const std::function<std::string(const std::string&)>& var_name) {
  if (t.is_element() || t.is_variable()) return t;
  if (is_connective(t) || is_quantifier_term(t) || t.is_app("=", 2)) {
    throw ParseError("logic symbol " + t.symbol() + " inside a term: " + to_prefix_string(t));
  }
  if (t.arity() == 0 && is_var(t.symbol())) return Term::variable(var_name(t.symbol()));
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(convert_term(a, is_var, var_name));
  return Term::compound(t.symbol(), std::move(args));
}

Term convert_atom(const Term& t, const std::function<bool(const std::string&)>& is_var,
                  const std::function<std::string(const std::string&)>& var_name) {
  if (t.is_element()) throw ParseError("domain element used as an atom: " + to_prefix_string(t));
  if (t.is_variable() || (t.arity() == 0 && is_var(t.symbol()))) {
    throw ParseError("variable used as an atom: " + t.symbol());
  }
  if (is_connective(t) || is_quantifier_term(t)) {
    throw ParseError("unexpected logic symbol " + t.symbol() + " in atom position");
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(convert_term(a, is_var, var_name));
  return Term::compound(t.symbol(), std::move(args));
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.symbol()) == out.end()) out.push_back(t.symbol());
    return;
  }
  for (const auto& a : t.args()) collect_variables(a, out);
}

void fill_variables(Clause& c) {
  c.variables.clear();
  for (const auto& l : c.literals) collect_variables(l.atom, c.variables);
}

void flatten_or(const Term& t, std::vector<const Term*>& out) {
  if (t.is_app("|", 2)) {
    flatten_or(t.arg(0), out);
    flatten_or(t.arg(1), out);
  } else {
    out.push_back(&t);
  }
}

// Formula tree used during conversion.
struct Form {
  enum class Kind { Atom, Not, And, Or, Imp, Rimp, Iff, All, Exists };
  Kind kind = Kind::Atom;
  Term atom;
  std::string var;
  std::vector<Form> kids;
};

Form make(Form::Kind k, std::vector<Form> kids) {
  Form f;
  f.kind = k;
  f.kids = std::move(kids);
  return f;
}

Form negate(Form f) { return make(Form::Kind::Not, {std::move(f)}); }

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
  if (t.is_variable()) {
    auto it = sub.find(t.symbol());
    return it == sub.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(substitute(a, sub));
  return Term::compound(t.symbol(), std::move(args));
}

Form eliminate_implications(Form f) {
  for (auto& k : f.kids) k = eliminate_implications(std::move(k));
  switch (f.kind) {
    case Form::Kind::Imp:
      return make(Form::Kind::Or, {negate(std::move(f.kids[0])), std::move(f.kids[1])});
    case Form::Kind::Rimp:
      return make(Form::Kind::Or, {std::move(f.kids[0]), negate(std::move(f.kids[1]))});
    case Form::Kind::Iff: {
      Form a = f.kids[0];
      Form b = f.kids[1];
      return make(Form::Kind::And,
                  {make(Form::Kind::Or, {negate(a), b}), make(Form::Kind::Or, {a, negate(b)})});
    }
    default:
      return f;
  }
}

Form nnf(Form f, bool negated) {
  switch (f.kind) {
    case Form::Kind::Atom:
      return negated ? negate(std::move(f)) : f;
    case Form::Kind::Not:
      return nnf(std::move(f.kids[0]), !negated);
    case Form::Kind::And:
    case Form::Kind::Or: {
      Form::Kind k = f.kind;
      if (negated) k = k == Form::Kind::And ? Form::Kind::Or : Form::Kind::And;
      return make(k, {nnf(std::move(f.kids[0]), negated), nnf(std::move(f.kids[1]), negated)});
    }
    case Form::Kind::All:
    case Form::Kind::Exists: {
      Form::Kind k = f.kind;
      if (negated) k = k == Form::Kind::All ? Form::Kind::Exists : Form::Kind::All;
      Form q = make(k, {nnf(std::move(f.kids[0]), negated)});
      q.var = f.var;
      return q;
    }
    default:
      break;
  }
  throw FatalError("internal: implication survived elimination");
}

using Cnf = std::vector<std::vector<Literal>>;

Cnf to_cnf(const Form& f) {
  switch (f.kind) {
    case Form::Kind::Atom:
      return {{Literal{true, f.atom}}};
    case Form::Kind::Not:
      return {{Literal{false, f.kids[0].atom}}};
    case Form::Kind::And: {
      Cnf a = to_cnf(f.kids[0]);
      Cnf b = to_cnf(f.kids[1]);
      a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      return a;
    }
    case Form::Kind::Or: {
      Cnf a = to_cnf(f.kids[0]);
      Cnf b = to_cnf(f.kids[1]);
      Cnf out;
      out.reserve(a.size() * b.size());
      for (const auto& ca : a) {
        for (const auto& cb : b) {
          auto c = ca;
          c.insert(c.end(), cb.begin(), cb.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
    default:
      break;
  }
  throw FatalError("internal: formula not in negation normal form");
}

void scan_unbound(const Term& t, std::vector<std::string>& bound, const VariableRule& rule,
                  std::vector<std::string>& out, bool in_atom) {
  if (t.is_element() || t.is_variable()) return;
  if (!in_atom && is_quantifier_term(t)) {
    bound.push_back(t.arg(0).symbol());
    scan_unbound(t.arg(1), bound, rule, out, false);
    bound.pop_back();
    return;
  }
  if (!in_atom && is_connective(t)) {
    for (const auto& a : t.args()) scan_unbound(a, bound, rule, out, t.symbol() == "!=");
    return;
  }
  if (t.arity() == 0) {
    const std::string& s = t.symbol();
    if (std::find(bound.begin(), bound.end(), s) == bound.end() && rule.looks_like_variable(s) &&
        std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(s);
    }
    return;
  }
  for (const auto& a : t.args()) scan_unbound(a, bound, rule, out, true);
}

std::string pretty_variable(std::size_t i, bool prolog_style) {
  static const char* base[] = {"x", "y", "z", "u", "v", "w"};
  std::string s = i < 6 ? std::string(base[i]) : "v" + std::to_string(i);
  if (prolog_style) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

}  // namespace

bool VariableRule::looks_like_variable(const std::string& name) const {
  if (name.empty()) return false;
  char c = name[0];
  if (prolog_style) return c >= 'A' && c <= 'Z';
  return c >= 'u' && c <= 'z';
}

Clause term_to_clause(const Term& raw, const VariableRule& rule) {
  std::vector<const Term*> disjuncts;
  flatten_or(raw, disjuncts);
  auto is_var = [&](const std::string& s) { return rule.looks_like_variable(s); };
  auto same = [](const std::string& s) { return s; };
  Clause c;
  for (const Term* d : disjuncts) {
    bool positive = true;
    const Term* a = d;
    while (a->is_app("~", 1)) {
      positive = !positive;
      a = &a->arg(0);
    }
    if (a->is_app("!=", 2)) {
      positive = !positive;
      Term eq = Term::compound("=", {a->arg(0), a->arg(1)});
      c.literals.push_back(Literal{positive, convert_atom(eq, is_var, same)});
      continue;
    }
    if (is_connective(*a) || is_quantifier_term(*a)) {
      throw ParseError("clause contains " + a->symbol() + ": " + to_prefix_string(raw));
    }
    c.literals.push_back(Literal{positive, convert_atom(*a, is_var, same)});
  }
  fill_variables(c);
  return c;
}

std::vector<std::string> unbound_variable_like(const Term& formula, const VariableRule& rule) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  scan_unbound(formula, bound, rule, out, false);
  return out;
}

Clausifier::Clausifier(const VariableRule& rule, std::set<std::string> reserved,
                       std::function<bool(const std::string&)> name_in_use)
    : rule_(rule), reserved_(std::move(reserved)), name_in_use_(std::move(name_in_use)) {}

std::string Clausifier::fresh_skolem() {
  for (;;) {
    std::string name = "sk" + std::to_string(++skolem_counter_);
    if (reserved_.count(name) == 0) {
      reserved_.insert(name);
      skolems_.push_back(name);
      return name;
    }
  }
}

std::vector<Clause> Clausifier::clausify(const Term& formula) {
  auto unbound = unbound_variable_like(formula, rule_);
  if (!unbound.empty()) {
    std::string names;
    for (const auto& u : unbound) names += (names.empty() ? "" : ", ") + u;
    throw ParseError("formula has unbound symbols that look like variables (" + names +
                     "): " + to_prefix_string(formula));
  }

  // Bound names map to unique internal variable names.
  std::function<Form(const Term&, const std::map<std::string, std::string>&)> build =
      [&](const Term& t, const std::map<std::string, std::string>& scope) -> Form {
    if (is_quantifier_term(t)) {
      auto inner = scope;
      std::string internal = "_v" + std::to_string(++var_counter_);
      inner[t.arg(0).symbol()] = internal;
      Form q = make(t.symbol() == "all" ? Form::Kind::All : Form::Kind::Exists,
                    {build(t.arg(1), inner)});
      q.var = internal;
      return q;
    }
    if (t.is_app("~", 1)) return negate(build(t.arg(0), scope));
    if (t.is_app("!=", 2)) {
      return negate(build(Term::compound("=", {t.arg(0), t.arg(1)}), scope));
    }
    if (t.is_compound() && t.arity() == 2 && is_connective(t)) {
      const std::string& s = t.symbol();
      Form::Kind k = s == "&"    ? Form::Kind::And
                     : s == "|"  ? Form::Kind::Or
                     : s == "->" ? Form::Kind::Imp
                     : s == "<-" ? Form::Kind::Rimp
                                 : Form::Kind::Iff;
      return make(k, {build(t.arg(0), scope), build(t.arg(1), scope)});
    }
    auto is_var = [&](const std::string& n) { return scope.count(n) > 0; };
    auto var_name = [&](const std::string& n) { return scope.at(n); };
    Form a;
    a.kind = Form::Kind::Atom;
    a.atom = convert_atom(t, is_var, var_name);
    return a;
  };

  Form f = nnf(eliminate_implications(build(formula, {})), false);

  // Skolemize and drop universal quantifiers.
  std::vector<std::string> universals;
  std::map<std::string, Term> sub;
  std::function<Form(const Form&)> skolemize = [&](const Form& g) -> Form {
    switch (g.kind) {
      case Form::Kind::Atom: {
        Form a = g;
        a.atom = substitute(g.atom, sub);
        return a;
      }
      case Form::Kind::Not:
        return negate(skolemize(g.kids[0]));
      case Form::Kind::And:
      case Form::Kind::Or:
        return make(g.kind, {skolemize(g.kids[0]), skolemize(g.kids[1])});
      case Form::Kind::All: {
        universals.push_back(g.var);
        Form body = skolemize(g.kids[0]);
        universals.pop_back();
        return body;
      }
      case Form::Kind::Exists: {
        std::vector<Term> args;
        for (const auto& u : universals) args.push_back(Term::variable(u));
        sub[g.var] = Term::compound(fresh_skolem(), std::move(args));
        Form body = skolemize(g.kids[0]);
        sub.erase(g.var);
        return body;
      }
      default:
        break;
    }
    throw FatalError("internal: unexpected connective during Skolemization");
  };
  Form matrix = skolemize(f);

  std::vector<Clause> out;
  for (auto& lits : to_cnf(matrix)) {
    Clause c;
    c.literals = std::move(lits);
    fill_variables(c);
    standardize_variables(c, rule_, name_in_use_);
    out.push_back(std::move(c));
  }
  return out;
}

void standardize_variables(Clause& c, const VariableRule& rule,
                           const std::function<bool(const std::string&)>& avoid) {
  std::map<std::string, Term> renaming;
  std::size_t k = 0;
  for (const auto& v : c.variables) {
    std::string name;
    do {
      name = pretty_variable(k++, rule.prolog_style);
    } while (avoid && avoid(name));
    renaming[v] = Term::variable(name);
  }
  for (auto& l : c.literals) l.atom = substitute(l.atom, renaming);
  fill_variables(c);
}

Term clause_to_term(const Clause& c) {
  if (c.literals.empty()) return Term::compound("$F");
  auto lit_term = [](const Literal& l) {
    if (l.positive) return l.atom;
    if (l.atom.is_app("=", 2)) return Term::compound("!=", {l.atom.arg(0), l.atom.arg(1)});
    return Term::compound("~", {l.atom});
  };
  Term t = lit_term(c.literals.back());
  for (std::size_t i = c.literals.size() - 1; i-- > 0;) {
    t = Term::compound("|", {lit_term(c.literals[i]), std::move(t)});
  }
  return t;
}

std::string print_clause(const Clause& c, const OpTable& ops) {
  return print_term(clause_to_term(c), ops) + ".";
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (!t.is_compound()) return;
  out.insert(t.symbol());
  for (const auto& a : t.args()) collect_symbols(a, out);
}

Theory build_theory(const InputProgram& program, const VariableRule& rule) {
  std::set<std::string> symbols;
  for (const auto& list : program.lists) {
    for (const auto& t : list.terms) collect_symbols(t, symbols);
  }
  const OpTable& ops = program.ops;
  Clausifier clausifier(rule, symbols,
                        [&ops](const std::string& name) { return ops.is_operator(name); });
  Theory theory;
  for (const auto& list : program.lists) {
    for (const auto& t : list.terms) {
      if (list.kind == ListKind::Clauses) {
        theory.clauses.push_back(term_to_clause(t, rule));
      } else {
        for (auto& c : clausifier.clausify(t)) {
          theory.from_formula.push_back(theory.clauses.size());
          theory.clauses.push_back(std::move(c));
        }
      }
    }
  }
  return theory;
}

// ---------------------------------------------------------------------------

namespace {

struct SymbolUse {
  SymbolInfo info;
  std::size_t first = 0;
};

void scan_term(const Term& t, std::vector<SymbolUse>& uses) {
  if (!t.is_compound()) return;
  if (t.is_app("=", 2)) throw FatalError("equality inside a term: " + to_prefix_string(t));
  SymbolInfo info{t.symbol(), static_cast<int>(t.arity()), false};
  auto it = std::find_if(uses.begin(), uses.end(), [&](const SymbolUse& u) {
    return u.info.name == info.name && u.info.arity == info.arity;
  });
  if (it == uses.end()) {
    uses.push_back(SymbolUse{info, uses.size()});
  } else if (it->info.relation) {
    throw FatalError("symbol " + info.name + "/" + std::to_string(info.arity) +
                     " is used both as a relation and as a function");
  }
  for (const auto& a : t.args()) scan_term(a, uses);
}

void scan_atom(const Term& atom, std::vector<SymbolUse>& uses) {
  if (atom.is_app("=", 2)) {
    scan_term(atom.arg(0), uses);
    scan_term(atom.arg(1), uses);
    return;
  }
  SymbolInfo info{atom.symbol(), static_cast<int>(atom.arity()), true};
  auto it = std::find_if(uses.begin(), uses.end(), [&](const SymbolUse& u) {
    return u.info.name == info.name && u.info.arity == info.arity;
  });
  if (it == uses.end()) {
    uses.push_back(SymbolUse{info, uses.size()});
  } else if (!it->info.relation) {
    throw FatalError("symbol " + info.name + "/" + std::to_string(info.arity) +
                     " is used both as a relation and as a function");
  }
  for (const auto& a : atom.args()) scan_term(a, uses);
}

int max_element_in(const Term& t) {
  int m = t.is_element() ? t.element() : -1;
  for (const auto& a : t.args()) m = std::max(m, max_element_in(a));
  return m;
}

}  // namespace

Signature collect_signature(const std::vector<Clause>& clauses) {
  std::vector<SymbolUse> uses;
  for (const auto& c : clauses) {
    for (const auto& l : c.literals) scan_atom(l.atom, uses);
  }
  for (const auto& u : uses) {
    if (u.info.arity > 10) {
      throw FatalError("symbol " + u.info.name + " has arity greater than 10");
    }
  }
  std::stable_sort(uses.begin(), uses.end(), [](const SymbolUse& a, const SymbolUse& b) {
    if (a.info.relation != b.info.relation) return !a.info.relation;
    if (a.info.arity != b.info.arity) return a.info.arity < b.info.arity;
    return a.first < b.first;
  });
  Signature sig;
  for (auto& u : uses) sig.push_back(std::move(u.info));
  return sig;
}

int max_domain_element(const std::vector<Clause>& clauses) {
  int m = -1;
  for (const auto& c : clauses) {
    for (const auto& l : c.literals) m = std::max(m, max_element_in(l.atom));
  }
  return m;
}

}  // namespace mace4
