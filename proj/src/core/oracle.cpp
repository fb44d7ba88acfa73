#include "oracle.hpp"

#include <cmath>
#include <map>

#include "errors.hpp"

namespace mace4 {

namespace {

Interpretation blank(const Signature& sig, int n) {
  Interpretation interp;
  interp.size = n;
  for (const auto& s : sig) {
    std::size_t cells = 1;
    for (int k = 0; k < s.arity; ++k) cells *= static_cast<std::size_t>(n);
    interp.tables.push_back(InterpTable{s.name, s.arity, s.relation, std::vector<int>(cells, 0)});
  }
  return interp;
}

Term substitute(const Term& t, const std::map<std::string, int>& env) {
  if (t.is_variable()) return Term::element(env.at(t.symbol()));
  if (!t.is_compound() || t.arity() == 0) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(substitute(a, env));
  return Term::compound(t.symbol(), std::move(args));
}

}  // namespace

double interpretation_space(const Signature& sig, int n) {
  double log_total = 0;
  for (const auto& s : sig) {
    const double cells = std::pow(static_cast<double>(n), s.arity);
    log_total += cells * std::log10(s.relation ? 2.0 : static_cast<double>(n));
  }
  return std::pow(10.0, log_total);
}

OracleResult enumerate_models(const Signature& sig, int n, const std::vector<Clause>& clauses,
                              bool keep_models, double bound) {
  OracleResult result;
  if (interpretation_space(sig, n) > bound * (1 + 1e-9)) {
    result.refused = true;
    return result;
  }
  Interpretation interp = blank(sig, n);
  std::vector<ClauseEvaluator> evaluators;
  for (const auto& c : clauses) evaluators.emplace_back(c, interp);

  // Odometer over all cells; the last cell of the last table moves fastest.
  std::vector<std::pair<int*, int>> digits;
  for (auto& t : interp.tables) {
    for (auto& v : t.values) digits.emplace_back(&v, t.relation ? 2 : n);
  }
  for (;;) {
    bool ok = true;
    for (const auto& e : evaluators) {
      if (!e(interp)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++result.count;
      if (keep_models) result.models.push_back(interp);
    }
    std::size_t k = digits.size();
    while (k > 0) {
      auto& [value, radix] = digits[k - 1];
      if (++*value < radix) break;
      *value = 0;
      --k;
    }
    if (k == 0) break;
  }
  return result;
}

GroundEncoding emit_ground_encoding(const std::vector<Clause>& clauses, const Signature& sig,
                                    int n) {
  GroundEncoding enc;
  const OpTable ops = OpTable::standard();
  for (const auto& c : clauses) {
    std::vector<int> tuple(c.variables.size(), 0);
    for (;;) {
      std::map<std::string, int> env;
      for (std::size_t i = 0; i < tuple.size(); ++i) env[c.variables[i]] = tuple[i];
      Clause g;
      for (const auto& l : c.literals) g.literals.push_back(Literal{l.positive, substitute(l.atom, env)});
      enc.clauses.push_back(std::move(g));
      ++enc.instances;
      std::size_t k = tuple.size();
      while (k > 0 && ++tuple[k - 1] == n) {
        tuple[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Clause d;
      d.literals.push_back(
          Literal{false, Term::compound("=", {Term::element(i), Term::element(j)})});
      enc.clauses.push_back(std::move(d));
      ++enc.distinctness;
    }
  }
  for (const auto& s : sig) {
    if (s.relation) continue;
    std::size_t cells = 1;
    for (int k = 0; k < s.arity; ++k) cells *= static_cast<std::size_t>(n);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      std::vector<Term> args(static_cast<std::size_t>(s.arity));
      std::size_t rest = idx;
      for (int k = s.arity - 1; k >= 0; --k) {
        args[static_cast<std::size_t>(k)] = Term::element(static_cast<int>(rest % static_cast<std::size_t>(n)));
        rest /= static_cast<std::size_t>(n);
      }
      const Term cell = Term::compound(s.name, args);
      Clause pc;
      for (int v = 0; v < n; ++v) {
        pc.literals.push_back(Literal{true, Term::compound("=", {cell, Term::element(v)})});
      }
      enc.clauses.push_back(std::move(pc));
      ++enc.cell_clauses;
    }
  }
  for (const auto& c : enc.clauses) enc.text += print_clause(c, ops) + "\n";
  return enc;
}

std::optional<bool> ground_encoding_satisfiable(const GroundEncoding& enc, const Signature& sig,
                                                int n, double bound) {
  auto r = enumerate_models(sig, n, enc.clauses, false, bound);
  if (r.refused) return std::nullopt;
  return r.count > 0;
}

}  // namespace mace4
