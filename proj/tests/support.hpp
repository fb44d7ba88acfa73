#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/clausify.hpp"
#include "core/driver.hpp"
#include "core/input.hpp"
#include "core/interp.hpp"
#include "core/options.hpp"
#include "core/search.hpp"
#include "core/state.hpp"
#include "core/syntax.hpp"

namespace testing {

using namespace mace4;

struct LoadedTheory {
  Options options;
  std::vector<Clause> clauses;
  Signature signature;
};

inline LoadedTheory load_theory(const std::string& text) {
  LoadedTheory t;
  InputProgram program = parse_input(text);
  apply_commands(program, t.options);
  VariableRule rule{t.options.flag("prolog_style_variables")};
  t.clauses = build_theory(program, rule).clauses;
  t.signature = collect_signature(t.clauses);
  return t;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture(const std::string& name) {
  return read_file(std::string(MACE4_FIXTURE_DIR) + "/" + name);
}

struct EngineRun {
  bool consistent = true;
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Interpretation> models;
  SearchStats stats;
};

// One domain size, straight through State and Search.
inline EngineRun run_engine(const LoadedTheory& t, int n, SearchConfig config,
                            EngineConfig engine = {}, long long max_models = -1) {
  EngineRun r;
  State state(t.clauses, t.signature, n, engine);
  if (!state.consistent()) {
    r.consistent = false;
    return r;
  }
  SearchLimits limits;
  limits.max_models = max_models;
  limits.start_clock = cpu_seconds();
  Search search(state, config, limits, [&](const Interpretation& m) { r.models.push_back(m); });
  r.status = search.run();
  r.stats = search.stats();
  return r;
}

inline RunSummary run_driver(const std::string& text, const std::vector<std::string>& args,
                             std::string* output = nullptr) {
  std::string sink;
  auto summary = run_text(text, parse_command_line(args), [&](std::string_view s) { sink += s; });
  if (output) *output = std::move(sink);
  return summary;
}

// ---------------------------------------------------------------------------
// Random generators

class TermGenerator {
 public:
  explicit TermGenerator(std::uint32_t seed) : rng_(seed) {}

  // Random term over names, elements and the predeclared operators.
  Term term(int depth) {
    const int pick = depth <= 0 ? uniform(0, 2) : uniform(0, 12);
    switch (pick) {
      case 0:
        return Term::element(uniform(0, 12));
      case 1:
      case 2:
        return Term::compound(pick_name());
      case 3:
      case 4: {
        std::vector<Term> args;
        const int k = uniform(1, 3);
        for (int i = 0; i < k; ++i) args.push_back(term(depth - 1));
        return Term::compound(pick_name(), std::move(args));
      }
      case 5:
      case 6:
      case 7:
      case 8: {
        static const char* ops[] = {"=", "!=", "+", "*", "|", "&", "->", "<-", "<->"};
        return Term::compound(ops[uniform(0, 8)], {term(depth - 1), term(depth - 1)});
      }
      case 9:
      case 10: {
        static const char* ops[] = {"~", "-", "'"};
        return Term::compound(ops[uniform(0, 2)], {term(depth - 1)});
      }
      case 11: {
        const char* q = uniform(0, 1) ? "all" : "exists";
        return Term::compound(q, {Term::compound(pick_variable()), term(depth - 1)});
      }
      default:
        return Term::compound(pick_name(), {term(depth - 1), term(depth - 1)});
    }
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::string pick_name() {
    static const char* names[] = {"a", "b", "f", "g", "h", "P", "Q", "x", "y", "e", "c1", "foo_bar"};
    return names[uniform(0, 11)];
  }
  std::string pick_variable() {
    static const char* vars[] = {"x", "y", "z", "u"};
    return vars[uniform(0, 3)];
  }

  std::mt19937 rng_;
};

inline Interpretation random_interpretation(std::mt19937& rng) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Interpretation interp;
  interp.size = uni(1, 5);
  static const char* names[] = {"a", "b", "f", "g", "h", "k", "P", "Q", "R", "S"};
  const int count = uni(1, 4);
  std::vector<std::string> used;
  for (int i = 0; i < count; ++i) {
    std::string name = names[uni(0, 9)];
    bool dup = false;
    for (const auto& u : used) dup = dup || u == name;
    if (dup) continue;
    used.push_back(name);
    InterpTable t;
    t.name = name;
    t.relation = name[0] >= 'P' && name[0] <= 'S';
    t.arity = uni(t.relation ? 1 : 0, 3);
    std::size_t cells = 1;
    for (int k = 0; k < t.arity; ++k) cells *= static_cast<std::size_t>(interp.size);
    for (std::size_t c = 0; c < cells; ++c) t.values.push_back(uni(0, t.relation ? 1 : interp.size - 1));
    interp.tables.push_back(std::move(t));
  }
  return interp;
}

// Small random theory: at most two symbols of arity at most two, at most
// three clauses, at most two variables per clause.
inline std::string random_theory_text(std::mt19937& rng) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  struct Sym {
    std::string name;
    int arity;
    bool relation;
  };
  static const Sym pool[] = {{"a", 0, false}, {"g", 1, false}, {"f", 2, false},
                             {"P", 1, true},  {"R", 2, true},  {"b", 0, false}};
  std::vector<Sym> syms;
  const int nsyms = uni(1, 2);
  while (static_cast<int>(syms.size()) < nsyms) {
    const Sym& s = pool[uni(0, 5)];
    bool dup = false;
    for (const auto& t : syms) dup = dup || t.name == s.name;
    if (!dup) syms.push_back(s);
  }
  std::vector<Sym> funcs, rels;
  for (const auto& s : syms) (s.relation ? rels : funcs).push_back(s);

  std::string text = "clauses(theory).\n";
  const int nclauses = uni(1, 3);
  for (int c = 0; c < nclauses; ++c) {
    const int nvars = uni(0, 2);
    static const char* vars[] = {"x", "y"};
    std::function<std::string(int)> gen_term = [&](int depth) -> std::string {
      const int r = uni(0, 5);
      if (depth > 0 && !funcs.empty() && r >= 2) {
        const Sym& f = funcs[static_cast<std::size_t>(uni(0, static_cast<int>(funcs.size()) - 1))];
        if (f.arity == 0) return f.name;
        std::string s = f.name + "(";
        for (int k = 0; k < f.arity; ++k) s += (k ? "," : "") + gen_term(depth - 1);
        return s + ")";
      }
      if (nvars > 0 && r <= 1) return vars[uni(0, nvars - 1)];
      return std::to_string(uni(0, 1));
    };
    const int nlits = uni(1, 3);
    std::string clause;
    for (int l = 0; l < nlits; ++l) {
      std::string lit;
      const bool negative = uni(0, 1) == 1;
      if (!rels.empty() && (funcs.empty() || uni(0, 1))) {
        const Sym& p = rels[static_cast<std::size_t>(uni(0, static_cast<int>(rels.size()) - 1))];
        lit = p.name + "(";
        for (int k = 0; k < p.arity; ++k) lit += (k ? "," : "") + gen_term(2);
        lit += ")";
        if (negative) lit = "~" + lit;
      } else {
        lit = gen_term(2) + (negative ? " != " : " = ") + gen_term(2);
      }
      clause += (l ? " | " : "") + lit;
    }
    text += clause + ".\n";
  }
  text += "end_of_list.\n";
  return text;
}

}  // namespace testing
