// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "core/oracle.hpp"
#include "core/tools.hpp"
#include "support.hpp"

using namespace mace4;
using testing::fixture;
using testing::load_theory;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// 1: the group example.
Outcome group_example() {
  Outcome o;
  const std::string text = fixture("group.in");
  auto t = load_theory(text);
  for (int n = 2; n <= 5; ++n) {
    auto r = testing::run_engine(t, n, SearchConfig{}, {}, 1);
    if (!r.models.empty() || r.status != SearchStatus::Exhausted) {
      o.pass = false;
      o.detail += "size " + std::to_string(n) + " not exhausted; ";
    }
  }
  const double start = cpu_seconds();
  std::string out;
  auto run = testing::run_driver(text, {}, &out);
  const double elapsed = cpu_seconds() - start;
  auto six = testing::run_engine(t, 6, SearchConfig{}, {}, 1);
  bool valid = six.models.size() == 1;
  if (valid) {
    const auto& m = six.models[0];
    for (const auto& c : t.clauses) valid = valid && evaluate_clause(m, c);
    const auto* mul = m.find("*", 2);
    valid = valid && mul && mul->values[1 * 6 + 2] != mul->values[2 * 6 + 1];
  }
  o.pass = o.pass && valid && run.exit_code == 0 && run.models == 1 && run.last_size == 6 &&
           elapsed < 5.0;
  o.detail += "exit " + std::to_string(run.exit_code) + ", model at size " +
              std::to_string(run.last_size) + ", valid=" + (valid ? "yes" : "no") + ", " +
              fmt(elapsed) + " s";
  return o;
}

// 2: the ortholattice pipeline.
Outcome ortholattice_pipeline() {
  Outcome o;
  const double start = cpu_seconds();
  std::string out;
  auto run = testing::run_driver(fixture("ol.in"), {}, &out);
  auto stream = read_interpretation_stream(get_interps(out));
  auto filtered = isofilter(stream);
  o.pass = filtered.kept.size() == 24 && filtered.input >= 24 && run.exit_code == 3;
  o.detail = isofilter_summary(filtered) + " (exit " + std::to_string(run.exit_code) + ", " +
             fmt(cpu_seconds() - start) + " s total)";
  return o;
}

// 3: engine model counts against the brute-force oracle.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937 rng(4242);
  int theories = 0, comparisons = 0, attempts = 0, nonzero = 0, sizes = 0;
  while (theories < 40 && attempts < 400) {
    ++attempts;
    const std::string text = testing::random_theory_text(rng);
    testing::LoadedTheory t;
    try {
      t = load_theory(text);
    } catch (const std::exception&) {
      continue;
    }
    if (t.signature.empty() || interpretation_space(t.signature, 3) > 1e6) continue;
    ++theories;
    for (int n = 2; n <= 3; ++n) {
      const auto expected = enumerate_models(t.signature, n, t.clauses, false).count;
      ++sizes;
      if (expected > 0) ++nonzero;
      for (bool negprop : {true, false}) {
        EngineConfig engine;
        engine.negprop = negprop;
        auto r = testing::run_engine(t, n, SearchConfig{2, 4, false}, engine, -1);
        ++comparisons;
        if (r.models.size() != expected) {
          o.pass = false;
          o.detail += "mismatch at n=" + std::to_string(n) + " negprop=" + std::to_string(negprop) +
                      " oracle=" + std::to_string(expected) +
                      " engine=" + std::to_string(r.models.size()) + " for:\n" + text;
        }
      }
    }
  }
  if (theories < 25) o.pass = false;
  o.detail = std::to_string(theories) + " theories, " + std::to_string(comparisons) +
             " comparisons, " + std::to_string(nonzero) + " of " + std::to_string(sizes) +
             " (theory, size) pairs have models" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 4: SAT/UNSAT decisions across the configuration grid.
Outcome configuration_invariance() {
  Outcome o;
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(MACE4_FIXTURE_DIR)) {
    if (entry.is_regular_file() && entry.path().extension() == ".in") {
      names.push_back(entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());
  int runs = 0, sat = 0, unsat = 0;
  for (const auto& name : names) {
    auto t = load_theory(fixture(name));
    for (int n = 2; n <= 5; ++n) {
      int decision = -1;
      for (int order = 0; order <= 2; ++order) {
        for (int measure = 0; measure <= 4; ++measure) {
          for (bool lnh : {true, false}) {
            for (bool negprop : {true, false}) {
              EngineConfig engine;
              engine.negprop = negprop;
              auto r = testing::run_engine(t, n, SearchConfig{order, measure, lnh}, engine, 1);
              const int d = r.models.empty() ? 0 : 1;
              ++runs;
              if (decision < 0) decision = d;
              if (d != decision) {
                o.pass = false;
                o.detail += name + " n=" + std::to_string(n) + " order=" + std::to_string(order) +
                            " measure=" + std::to_string(measure) + " lnh=" + std::to_string(lnh) +
                            " negprop=" + std::to_string(negprop) + " differs; ";
              }
            }
          }
        }
      }
      (decision ? sat : unsat)++;
    }
  }
  if (names.size() < 10) o.pass = false;
  o.detail = std::to_string(names.size()) + " theories, " + std::to_string(runs) + " runs, " +
             std::to_string(sat) + " SAT and " + std::to_string(unsat) + " UNSAT (theory, size) pairs" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 5: exit-code matrix.
Outcome exit_codes() {
  Outcome o;
  struct Case {
    const char* file;
    std::vector<std::string> args;
    int expected;
  };
  const Case cases[] = {
      {"exit/code0_group.in", {}, 0},
      {"exit/code1_bad_element.in", {}, 1},
      {"exit/code2_commutative.in", {"-N4"}, 2},
      {"exit/code3_all_involutions.in", {}, 3},
      {"exit/code4_quasigroups_timeout.in", {}, 4},
      {"exit/code5_no_time.in", {}, 5},
  };
  for (const auto& c : cases) {
    auto r = testing::run_driver(fixture(c.file), c.args);
    o.detail += std::to_string(r.exit_code) + " ";
    if (r.exit_code != c.expected) o.pass = false;
  }
  o.detail = "codes " + o.detail + "(expected 0 1 2 3 4 5)";
  return o;
}

// 6: each negative-propagation example fires exactly one derived elimination.
Outcome negprop_micro_states() {
  Outcome o;
  struct Case {
    const char* clause;
    bool assign;  // assign the cell, otherwise eliminate the value
    const char* symbol;
    std::vector<int> args;
    int value;
    int inner_arg;  // argument of g
    int excluded;   // value of g(inner_arg) that must be eliminated
  };
  const Case cases[] = {
      {"f(2,g(5)) != 4.", true, "f", {2, 3}, 4, 5, 3},
      {"f(2,g(5)) = 4.", false, "f", {2, 3}, 4, 5, 3},
      {"~P(3,g(5)).", true, "P", {3, 4}, 1, 5, 4},
  };
  for (const auto& c : cases) {
    auto t = load_theory(std::string("clauses(t).\n") + c.clause + "\nend_of_list.\n");
    State s(t.clauses, t.signature, 6);
    const int cell = s.cell_id(s.find_table(c.symbol, static_cast<int>(c.args.size())), c.args);
    const int g = s.cell_id(s.find_table("g", 1), {c.inner_arg});
    const auto before = s.stats().negprop_derived;
    const bool ok = c.assign ? s.assign(cell, c.value) : s.eliminate(cell, c.value);
    const auto derived = s.stats().negprop_derived - before;
    const bool hit = ok && derived == 1 && !s.possible(g, c.excluded);
    o.pass = o.pass && hit;
    o.detail += std::string(c.clause) + " derived " + std::to_string(derived) + "; ";
  }
  return o;
}

// 7: ground instance counts.
Outcome instance_counts() {
  Outcome o;
  std::mt19937 rng(77);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const char* vars[] = {"x", "y", "z", "u"};
  for (int i = 0; i < 20; ++i) {
    const int v = uni(0, 4);
    const int n = uni(1, 4);
    std::string lhs = "f(", rhs = "g(";
    for (int k = 0; k < 4; ++k) {
      lhs += std::string(k ? "," : "") + (k < v ? vars[k] : "0");
      rhs += std::string(k ? "," : "") + (k < v ? vars[v - 1 - k] : "0");
    }
    const std::string clause = lhs + ") = " + rhs + ") | P(" + (v ? vars[0] : "0") + ")";
    auto t = load_theory("clauses(t).\n" + clause + ".\nend_of_list.\n");
    State s(t.clauses, t.signature, n);
    std::size_t expected = 1;
    for (int k = 0; k < v; ++k) expected *= static_cast<std::size_t>(n);
    const auto got = s.instances_per_clause().at(0);
    if (got != expected) {
      o.pass = false;
      o.detail += clause + " at n=" + std::to_string(n) + ": " + std::to_string(got) + "; ";
    }
  }
  o.detail = "20 clause/size pairs" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 8: trail exactness.
Outcome trail_exactness() {
  Outcome o;
  auto t = load_theory(fixture("ol.in"));
  State s(t.clauses, t.signature, 5);
  std::mt19937 rng(8);
  int mismatches = 0, contradictions = 0;
  for (int cycle = 0; cycle < 1000; ++cycle) {
    const auto mark = s.mark();
    const auto before = s.fingerprint();
    const int steps = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < steps; ++k) {
      std::vector<int> open;
      for (int c = 0; c < s.num_cells(); ++c) {
        if (!s.is_set(c)) open.push_back(c);
      }
      if (open.empty()) break;
      const int c = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      const int v = std::uniform_int_distribution<int>(0, s.range(c) - 1)(rng);
      if (!((rng() & 3) ? s.assign(c, v) : s.eliminate(c, v))) {
        ++contradictions;
        break;
      }
    }
    s.undo(mark);
    if (s.fingerprint() != before) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = "1000 cycles, " + std::to_string(contradictions) + " ended in contradiction, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

// 9: parser and portable-format round trips.
Outcome round_trips() {
  Outcome o;
  testing::TermGenerator gen(9);
  const OpTable ops = OpTable::standard();
  int term_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.term(gen.uniform(0, 5));
    try {
      if (!(parse_term(print_term(t, ops), ops) == t)) ++term_failures;
    } catch (const std::exception&) {
      ++term_failures;
    }
  }
  std::mt19937 rng(10);
  int interp_failures = 0;
  for (int i = 0; i < 200; ++i) {
    Interpretation m = testing::random_interpretation(rng);
    try {
      auto back = parse_portable(print_portable(m));
      if (back.size() != 1 || !(back[0] == m)) ++interp_failures;
    } catch (const std::exception&) {
      ++interp_failures;
    }
  }
  o.pass = term_failures == 0 && interp_failures == 0;
  o.detail = "terms " + std::to_string(1000 - term_failures) + "/1000, interpretations " +
             std::to_string(200 - interp_failures) + "/200";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"1 group example", group_example},
      {"2 ortholattice pipeline", ortholattice_pipeline},
      {"3 oracle equivalence", oracle_equivalence},
      {"4 configuration invariance", configuration_invariance},
      {"5 exit-code matrix", exit_codes},
      {"6 negative propagation micro-states", negprop_micro_states},
      {"7 instance counting", instance_counts},
      {"8 trail exactness", trail_exactness},
      {"9 round trips", round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS " : "FAIL ") << c.name << ": " << r.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9" << std::endl;
  return failed ? 1 : 0;
}
