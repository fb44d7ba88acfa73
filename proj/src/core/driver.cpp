#include "driver.hpp"

#include <algorithm>
#include <cstdio>
#include <new>
#include <sstream>

#include "clausify.hpp"
#include "errors.hpp"
#include "interp.hpp"
#include "memory.hpp"
#include "search.hpp"
#include "state.hpp"

namespace mace4 {

namespace {

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

std::string echo_input(const InputProgram& program, const Options& options) {
  std::ostringstream out;
  for (const auto& w : program.warnings) out << "% WARNING: " << w << "\n";
  for (const auto& d : program.ops.nonstandard_declarations()) out << d << "\n";
  out << options.echo();
  for (const auto& list : program.lists) {
    out << "\n" << (list.kind == ListKind::Clauses ? "clauses(" : "formulas(") << list.name
        << ").\n";
    for (const auto& t : list.terms) out << print_term(t, program.ops) << ".\n";
    out << "end_of_list.\n";
  }
  return out.str();
}

}  // namespace

RunSummary run_search(const InputProgram& program, const Options& options, const OutputSink& out) {
  RunSummary summary;
  const double start = cpu_seconds();
  try {
    out(echo_input(program, options));

    VariableRule rule{options.flag("prolog_style_variables")};
    Theory theory = build_theory(program, rule);
    if (options.flag("verbose") && !theory.from_formula.empty()) {
      std::string text = "\n% Clauses from formulas:\n";
      for (std::size_t i : theory.from_formula) {
        text += "%   " + print_clause(theory.clauses[i], program.ops) + "\n";
      }
      out(text);
    }
    const Signature signature = collect_signature(theory.clauses);

    EngineConfig engine;
    engine.negprop = options.flag("negprop");
    engine.neg_assign = options.flag("neg_assign");
    engine.neg_assign_near = options.flag("neg_assign_near");
    engine.neg_elim = options.flag("neg_elim");
    engine.neg_elim_near = options.flag("neg_elim_near");

    SearchConfig config;
    config.order = options.param("selection_order");
    config.measure = options.param("selection_measure");
    config.lnh = options.flag("lnh");

    const long long max_models = options.param("max_models");
    const int max_seconds = options.param("max_seconds");
    const bool portable = options.flag("print_models_portable");
    const bool standard = options.flag("print_models") && !portable;
    const bool verbose = options.flag("verbose");
    const bool tracing = options.flag("trace");

    MemoryGuard memory(options.param("max_megs"));
    const int first = options.param("domain_size");
    const int last = std::max(first, options.param("iterate_up_to"));
    long long models = 0;
    bool timed_out = false;
    bool limit_reached = false;

    for (int n = first; n <= last; ++n) {
      summary.last_size = n;
      out("\n% DOMAIN SIZE " + std::to_string(n) + "\n");
      const double size_start = cpu_seconds();
      State state(theory.clauses, signature, n, engine, &memory);
      if (tracing) state.set_trace([&out](const std::string& s) { out("% trace: " + s + "\n"); });
      if (verbose) {
        std::string text = "% Initial partial model:\n";
        std::istringstream lines(state.describe_partial());
        for (std::string line; std::getline(lines, line);) text += "%   " + line + "\n";
        if (!state.consistent()) text += "%   (contradiction before search)\n";
        out(text);
      }

      SearchLimits limits;
      limits.max_models = max_models < 0 ? -1 : max_models - models;
      limits.max_seconds = max_seconds;
      limits.start_clock = start;
      Search search(state, config, limits, [&](const Interpretation& interp) {
        ++models;
        if (portable) {
          out(print_portable(interp) + "\n");
        } else if (standard) {
          out("\n- Model " + std::to_string(models) + " at " +
              seconds_text(cpu_seconds() - start) + " seconds -\n" + print_standard(interp));
        }
      });
      if (tracing) search.set_trace([&out](const std::string& s) { out("% trace: " + s + "\n"); });
      const SearchStatus status = search.run();

      std::string note = "% Size " + std::to_string(n) + ": " +
                         std::to_string(search.stats().models) + " model(s), ";
      note += status == SearchStatus::Exhausted    ? "search complete"
              : status == SearchStatus::ModelLimit ? "max_models reached"
                                                   : "time limit reached";
      note += ".\n";
      if (verbose) {
        const auto& es = state.stats();
        note += "%   selections=" + std::to_string(search.stats().selections) +
                ", assignments=" + std::to_string(es.assignments) +
                ", eliminations=" + std::to_string(es.eliminations) +
                ", negprop=" + std::to_string(es.negprop_derived) +
                ", backtracks=" + std::to_string(search.stats().backtracks) +
                ", memory=" + std::to_string(memory.peak() / 1024) + "K" +
                ", seconds=" + seconds_text(cpu_seconds() - size_start) + "\n";
      }
      out(note);
      if (status == SearchStatus::TimeLimit) {
        timed_out = true;
        break;
      }
      if (status == SearchStatus::ModelLimit) {
        limit_reached = true;
        break;
      }
    }

    summary.models = models;
    if (limit_reached) {
      summary.exit_code = kExitMaxModels;
    } else if (timed_out) {
      summary.exit_code = models > 0 ? kExitTimeSomeModels : kExitTimeNoModels;
    } else {
      summary.exit_code = models > 0 ? kExitAllModels : kExitNoModels;
    }
  } catch (const MemoryLimitExceeded& e) {
    summary.exit_code = kExitFatal;
    summary.error = e.what();
  } catch (const std::bad_alloc&) {
    summary.exit_code = kExitFatal;
    summary.error = "out of memory";
  } catch (const std::exception& e) {
    summary.exit_code = kExitFatal;
    summary.error = e.what();
  }

  static const char* reasons[] = {"max_models reached", "fatal error",
                                  "no models",          "search complete",
                                  "time limit",         "time limit, no models"};
  std::string tail = "\n% Exit " + std::to_string(summary.exit_code) + " (" +
                     reasons[summary.exit_code] + "), " + std::to_string(summary.models) +
                     " model(s), " + seconds_text(cpu_seconds() - start) + " seconds.\n";
  if (!summary.error.empty()) tail = "\n% Fatal error: " + summary.error + tail;
  out(tail);
  return summary;
}

RunSummary run_text(std::string_view text, const CommandLine& command_line, const OutputSink& out) {
  InputProgram program;
  Options options;
  try {
    program = parse_input(text, command_line.compatibility);
    apply_commands(program, options);
    command_line.apply_to(options);
  } catch (const std::exception& e) {
    RunSummary s;
    s.exit_code = kExitFatal;
    s.error = e.what();
    out("% Fatal error: " + s.error + "\n\n% Exit 1 (fatal error).\n");
    return s;
  }
  return run_search(program, options, out);
}

}  // namespace mace4
