#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "input.hpp"
#include "options.hpp"

namespace mace4 {

enum ExitCode : int {
  kExitMaxModels = 0,
  kExitFatal = 1,
  kExitNoModels = 2,
  kExitAllModels = 3,
  kExitTimeSomeModels = 4,
  kExitTimeNoModels = 5,
};

using OutputSink = std::function<void(std::string_view)>;

struct RunSummary {
  int exit_code = kExitFatal;
  long long models = 0;
  int last_size = 0;
  std::string error;  // set when exit_code is kExitFatal
};

// Searches domain sizes domain_size..max(domain_size, iterate_up_to) and
// writes the echoed input, models and per-size notes to `out`. Errors are
// reported in the summary rather than thrown.
RunSummary run_search(const InputProgram& program, const Options& options, const OutputSink& out);

// Parses `text`, applies its commands and then `command_line`, and runs.
RunSummary run_text(std::string_view text, const CommandLine& command_line, const OutputSink& out);

}  // namespace mace4
