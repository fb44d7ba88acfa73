#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mace4 {

struct FlagSpec {
  std::string_view name;
  bool default_value;
  char short_name;
  std::string_view help;
};

struct ParamSpec {
  std::string_view name;
  int default_value;
  int min_value;
  int max_value;
  char short_name;
  std::string_view help;
};

std::span<const FlagSpec> flag_registry();
std::span<const ParamSpec> param_registry();
const FlagSpec* find_flag(std::string_view name);
const ParamSpec* find_param(std::string_view name);

// Effective flag and parameter values. Unlimited limits are -1.
class Options {
 public:
  Options();

  bool flag(std::string_view name) const;
  int param(std::string_view name) const;

  // Throw UsageError on unknown names or out-of-range values.
  void set_flag(std::string_view name, bool value);
  void assign(std::string_view name, int value);

  // set/clear/assign commands for every option, one per line.
  std::string echo() const;

  bool operator==(const Options&) const = default;

 private:
  std::vector<bool> flags_;
  std::vector<int> params_;
};

// Command-line settings, applied after the input file's commands.
struct CommandLine {
  bool compatibility = false;
  std::vector<std::pair<std::string, int>> params;
  std::vector<std::pair<std::string, bool>> flags;

  void apply_to(Options& options) const;
};

// Parses arguments such as "-n8 -m 20 -c -P1". Throws UsageError.
CommandLine parse_command_line(std::span<const std::string> args);

// Text shown by "mace4 help".
std::string command_line_help();

}  // namespace mace4
