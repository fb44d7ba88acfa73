#include "options.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "errors.hpp"

namespace mace4 {

namespace {

constexpr int kUnbounded = 1 << 30;

constexpr std::array<FlagSpec, 11> kFlags{{
    {"print_models", true, 'p', "print models in standard format"},
    {"print_models_portable", false, 'P', "print models in portable format"},
    {"prolog_style_variables", false, 'V', "variables start with A-Z"},
    {"verbose", false, 'v', "initial partial model and statistics per size"},
    {"lnh", true, 'L', "least number heuristic"},
    {"negprop", true, 'G', "negative propagation"},
    {"neg_assign", true, 'A', "negprop triggered by assignments"},
    {"neg_assign_near", true, 'B', "negprop triggered by near assignments"},
    {"neg_elim", true, 'E', "negprop triggered by eliminations"},
    {"neg_elim_near", true, 'F', "negprop triggered by near eliminations"},
    {"trace", false, 'T', "trace assignments and backtracking"},
}};

constexpr std::array<ParamSpec, 7> kParams{{
    {"domain_size", 2, 1, 1000, 'n', "starting domain size"},
    {"iterate_up_to", 0, -1, 1000, 'N', "last domain size"},
    {"max_models", 1, -1, kUnbounded, 'm', "stop after this many models (-1: no limit)"},
    {"max_seconds", -1, -1, kUnbounded, 't', "CPU time limit (-1: no limit)"},
    {"max_megs", 192, -1, kUnbounded, 'b', "memory limit in megabytes (-1: no limit)"},
    {"selection_order", 2, 0, 2, 'O', "0 linear, 1 concentric, 2 concentric band"},
    {"selection_measure", 4, 0, 4, 'M',
     "0 first, 1 occurrences, 2 propagations, 3 contradictions, 4 fewest values"},
}};

template <typename Spec, std::size_t N>
std::ptrdiff_t index_of(const std::array<Spec, N>& specs, std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (specs[i].name == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::span<const FlagSpec> flag_registry() { return kFlags; }
std::span<const ParamSpec> param_registry() { return kParams; }

const FlagSpec* find_flag(std::string_view name) {
  auto i = index_of(kFlags, name);
  return i < 0 ? nullptr : &kFlags[static_cast<std::size_t>(i)];
}

const ParamSpec* find_param(std::string_view name) {
  auto i = index_of(kParams, name);
  return i < 0 ? nullptr : &kParams[static_cast<std::size_t>(i)];
}

Options::Options() {
  for (const auto& f : kFlags) flags_.push_back(f.default_value);
  for (const auto& p : kParams) params_.push_back(p.default_value);
}

bool Options::flag(std::string_view name) const {
  auto i = index_of(kFlags, name);
  if (i < 0) throw UsageError("unknown flag " + std::string(name));
  return flags_[static_cast<std::size_t>(i)];
}

int Options::param(std::string_view name) const {
  auto i = index_of(kParams, name);
  if (i < 0) throw UsageError("unknown parameter " + std::string(name));
  return params_[static_cast<std::size_t>(i)];
}

void Options::set_flag(std::string_view name, bool value) {
  auto i = index_of(kFlags, name);
  if (i < 0) throw UsageError("unknown flag " + std::string(name));
  flags_[static_cast<std::size_t>(i)] = value;
}

void Options::assign(std::string_view name, int value) {
  auto i = index_of(kParams, name);
  if (i < 0) throw UsageError("unknown parameter " + std::string(name));
  const auto& spec = kParams[static_cast<std::size_t>(i)];
  if (value < spec.min_value || value > spec.max_value) {
    throw UsageError("value " + std::to_string(value) + " for " + std::string(name) +
                     " is out of range");
  }
  params_[static_cast<std::size_t>(i)] = value;
}

std::string Options::echo() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < kFlags.size(); ++i) {
    out << (flags_[i] ? "set(" : "clear(") << kFlags[i].name << ").\n";
  }
  for (std::size_t i = 0; i < kParams.size(); ++i) {
    out << "assign(" << kParams[i].name << ", " << params_[i] << ").\n";
  }
  return out.str();
}

void CommandLine::apply_to(Options& options) const {
  for (const auto& [name, value] : flags) options.set_flag(name, value);
  for (const auto& [name, value] : params) options.assign(name, value);
}

CommandLine parse_command_line(std::span<const std::string> args) {
  CommandLine cl;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.size() < 2 || arg[0] != '-') throw UsageError("unexpected argument " + arg);
    const char key = arg[1];
    const std::string attached = arg.substr(2);
    if (key == 'c' && attached.empty()) {
      cl.compatibility = true;
      continue;
    }
    bool matched = false;
    for (const auto& p : kParams) {
      if (p.short_name != key) continue;
      std::string text = attached;
      if (text.empty()) {
        if (i + 1 >= args.size()) throw UsageError("missing value for -" + std::string(1, key));
        text = args[++i];
      }
      auto v = to_int(text);
      if (!v) throw UsageError("bad integer '" + text + "' for -" + std::string(1, key));
      cl.params.emplace_back(std::string(p.name), *v);
      matched = true;
      break;
    }
    if (matched) continue;
    for (const auto& f : kFlags) {
      if (f.short_name != key) continue;
      bool value = true;
      if (attached == "0") {
        value = false;
      } else if (!attached.empty() && attached != "1") {
        throw UsageError("flag -" + std::string(1, key) + " takes 0 or 1");
      }
      cl.flags.emplace_back(std::string(f.name), value);
      matched = true;
      break;
    }
    if (!matched) throw UsageError("unknown option " + arg);
  }
  return cl;
}

std::string command_line_help() {
  std::ostringstream out;
  out << "usage: mace4 [options] < input > output\n"
      << "       mace4 help\n"
      << "       mace4 get-interps < output\n"
      << "       mace4 isofilter < interpretations\n"
      << "       mace4 modfilter interps-file {true_in_all|true_in_some|false_in_all|false_in_some}"
         " < clauses\n"
      << "       mace4 modtester interps-file < clauses\n"
      << "       mace4 interpfilter clauses-file {models|nonmodels} < interpretations\n\n"
      << "options (command line overrides the input file):\n";
  for (const auto& p : kParams) {
    out << "  -" << p.short_name << " n   assign(" << p.name << ", n).   % default " << p.default_value
        << "; " << p.help << "\n";
  }
  for (const auto& f : kFlags) {
    out << "  -" << f.short_name << "[0|1]  set/clear(" << f.name << ").   % default "
        << (f.default_value ? "set" : "clear") << "; " << f.help << "\n";
  }
  out << "  -c      ignore unrecognized set, clear, assign commands and lists\n";
  return out.str();
}

}  // namespace mace4
