#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clausify.hpp"
#include "interp.hpp"
#include "syntax.hpp"

namespace mace4 {

enum class FilterKind { TrueInAll, TrueInSome, FalseInAll, FalseInSome };
std::optional<FilterKind> parse_filter_kind(std::string_view s);

// The `interpretation(...).` items embedded in arbitrary text, verbatim.
std::vector<std::string> extract_interpretations(std::string_view text);

// Parses the items found by extract_interpretations.
std::vector<Interpretation> read_interpretation_stream(std::string_view text);

std::string get_interps(std::string_view text);

struct IsofilterResult {
  std::vector<Interpretation> kept;
  std::size_t input = 0;
  IsoStats stats;
  double seconds = 0;
};
IsofilterResult isofilter(const std::vector<Interpretation>& stream);
std::string isofilter_summary(const IsofilterResult& r);
// Kept interpretations in portable form followed by the summary line.
std::string isofilter_text(std::string_view stream);

// An interpretations file: leading op commands, an optional
// terms(...)/end_of_list. wrapper, and portable items.
struct InterpretationFile {
  OpTable ops = OpTable::standard();
  std::vector<Interpretation> interps;
};
InterpretationFile read_interpretation_file(std::string_view text);

// A stream of clauses: bare clauses, op commands, and optional
// clauses(...)/formulas(...) list headers with end_of_list. terminators.
struct ClauseItem {
  Term source;
  bool formula = false;         // evaluated directly rather than through its clauses
  std::vector<Clause> clauses;  // more than one only for formulas
};
std::vector<ClauseItem> read_clause_stream(std::string_view text, OpTable& ops);

bool true_in(const Interpretation& interp, const ClauseItem& item);

std::string modfilter(std::string_view interps_file, FilterKind kind, std::string_view clauses);
std::string modtester(std::string_view interps_file, std::string_view clauses);
std::string interpfilter(std::string_view clauses_file, bool models, std::string_view stream);

// Runs a subcommand by name with its positional arguments, reading `input`
// and writing to `output`. Returns the process exit code.
int run_tool(const std::string& name, const std::vector<std::string>& args, std::string_view input,
             std::string& output, std::string& error);
bool is_tool_name(const std::string& name);

}  // namespace mace4
