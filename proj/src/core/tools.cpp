#include "tools.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "input.hpp"
#include "oracle.hpp"
#include "options.hpp"

namespace mace4 {

std::optional<FilterKind> parse_filter_kind(std::string_view s) {
  if (s == "true_in_all") return FilterKind::TrueInAll;
  if (s == "true_in_some") return FilterKind::TrueInSome;
  if (s == "false_in_all") return FilterKind::FalseInAll;
  if (s == "false_in_some") return FilterKind::FalseInSome;
  return std::nullopt;
}

std::vector<std::string> extract_interpretations(std::string_view text) {
  static constexpr std::string_view kHead = "interpretation(";
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = text.find(kHead, pos)) != std::string_view::npos) {
    const bool word_start =
        pos == 0 || !(std::isalnum(static_cast<unsigned char>(text[pos - 1])) || text[pos - 1] == '_');
    if (!word_start) {
      pos += kHead.size();
      continue;
    }
    int depth = 0;
    std::size_t i = pos + kHead.size() - 1;
    for (; i < text.size(); ++i) {
      if (text[i] == '(' || text[i] == '[') ++depth;
      if (text[i] == ')' || text[i] == ']') {
        if (--depth == 0) break;
      }
    }
    if (i >= text.size()) break;
    std::size_t end = i + 1;
    while (end < text.size() && (text[end] == ' ' || text[end] == '\t')) ++end;
    if (end < text.size() && text[end] == '.') {
      out.emplace_back(text.substr(pos, end + 1 - pos));
      pos = end + 1;
    } else {
      pos = i + 1;
    }
  }
  return out;
}

std::vector<Interpretation> read_interpretation_stream(std::string_view text) {
  std::vector<Interpretation> out;
  for (const auto& item : extract_interpretations(text)) {
    auto parsed = parse_portable(item);
    out.insert(out.end(), parsed.begin(), parsed.end());
  }
  return out;
}

std::string get_interps(std::string_view text) {
  std::string out;
  for (const auto& item : extract_interpretations(text)) out += item + "\n";
  return out;
}

IsofilterResult isofilter(const std::vector<Interpretation>& stream) {
  const auto t0 = std::chrono::steady_clock::now();
  IsofilterResult r;
  r.input = stream.size();
  for (const auto& candidate : stream) {
    bool duplicate = false;
    for (const auto& k : r.kept) {
      if (k.size == candidate.size && same_signature(k, candidate) &&
          isomorphic(k, candidate, &r.stats)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) r.kept.push_back(candidate);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string isofilter_summary(const IsofilterResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return "isofilter: input=" + std::to_string(r.input) + ", kept=" + std::to_string(r.kept.size()) +
         ", checks=" + std::to_string(r.stats.checks) + ", perms=" + std::to_string(r.stats.perms) +
         ", " + secs + " sec.";
}

std::string isofilter_text(std::string_view stream) {
  auto r = isofilter(read_interpretation_stream(stream));
  std::string out;
  for (const auto& k : r.kept) out += print_portable(k) + "\n";
  out += isofilter_summary(r) + "\n";
  return out;
}

InterpretationFile read_interpretation_file(std::string_view text) {
  InterpretationFile f;
  auto tokens = tokenize(text);
  TermReader r(tokens, f.ops);
  std::size_t body = text.size();
  // Op commands come first; everything after them holds the interpretations.
  while (r.peek().is(TokenKind::Name, "op") && r.peek(1).is_punct('(')) read_op_command(r, f.ops);
  if (!r.at_end()) {
    const Token& t = r.peek();
    std::size_t offset = 0;
    int line = 1;
    while (line < t.line && offset < text.size()) {
      if (text[offset++] == '\n') ++line;
    }
    body = offset + static_cast<std::size_t>(t.column - 1);
  }
  if (body < text.size()) f.interps = parse_portable(text.substr(body));
  return f;
}

std::vector<ClauseItem> read_clause_stream(std::string_view text, OpTable& ops) {
  auto tokens = tokenize(text);
  TermReader r(tokens, ops);
  std::vector<ClauseItem> out;
  bool formulas = false;
  const VariableRule rule{};
  while (!r.at_end()) {
    const Token& t = r.peek();
    if (t.is(TokenKind::Name, "op") && r.peek(1).is_punct('(')) {
      read_op_command(r, ops);
      continue;
    }
    if ((t.is(TokenKind::Name, "clauses") || t.is(TokenKind::Name, "formulas")) &&
        r.peek(1).is_punct('(') && r.peek(2).is_symbolic_name() && r.peek(3).is_punct(')') &&
        r.peek(4).is_punct('.')) {
      formulas = t.text == "formulas";
      for (int i = 0; i < 5; ++i) r.next();
      continue;
    }
    if (t.is(TokenKind::Name, "end_of_list") && r.peek(1).is_punct('.')) {
      r.next();
      r.next();
      formulas = false;
      continue;
    }
    ClauseItem item;
    item.source = r.read_statement();
    if (formulas) {
      std::set<std::string> symbols;
      collect_symbols(item.source, symbols);
      Clausifier c(rule, symbols, [&ops](const std::string& s) { return ops.is_operator(s); });
      item.clauses = c.clausify(item.source);
      item.formula = true;
    } else {
      item.clauses.push_back(term_to_clause(item.source, rule));
    }
    out.push_back(std::move(item));
  }
  return out;
}

bool true_in(const Interpretation& interp, const ClauseItem& item) {
  if (item.formula) return evaluate_formula(interp, item.source);
  for (const auto& c : item.clauses) {
    if (!evaluate_clause(interp, c)) return false;
  }
  return true;
}

std::string modfilter(std::string_view interps_file, FilterKind kind, std::string_view clauses) {
  auto file = read_interpretation_file(interps_file);
  std::string out;
  for (const auto& item : read_clause_stream(clauses, file.ops)) {
    std::size_t count = 0;
    for (const auto& i : file.interps) count += true_in(i, item) ? 1 : 0;
    const std::size_t total = file.interps.size();
    bool admit = false;
    switch (kind) {
      case FilterKind::TrueInAll: admit = count == total; break;
      case FilterKind::TrueInSome: admit = count > 0; break;
      case FilterKind::FalseInAll: admit = count == 0; break;
      case FilterKind::FalseInSome: admit = count < total; break;
    }
    if (admit) out += print_term(item.source, file.ops) + ".\n";
  }
  return out;
}

std::string modtester(std::string_view interps_file, std::string_view clauses) {
  auto file = read_interpretation_file(interps_file);
  std::string out;
  for (const auto& item : read_clause_stream(clauses, file.ops)) {
    std::string list;
    for (std::size_t i = 0; i < file.interps.size(); ++i) {
      if (true_in(file.interps[i], item)) list += (list.empty() ? "" : ",") + std::to_string(i + 1);
    }
    out += print_term(item.source, file.ops) + ". % [" + list + "]\n";
  }
  return out;
}

std::string interpfilter(std::string_view clauses_file, bool models, std::string_view stream) {
  OpTable ops = OpTable::standard();
  auto items = read_clause_stream(clauses_file, ops);
  std::string out;
  for (const auto& interp : read_interpretation_stream(stream)) {
    bool is_model = true;
    for (const auto& item : items) {
      if (!true_in(interp, item)) {
        is_model = false;
        break;
      }
    }
    if (is_model == models) out += print_portable(interp) + "\n";
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kToolUsage =
    "usage:\n"
    "  get-interps < mace4-output\n"
    "  isofilter < interpretations\n"
    "  modfilter interps-file {true_in_all|true_in_some|false_in_all|false_in_some} < clauses\n"
    "  modtester interps-file < clauses\n"
    "  interpfilter clauses-file {models|nonmodels} < interpretations\n"
    "  oracle-count domain-size < input\n";

std::string canonical(std::string name) {
  for (auto& c : name) {
    if (c == '_') c = '-';
  }
  return name;
}

}  // namespace

bool is_tool_name(const std::string& raw) {
  const std::string name = canonical(raw);
  return name == "get-interps" || name == "isofilter" || name == "modfilter" ||
         name == "modtester" || name == "interpfilter" || name == "oracle-count" || name == "help";
}

int run_tool(const std::string& raw, const std::vector<std::string>& args, std::string_view input,
             std::string& output, std::string& error) {
  const std::string name = canonical(raw);
  try {
    if (name == "help") {
      output = command_line_help();
      return 0;
    }
    if (name == "get-interps") {
      output = get_interps(input);
      return 0;
    }
    if (name == "isofilter") {
      output = isofilter_text(input);
      return 0;
    }
    if (name == "modfilter") {
      if (args.size() != 2) throw UsageError(kToolUsage);
      auto kind = parse_filter_kind(args[1]);
      if (!kind) throw UsageError("unknown filter " + args[1] + "\n" + kToolUsage);
      output = modfilter(read_file(args[0]), *kind, input);
      return 0;
    }
    if (name == "modtester") {
      if (args.size() != 1) throw UsageError(kToolUsage);
      output = modtester(read_file(args[0]), input);
      return 0;
    }
    if (name == "interpfilter") {
      if (args.size() != 2 || (args[1] != "models" && args[1] != "nonmodels")) {
        throw UsageError(kToolUsage);
      }
      output = interpfilter(read_file(args[0]), args[1] == "models", input);
      return 0;
    }
    if (name == "oracle-count") {
      if (args.size() != 1) throw UsageError(kToolUsage);
      const int n = std::stoi(args[0]);
      InputProgram program = parse_input(input, true);
      Options options;
      apply_commands(program, options);
      Theory theory = build_theory(program, VariableRule{options.flag("prolog_style_variables")});
      auto result = enumerate_models(collect_signature(theory.clauses), n, theory.clauses, false);
      if (result.refused) throw FatalError("interpretation space too large for the oracle");
      output = std::to_string(result.count) + "\n";
      return 0;
    }
    throw UsageError("unknown subcommand " + raw + "\n" + kToolUsage);
  } catch (const std::exception& e) {
    error = e.what();
    return 1;
  }
}

}  // namespace mace4
