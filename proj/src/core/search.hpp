#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "state.hpp"

namespace mace4 {

struct SearchConfig {
  int order = 2;    // 0 all open cells, 1 concentric, 2 concentric band
  int measure = 4;  // 0 first, 1 occurrences, 2 propagations, 3 contradictions, 4 fewest values
  bool lnh = true;
};

struct SearchLimits {
  long long max_models = 1;  // -1: no limit
  double max_seconds = -1;   // CPU seconds since `start_clock`; negative: no limit
  double start_clock = 0;    // value of cpu_seconds() at the start of the run
};

enum class SearchStatus { Exhausted, ModelLimit, TimeLimit };

struct SearchStats {
  std::uint64_t selections = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t models = 0;
};

double cpu_seconds();

// Candidate cells and value ranges; exposed for tests.
std::vector<int> candidate_cells(const State& state, int order);
std::vector<int> values_to_consider(const State& state, int cell, bool lnh);

// Depth-first search over the open cells of `state`. `on_model` receives each
// complete interpretation.
class Search {
 public:
  using ModelSink = std::function<void(const Interpretation&)>;

  Search(State& state, SearchConfig config, SearchLimits limits, ModelSink on_model);

  SearchStatus run();
  int select_cell();

  const SearchStats& stats() const { return stats_; }
  void set_trace(std::function<void(const std::string&)> trace) { trace_ = std::move(trace); }

 private:
  bool recurse();
  bool out_of_time() const;
  int lookahead_score(int cell);

  State& state_;
  SearchConfig config_;
  SearchLimits limits_;
  ModelSink on_model_;
  SearchStats stats_;
  SearchStatus status_ = SearchStatus::Exhausted;
  std::function<void(const std::string&)> trace_;
};

}  // namespace mace4
