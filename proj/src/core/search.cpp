#include "search.hpp"

#include <algorithm>
#include <ctime>

namespace mace4 {

double cpu_seconds() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

std::vector<int> candidate_cells(const State& state, int order) {
  std::vector<int> out;
  const int cells = state.num_cells();
  if (order == 2) {
    const int mc = state.max_constrained();
    for (int c = 0; c < cells; ++c) {
      if (!state.is_set(c) && state.max_index(c) <= mc) out.push_back(c);
    }
    if (!out.empty()) return out;
    order = 1;
  }
  if (order == 1) {
    int best = -1;
    for (int c = 0; c < cells; ++c) {
      if (state.is_set(c)) continue;
      if (best < 0 || state.max_index(c) < best) best = state.max_index(c);
    }
    for (int c = 0; c < cells; ++c) {
      if (!state.is_set(c) && state.max_index(c) == best) out.push_back(c);
    }
    return out;
  }
  for (int c = 0; c < cells; ++c) {
    if (!state.is_set(c)) out.push_back(c);
  }
  return out;
}

std::vector<int> values_to_consider(const State& state, int cell, bool lnh) {
  int last = state.range(cell) - 1;
  if (lnh && !state.is_relation_cell(cell)) {
    const int bound = std::max(state.max_constrained(), state.index_bound(cell)) + 1;
    last = std::min(bound, last);
  }
  std::vector<int> out;
  for (int v = 0; v <= last; ++v) {
    if (state.possible(cell, v)) out.push_back(v);
  }
  return out;
}

Search::Search(State& state, SearchConfig config, SearchLimits limits, ModelSink on_model)
    : state_(state), config_(config), limits_(limits), on_model_(std::move(on_model)) {}

bool Search::out_of_time() const {
  return limits_.max_seconds >= 0 && cpu_seconds() - limits_.start_clock >= limits_.max_seconds;
}

int Search::lookahead_score(int cell) {
  const EngineStats saved = state_.stats();
  int score = 0;
  for (int v : values_to_consider(state_, cell, config_.lnh)) {
    const std::size_t mark = state_.mark();
    const auto before = state_.stats().assignments;
    const bool ok = state_.assign(cell, v);
    if (config_.measure == 2) {
      score += static_cast<int>(state_.stats().assignments - before);
    } else if (!ok) {
      ++score;
    }
    state_.undo(mark);
  }
  state_.stats() = saved;
  return score;
}

int Search::select_cell() {
  const auto candidates = candidate_cells(state_, config_.order);
  if (candidates.empty()) return -1;
  switch (config_.measure) {
    case 1: {
      int best = candidates[0];
      int best_score = -1;
      for (int c : candidates) {
        const int s = state_.live_occurrences(c);
        if (s > best_score) {
          best = c;
          best_score = s;
        }
      }
      return best;
    }
    case 2:
    case 3: {
      int best = candidates[0];
      int best_score = -1;
      for (int c : candidates) {
        const int s = lookahead_score(c);
        if (s > best_score) {
          best = c;
          best_score = s;
        }
      }
      return best;
    }
    case 4: {
      int best = candidates[0];
      int best_score = state_.num_possible(best);
      for (int c : candidates) {
        const int s = state_.num_possible(c);
        if (s < best_score) {
          best = c;
          best_score = s;
        }
      }
      return best;
    }
    default:
      return candidates[0];
  }
}

SearchStatus Search::run() {
  status_ = SearchStatus::Exhausted;
  if (state_.consistent()) recurse();
  return status_;
}

// Returns false when the search must stop (model or time limit).
bool Search::recurse() {
  if (out_of_time()) {
    status_ = SearchStatus::TimeLimit;
    return false;
  }
  state_.account_memory();
  const int cell = select_cell();
  if (cell < 0) {
    ++stats_.models;
    on_model_(state_.to_interpretation());
    if (limits_.max_models >= 0 && static_cast<long long>(stats_.models) >= limits_.max_models) {
      status_ = SearchStatus::ModelLimit;
      return false;
    }
    return true;
  }
  ++stats_.selections;
  for (int v : values_to_consider(state_, cell, config_.lnh)) {
    const std::size_t mark = state_.mark();
    state_.raise_max_constrained(state_.index_bound(cell));
    if (!state_.is_relation_cell(cell)) state_.raise_max_constrained(v);
    if (trace_) trace_("select " + state_.cell_name(cell) + "=" + std::to_string(v));
    bool keep_going = true;
    if (state_.assign(cell, v)) keep_going = recurse();
    state_.undo(mark);
    if (!keep_going) return false;
    ++stats_.backtracks;
    if (trace_) trace_("backtrack " + state_.cell_name(cell) + "=" + std::to_string(v));
  }
  return true;
}

}  // namespace mace4
