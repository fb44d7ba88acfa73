#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clausify.hpp"
#include "interp.hpp"
#include "memory.hpp"

namespace mace4 {

struct EngineConfig {
  bool negprop = true;
  bool neg_assign = true;
  bool neg_assign_near = true;
  bool neg_elim = true;
  bool neg_elim_near = true;
  std::size_t cell_cap = 10'000'000;  // per table
};

struct EngineStats {
  std::uint64_t assignments = 0;     // every cell assignment, including decisions
  std::uint64_t eliminations = 0;
  std::uint64_t negprop_derived = 0; // eliminations produced by the negative rules
  std::uint64_t near_events = 0;
  std::uint64_t rewrites = 0;
  std::uint64_t contradictions = 0;
};

struct TableInfo {
  std::string name;
  int arity = 0;
  bool relation = false;
  int base = 0;  // first cell id
  int size = 0;  // n^arity
};

// Ground clauses, cell tables, propagation queue, complete near-fact index
// and undo trail for one domain size. All arrays are sized during grounding
// and never reallocated afterwards; the trail records raw addresses.
class State {
 public:
  // Grounds `clauses` over {0..n-1} and runs initial propagation. Throws
  // FatalError (element out of range, table too large) or
  // MemoryLimitExceeded.
  State(const std::vector<Clause>& clauses, const Signature& signature, int n,
        const EngineConfig& config = {}, MemoryGuard* memory = nullptr);
  ~State();
  State(const State&) = delete;
  State& operator=(const State&) = delete;

  // False when grounding produced an empty clause or initial propagation
  // found a contradiction.
  bool consistent() const { return consistent_; }

  int domain_size() const { return n_; }
  const std::vector<TableInfo>& tables() const { return tables_; }
  int num_cells() const { return static_cast<int>(value_.size()); }
  int find_table(const std::string& name, int arity) const;
  int cell_id(int table, const std::vector<int>& args) const;
  std::vector<int> cell_args(int cell) const;
  std::string cell_name(int cell) const;

  int value(int cell) const { return value_[static_cast<std::size_t>(cell)]; }
  bool is_set(int cell) const { return value(cell) >= 0; }
  int table_of(int cell) const { return table_of_[static_cast<std::size_t>(cell)]; }
  bool is_relation_cell(int cell) const { return tables_[static_cast<std::size_t>(table_of(cell))].relation; }
  int range(int cell) const { return is_relation_cell(cell) ? 2 : n_; }
  bool possible(int cell, int v) const;
  int num_possible(int cell) const;
  int max_index(int cell) const { return max_index_[static_cast<std::size_t>(cell)]; }
  // -1 for constants, otherwise the largest index.
  int index_bound(int cell) const;
  int live_occurrences(int cell) const;

  int max_constrained() const { return max_constrained_; }
  void raise_max_constrained(int v);

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  // Enqueue and propagate to fixpoint. On false the state is contradictory
  // until the caller undoes to an earlier mark.
  bool assign(int cell, int v);
  bool eliminate(int cell, int v);
  // Injects a near fact table(.., inner, ..) = v (or != v) where the inner
  // cell sits at argument position `pos` and the other arguments are `rest`.
  bool near_fact(bool is_assignment, int table, int pos, const std::vector<int>& rest,
                 int inner_cell, int v);

  // Inner cells recorded under one near-fact key, oldest first.
  std::vector<int> near_index_entries(bool elimination, int table, int v, int pos,
                                      const std::vector<int>& rest) const;

  // Ground store inspection.
  std::size_t num_ground_clauses() const { return clauses_.size(); }
  const std::vector<std::size_t>& instances_per_clause() const { return instances_; }
  bool clause_satisfied(std::size_t i) const { return clauses_[i].satisfied != 0; }
  int clause_active(std::size_t i) const { return clauses_[i].active; }
  // Live clause whose literals are all false (none expected outside a
  // contradiction), or -1.
  long violated_clause() const;
  int last_conflict() const { return last_conflict_; }

  std::uint64_t fingerprint() const;

  bool complete() const;
  Interpretation to_interpretation() const;
  // Partial model: set cells, one table per line.
  std::string describe_partial() const;

  EngineStats& stats() { return stats_; }
  const EngineStats& stats() const { return stats_; }

  void set_trace(std::function<void(const std::string&)> trace) { trace_ = std::move(trace); }

  // Charges trail and index growth to the memory guard.
  void account_memory();

 private:
  enum class EventKind : unsigned char { Assign, Elim, NearAssign, NearElim };
  struct Event {
    EventKind kind;
    bool from_negprop;
    int cell;  // target cell, or inner cell for near events
    int value;
    int table;
    int pos;
    int rest;
  };
  struct Node {
    int sym;  // table index, kElement or kEquality
    int value;
    int args_begin;
    int arity;
    int parent;
    int literal;
    int open_args;
    int cell;
    int next_occ;
  };
  struct Lit {
    int clause;
    int positive;
    int root;
    int status;  // 0 open, 1 true, 2 false
  };
  struct GClause {
    int lit_begin;
    int lit_count;
    int active;
    int satisfied;
  };
  struct TrailEntry {
    int* addr;  // null: pop the index leaf `old`
    int old;
  };

  static constexpr int kElement = -1;
  static constexpr int kEquality = -2;

  void set(int& field, int v) {
    trail_.push_back({&field, field});
    field = v;
  }

  void ground(const std::vector<Clause>& clauses, const Signature& signature);
  int build_node(const Term& t, const std::vector<int>& env, const std::vector<std::string>& vars,
                 int parent, int literal);
  int compute_cell(const Node& node) const;
  void push_occurrence(int node, int cell, bool record);

  void enqueue(const Event& e) { queue_.push_back(e); }
  bool propagate();
  bool process_assign(const Event& e);
  bool process_elim(const Event& e);
  bool process_near(const Event& e);
  void node_valued(int id);
  void check_literal(int lit);
  void examine_unit(int clause);
  void examine_literal(int lit);
  bool near_shape(const Node& node, int& pos, int& rest, int& inner) const;
  void derive_elimination(int cell, int v);

  int rest_index(int cell, int pos) const;
  int compose(int table, int pos, int rest, int x) const;
  int leaf(bool elim_index, int table, int v, int pos, int rest) const;
  void leaf_push(int leaf_id, int cell);

  void trace(const std::string& s) const {
    if (trace_) trace_(s);
  }

  int n_;
  EngineConfig config_;
  MemoryGuard* memory_;
  std::size_t charged_ = 0;
  std::size_t dynamic_charged_ = 0;
  bool consistent_ = true;
  bool contradiction_ = false;
  int last_conflict_ = -1;
  int max_constrained_ = -1;

  std::vector<TableInfo> tables_;
  std::vector<int> power_;  // n^k

  std::vector<int> value_;
  std::vector<int> npossible_;
  std::vector<int> eliminated_;  // stride max(n,2)
  int stride_ = 2;
  std::vector<int> occ_head_;
  std::vector<int> table_of_;
  std::vector<int> max_index_;

  std::vector<Node> nodes_;
  std::vector<int> arg_ids_;
  std::vector<Lit> lits_;
  std::vector<GClause> clauses_;
  std::vector<std::size_t> instances_;

  std::vector<int> leaf_base_;
  int leaves_per_index_ = 0;
  std::vector<std::vector<int>> leaves_;

  std::vector<TrailEntry> trail_;
  std::vector<Event> queue_;
  std::size_t queue_head_ = 0;

  EngineStats stats_;
  std::function<void(const std::string&)> trace_;
};

}  // namespace mace4
