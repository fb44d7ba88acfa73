#include "state.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace mace4 {

namespace {

// Element value of a term under `env`, or -1 when it is not an element.
int as_element(const Term& t, const std::vector<std::string>& vars, const std::vector<int>& env) {
  if (t.is_element()) return t.element();
  if (t.is_variable()) {
    auto it = std::find(vars.begin(), vars.end(), t.symbol());
    return env[static_cast<std::size_t>(it - vars.begin())];
  }
  return -1;
}

bool ground_equal(const Term& a, const Term& b, const std::vector<std::string>& vars,
                  const std::vector<int>& env) {
  int ea = as_element(a, vars, env);
  int eb = as_element(b, vars, env);
  if (ea >= 0 || eb >= 0) return ea == eb;
  if (a.symbol() != b.symbol() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!ground_equal(a.arg(i), b.arg(i), vars, env)) return false;
  }
  return true;
}

}  // namespace

State::State(const std::vector<Clause>& clauses, const Signature& signature, int n,
             const EngineConfig& config, MemoryGuard* memory)
    : n_(n), config_(config), memory_(memory) {
  if (n < 1) throw FatalError("domain size must be at least 1");
  int max_elem = max_domain_element(clauses);
  if (max_elem >= n) {
    throw FatalError("domain element " + std::to_string(max_elem) +
                     " is out of range for domain size " + std::to_string(n));
  }
  max_constrained_ = max_elem;
  ground(clauses, signature);
  if (!consistent_) return;

  for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
    if (!clauses_[ci].satisfied && clauses_[ci].active == 1) {
      examine_unit(static_cast<int>(ci));
    }
  }
  if (!propagate()) consistent_ = false;
  trail_.clear();  // initial propagation is permanent
}

State::~State() {
  if (memory_) memory_->release(charged_);
}

void State::ground(const std::vector<Clause>& clauses, const Signature& signature) {
  stride_ = std::max(n_, 2);
  power_.assign(12, 1);
  for (std::size_t k = 1; k < power_.size(); ++k) {
    long long p = static_cast<long long>(power_[k - 1]) * n_;
    power_[k] = p > (1LL << 30) ? (1 << 30) : static_cast<int>(p);
  }

  // Tables and cells.
  long long total_cells = 0;
  for (const auto& s : signature) {
    long long size = 1;
    for (int k = 0; k < s.arity; ++k) {
      size *= n_;
      if (size > static_cast<long long>(config_.cell_cap)) {
        throw FatalError("table for " + s.name + "/" + std::to_string(s.arity) +
                         " exceeds the limit of " + std::to_string(config_.cell_cap) + " cells");
      }
    }
    TableInfo t{s.name, s.arity, s.relation, static_cast<int>(total_cells), static_cast<int>(size)};
    total_cells += size;
    tables_.push_back(t);
  }

  // Leaf counts of the near-fact indexes.
  long long leaves = 0;
  for (const auto& t : tables_) {
    leaf_base_.push_back(static_cast<int>(leaves));
    if (t.arity > 0) {
      leaves += static_cast<long long>(t.relation ? 2 : n_) * t.arity * power_[static_cast<std::size_t>(t.arity - 1)];
    }
  }
  leaves_per_index_ = static_cast<int>(leaves);

  // Upper bounds of the ground store, before simplification.
  double inst_total = 0;
  double node_total = 0;
  double lit_total = 0;
  for (const auto& c : clauses) {
    double inst = 1;
    for (std::size_t v = 0; v < c.variables.size(); ++v) inst *= n_;
    double nodes = 0;
    for (const auto& l : c.literals) nodes += static_cast<double>(term_size(l.atom));
    inst_total += inst;
    node_total += inst * nodes;
    lit_total += inst * static_cast<double>(c.literals.size());
  }
  const double bytes = node_total * (sizeof(Node) + sizeof(int)) + lit_total * sizeof(Lit) +
                       inst_total * (sizeof(GClause) + sizeof(std::size_t)) +
                       static_cast<double>(total_cells) * (5 * sizeof(int) + stride_ * sizeof(int)) +
                       2.0 * static_cast<double>(leaves) * sizeof(std::vector<int>);
  if (node_total > 1.5e9 || inst_total > 1.5e9 || total_cells > (1LL << 30)) {
    throw MemoryLimitExceeded("ground clause store too large for domain size " + std::to_string(n_));
  }
  charged_ = static_cast<std::size_t>(bytes);
  if (memory_) memory_->charge(charged_);

  const auto cells = static_cast<std::size_t>(total_cells);
  value_.assign(cells, -1);
  npossible_.assign(cells, 0);
  eliminated_.assign(cells * static_cast<std::size_t>(stride_), 0);
  occ_head_.assign(cells, -1);
  table_of_.assign(cells, 0);
  max_index_.assign(cells, 0);
  for (std::size_t ti = 0; ti < tables_.size(); ++ti) {
    const auto& t = tables_[ti];
    for (int i = 0; i < t.size; ++i) {
      const auto c = static_cast<std::size_t>(t.base + i);
      table_of_[c] = static_cast<int>(ti);
      npossible_[c] = t.relation ? 2 : n_;
      auto args = cell_args(static_cast<int>(c));
      max_index_[c] = args.empty() ? 0 : *std::max_element(args.begin(), args.end());
    }
  }
  leaves_.assign(2 * static_cast<std::size_t>(leaves), {});

  nodes_.reserve(static_cast<std::size_t>(node_total));
  arg_ids_.reserve(static_cast<std::size_t>(node_total));
  lits_.reserve(static_cast<std::size_t>(lit_total));
  clauses_.reserve(static_cast<std::size_t>(inst_total));

  for (const auto& c : clauses) {
    const auto& vars = c.variables;
    std::vector<int> env(vars.size(), 0);
    std::size_t count = 0;
    std::vector<int> keep;  // literal indices surviving simplification
    for (;;) {
      ++count;
      bool satisfied = false;
      keep.clear();
      for (std::size_t li = 0; li < c.literals.size(); ++li) {
        const auto& l = c.literals[li];
        if (l.atom.is_app("=", 2)) {
          const Term& a = l.atom.arg(0);
          const Term& b = l.atom.arg(1);
          int ea = as_element(a, vars, env);
          int eb = as_element(b, vars, env);
          bool known = false;
          bool truth = false;
          if (ground_equal(a, b, vars, env)) {
            known = true;
            truth = true;
          } else if (ea >= 0 && eb >= 0) {
            known = true;
            truth = false;
          }
          if (known) {
            if (truth == l.positive) satisfied = true;
            continue;
          }
        }
        keep.push_back(static_cast<int>(li));
      }
      GClause gc{static_cast<int>(lits_.size()), 0, 0, satisfied ? 1 : 0};
      const int ci = static_cast<int>(clauses_.size());
      if (!satisfied) {
        for (int li : keep) {
          const auto& l = c.literals[static_cast<std::size_t>(li)];
          const int lit = static_cast<int>(lits_.size());
          lits_.push_back(Lit{ci, l.positive ? 1 : 0, -1, 0});
          int root = build_node(l.atom, env, vars, -1, lit);
          lits_[static_cast<std::size_t>(lit)].root = root;
        }
        gc.lit_count = static_cast<int>(keep.size());
        gc.active = gc.lit_count;
        if (gc.lit_count == 0) {
          consistent_ = false;
          last_conflict_ = ci;
        }
      }
      clauses_.push_back(gc);

      int k = static_cast<int>(vars.size()) - 1;
      while (k >= 0 && ++env[static_cast<std::size_t>(k)] == n_) {
        env[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
    instances_.push_back(count);
  }
}

int State::build_node(const Term& t, const std::vector<int>& env,
                      const std::vector<std::string>& vars, int parent, int literal) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{kElement, -1, 0, 0, parent, literal, 0, -1, -1});
  int e = as_element(t, vars, env);
  if (e >= 0) {
    nodes_[static_cast<std::size_t>(id)].value = e;
    return id;
  }
  int sym = t.is_app("=", 2) && parent < 0 ? kEquality
                                           : find_table(t.symbol(), static_cast<int>(t.arity()));
  if (sym == -1) throw FatalError("internal: no table for " + t.symbol());
  const int k = static_cast<int>(t.arity());
  const int begin = static_cast<int>(arg_ids_.size());
  arg_ids_.resize(arg_ids_.size() + static_cast<std::size_t>(k), -1);
  int open = 0;
  for (int i = 0; i < k; ++i) {
    int child = build_node(t.arg(static_cast<std::size_t>(i)), env, vars, id, literal);
    arg_ids_[static_cast<std::size_t>(begin + i)] = child;
    if (nodes_[static_cast<std::size_t>(child)].value < 0) ++open;
  }
  Node& nd = nodes_[static_cast<std::size_t>(id)];
  nd.sym = sym;
  nd.args_begin = begin;
  nd.arity = k;
  nd.open_args = open;
  if (sym >= 0 && open == 0) {
    nd.cell = compute_cell(nd);
    push_occurrence(id, nd.cell, false);
  }
  return id;
}

int State::find_table(const std::string& name, int arity) const {
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].name == name && tables_[i].arity == arity) return static_cast<int>(i);
  }
  return -1;
}

int State::cell_id(int table, const std::vector<int>& args) const {
  const auto& t = tables_[static_cast<std::size_t>(table)];
  int idx = 0;
  for (int a : args) idx = idx * n_ + a;
  return t.base + idx;
}

std::vector<int> State::cell_args(int cell) const {
  const auto& t = tables_[static_cast<std::size_t>(table_of(cell))];
  int off = cell - t.base;
  std::vector<int> args(static_cast<std::size_t>(t.arity));
  for (int k = t.arity - 1; k >= 0; --k) {
    args[static_cast<std::size_t>(k)] = off % n_;
    off /= n_;
  }
  return args;
}

std::string State::cell_name(int cell) const {
  const auto& t = tables_[static_cast<std::size_t>(table_of(cell))];
  std::string s = t.name;
  if (t.arity > 0) {
    s += "(";
    auto args = cell_args(cell);
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
    s += ")";
  }
  return s;
}

int State::compute_cell(const Node& node) const {
  int idx = 0;
  for (int i = 0; i < node.arity; ++i) {
    idx = idx * n_ + nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(node.args_begin + i)])].value;
  }
  return tables_[static_cast<std::size_t>(node.sym)].base + idx;
}

void State::push_occurrence(int node, int cell, bool record) {
  Node& nd = nodes_[static_cast<std::size_t>(node)];
  int& head = occ_head_[static_cast<std::size_t>(cell)];
  if (record) {
    set(nd.next_occ, head);
    set(head, node);
  } else {
    nd.next_occ = head;
    head = node;
  }
}

bool State::possible(int cell, int v) const {
  if (v < 0 || v >= range(cell)) return false;
  const int cur = value(cell);
  if (cur >= 0) return cur == v;
  return eliminated_[static_cast<std::size_t>(cell) * static_cast<std::size_t>(stride_) +
                     static_cast<std::size_t>(v)] == 0;
}

int State::num_possible(int cell) const {
  return is_set(cell) ? 1 : npossible_[static_cast<std::size_t>(cell)];
}

int State::index_bound(int cell) const {
  return tables_[static_cast<std::size_t>(table_of(cell))].arity == 0 ? -1 : max_index(cell);
}

int State::live_occurrences(int cell) const {
  int count = 0;
  for (int id = occ_head_[static_cast<std::size_t>(cell)]; id >= 0;
       id = nodes_[static_cast<std::size_t>(id)].next_occ) {
    const Node& nd = nodes_[static_cast<std::size_t>(id)];
    if (!clauses_[static_cast<std::size_t>(lits_[static_cast<std::size_t>(nd.literal)].clause)].satisfied) {
      ++count;
    }
  }
  return count;
}

void State::raise_max_constrained(int v) {
  if (v > max_constrained_) set(max_constrained_, v);
}

void State::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const TrailEntry e = trail_.back();
    trail_.pop_back();
    if (e.addr) {
      *e.addr = e.old;
    } else {
      leaves_[static_cast<std::size_t>(e.old)].pop_back();
    }
  }
  contradiction_ = false;
  queue_.clear();
  queue_head_ = 0;
}

bool State::assign(int cell, int v) {
  enqueue(Event{EventKind::Assign, false, cell, v, 0, 0, 0});
  return propagate();
}

bool State::eliminate(int cell, int v) {
  enqueue(Event{EventKind::Elim, false, cell, v, 0, 0, 0});
  return propagate();
}

bool State::near_fact(bool is_assignment, int table, int pos, const std::vector<int>& rest,
                      int inner_cell, int v) {
  int r = 0;
  for (int a : rest) r = r * n_ + a;
  EventKind kind = is_assignment ? EventKind::NearAssign : EventKind::NearElim;
  if (tables_[static_cast<std::size_t>(table)].relation && !is_assignment) {
    kind = EventKind::NearAssign;
    v = 1 - v;
  }
  enqueue(Event{kind, false, inner_cell, v, table, pos, r});
  return propagate();
}

std::vector<int> State::near_index_entries(bool elimination, int table, int v, int pos,
                                           const std::vector<int>& rest) const {
  int r = 0;
  for (int a : rest) r = r * n_ + a;
  return leaves_[static_cast<std::size_t>(leaf(elimination, table, v, pos, r))];
}

bool State::propagate() {
  contradiction_ = false;
  bool ok = true;
  while (queue_head_ < queue_.size()) {
    const Event e = queue_[queue_head_++];
    switch (e.kind) {
      case EventKind::Assign: ok = process_assign(e); break;
      case EventKind::Elim: ok = process_elim(e); break;
      default: ok = process_near(e); break;
    }
    if (!ok || contradiction_) {
      ok = false;
      break;
    }
  }
  queue_.clear();
  queue_head_ = 0;
  if (!ok) {
    ++stats_.contradictions;
    trace("contradiction");
  }
  return ok;
}

int State::rest_index(int cell, int pos) const {
  auto args = cell_args(cell);
  int r = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (static_cast<int>(i) != pos) r = r * n_ + args[i];
  }
  return r;
}

int State::compose(int table, int pos, int rest, int x) const {
  const auto& t = tables_[static_cast<std::size_t>(table)];
  std::vector<int> others(static_cast<std::size_t>(t.arity - 1));
  for (int k = t.arity - 2; k >= 0; --k) {
    others[static_cast<std::size_t>(k)] = rest % n_;
    rest /= n_;
  }
  int idx = 0;
  std::size_t j = 0;
  for (int i = 0; i < t.arity; ++i) idx = idx * n_ + (i == pos ? x : others[j++]);
  return t.base + idx;
}

int State::leaf(bool elim_index, int table, int v, int pos, int rest) const {
  const auto& t = tables_[static_cast<std::size_t>(table)];
  const int id = leaf_base_[static_cast<std::size_t>(table)] +
                 (v * t.arity + pos) * power_[static_cast<std::size_t>(t.arity - 1)] + rest;
  return elim_index ? id + leaves_per_index_ : id;
}

void State::leaf_push(int leaf_id, int cell) {
  leaves_[static_cast<std::size_t>(leaf_id)].push_back(cell);
  trail_.push_back({nullptr, leaf_id});
}

void State::derive_elimination(int cell, int v) {
  if (!possible(cell, v)) return;
  ++stats_.negprop_derived;
  enqueue(Event{EventKind::Elim, true, cell, v, 0, 0, 0});
}

bool State::process_assign(const Event& e) {
  const int c = e.cell;
  const int v = e.value;
  const int cur = value(c);
  if (cur >= 0) {
    if (cur != v) trace("conflict " + cell_name(c) + "=" + std::to_string(v));
    return cur == v;
  }
  if (!possible(c, v)) {
    trace("conflict " + cell_name(c) + "=" + std::to_string(v) + " (eliminated)");
    return false;
  }
  set(value_[static_cast<std::size_t>(c)], v);
  ++stats_.assignments;
  if (trace_) trace("assign " + cell_name(c) + "=" + std::to_string(v));

  for (int id = occ_head_[static_cast<std::size_t>(c)]; id >= 0;
       id = nodes_[static_cast<std::size_t>(id)].next_occ) {
    Node& nd = nodes_[static_cast<std::size_t>(id)];
    if (clauses_[static_cast<std::size_t>(lits_[static_cast<std::size_t>(nd.literal)].clause)].satisfied) continue;
    set(nd.value, v);
    ++stats_.rewrites;
    node_valued(id);
    if (contradiction_) return false;
  }

  if (!config_.negprop) return true;
  const int table = table_of(c);
  const auto& t = tables_[static_cast<std::size_t>(table)];
  if (t.arity == 0) return true;
  int lookup_elim = -1;  // which index to consult, and with which value
  int lookup_value = v;
  if (config_.neg_assign) {
    lookup_elim = 1;
  } else if (t.relation && config_.neg_elim) {
    lookup_elim = 0;
    lookup_value = 1 - v;
  }
  if (lookup_elim < 0) return true;
  auto args = cell_args(c);
  for (int pos = 0; pos < t.arity; ++pos) {
    const auto& entries =
        leaves_[static_cast<std::size_t>(leaf(lookup_elim == 1, table, lookup_value, pos, rest_index(c, pos)))];
    for (int g : entries) derive_elimination(g, args[static_cast<std::size_t>(pos)]);
  }
  return true;
}

bool State::process_elim(const Event& e) {
  const int c = e.cell;
  const int v = e.value;
  const int cur = value(c);
  if (cur >= 0) {
    if (cur == v) trace("conflict " + cell_name(c) + "!=" + std::to_string(v));
    return cur != v;
  }
  const std::size_t slot = static_cast<std::size_t>(c) * static_cast<std::size_t>(stride_) +
                           static_cast<std::size_t>(v);
  if (v < 0 || v >= range(c) || eliminated_[slot]) return true;
  set(eliminated_[slot], 1);
  int& np = npossible_[static_cast<std::size_t>(c)];
  set(np, np - 1);
  ++stats_.eliminations;
  if (trace_) trace("eliminate " + cell_name(c) + "!=" + std::to_string(v));
  if (np == 0) return false;
  if (np == 1) {
    for (int x = 0; x < range(c); ++x) {
      if (!eliminated_[static_cast<std::size_t>(c) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(x)]) {
        enqueue(Event{EventKind::Assign, false, c, x, 0, 0, 0});
        break;
      }
    }
  }

  const int table = table_of(c);
  const auto& t = tables_[static_cast<std::size_t>(table)];
  // A relation elimination always becomes an assignment; rule 1 covers it.
  if (!config_.negprop || !config_.neg_elim || t.relation || t.arity == 0) return true;
  auto args = cell_args(c);
  for (int pos = 0; pos < t.arity; ++pos) {
    const auto& entries = leaves_[static_cast<std::size_t>(leaf(false, table, v, pos, rest_index(c, pos)))];
    for (int g : entries) derive_elimination(g, args[static_cast<std::size_t>(pos)]);
  }
  return true;
}

bool State::process_near(const Event& e) {
  ++stats_.near_events;
  const auto& t = tables_[static_cast<std::size_t>(e.table)];
  const int v = e.value;
  const int g = e.cell;
  if (trace_) {
    trace(std::string(e.kind == EventKind::NearAssign ? "near " : "near-not ") + t.name + " pos " +
          std::to_string(e.pos) + " via " + cell_name(g) + " value " + std::to_string(v));
  }
  if (t.relation) {
    leaf_push(leaf(false, e.table, v, e.pos, e.rest), g);
    leaf_push(leaf(true, e.table, 1 - v, e.pos, e.rest), g);
    if (config_.neg_assign_near) {
      for (int x = 0; x < n_; ++x) {
        if (!possible(compose(e.table, e.pos, e.rest, x), v)) derive_elimination(g, x);
      }
    } else if (config_.neg_elim_near) {
      for (int x = 0; x < n_; ++x) {
        if (value(compose(e.table, e.pos, e.rest, x)) == 1 - v) derive_elimination(g, x);
      }
    }
    return true;
  }
  if (e.kind == EventKind::NearAssign) {
    leaf_push(leaf(false, e.table, v, e.pos, e.rest), g);
    if (config_.neg_assign_near) {
      for (int x = 0; x < n_; ++x) {
        if (!possible(compose(e.table, e.pos, e.rest, x), v)) derive_elimination(g, x);
      }
    }
  } else {
    leaf_push(leaf(true, e.table, v, e.pos, e.rest), g);
    if (config_.neg_elim_near) {
      for (int x = 0; x < n_; ++x) {
        if (value(compose(e.table, e.pos, e.rest, x)) == v) derive_elimination(g, x);
      }
    }
  }
  return true;
}

void State::node_valued(int id) {
  for (;;) {
    const int parent = nodes_[static_cast<std::size_t>(id)].parent;
    if (parent < 0) {
      check_literal(nodes_[static_cast<std::size_t>(id)].literal);
      return;
    }
    Node& p = nodes_[static_cast<std::size_t>(parent)];
    set(p.open_args, p.open_args - 1);
    if (p.sym == kEquality || p.open_args > 0) {
      check_literal(p.literal);
      return;
    }
    const int c = compute_cell(p);
    set(p.cell, c);
    const int cv = value(c);
    if (cv >= 0) {
      set(p.value, cv);
      ++stats_.rewrites;
      id = parent;
      continue;
    }
    push_occurrence(parent, c, true);
    check_literal(p.literal);
    return;
  }
}

void State::check_literal(int lit) {
  Lit& l = lits_[static_cast<std::size_t>(lit)];
  GClause& cl = clauses_[static_cast<std::size_t>(l.clause)];
  if (cl.satisfied || l.status != 0) return;
  const Node& r = nodes_[static_cast<std::size_t>(l.root)];
  int truth = -1;
  if (r.sym == kEquality) {
    const int a = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin)])].value;
    const int b = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin + 1)])].value;
    if (a >= 0 && b >= 0) truth = a == b ? 1 : 0;
  } else if (r.value >= 0) {
    truth = r.value == 1 ? 1 : 0;
  }
  if (truth < 0) {
    if (cl.active == 1) examine_literal(lit);
    return;
  }
  if (truth == l.positive) {
    set(l.status, 1);
    set(cl.satisfied, 1);
    return;
  }
  set(l.status, 2);
  set(cl.active, cl.active - 1);
  if (cl.active == 0) {
    contradiction_ = true;
    last_conflict_ = l.clause;
    return;
  }
  if (cl.active == 1) examine_unit(l.clause);
}

void State::examine_unit(int clause) {
  const GClause& cl = clauses_[static_cast<std::size_t>(clause)];
  for (int i = 0; i < cl.lit_count; ++i) {
    const int lit = cl.lit_begin + i;
    if (lits_[static_cast<std::size_t>(lit)].status == 0) {
      examine_literal(lit);
      return;
    }
  }
}

bool State::near_shape(const Node& node, int& pos, int& rest, int& inner) const {
  if (node.sym < 0 || node.open_args != 1 || node.arity == 0) return false;
  pos = -1;
  rest = 0;
  for (int i = 0; i < node.arity; ++i) {
    const Node& a = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(node.args_begin + i)])];
    if (a.value >= 0) {
      rest = rest * n_ + a.value;
      continue;
    }
    if (a.sym < 0 || a.open_args != 0) return false;
    pos = i;
    inner = a.cell;
  }
  return pos >= 0;
}

void State::examine_literal(int lit) {
  const Lit& l = lits_[static_cast<std::size_t>(lit)];
  const Node& r = nodes_[static_cast<std::size_t>(l.root)];
  int pos = 0;
  int rest = 0;
  int inner = -1;
  if (r.sym != kEquality) {
    if (r.value >= 0) return;
    const int b = l.positive ? 1 : 0;
    if (r.open_args == 0) {
      enqueue(Event{EventKind::Assign, false, r.cell, b, 0, 0, 0});
    } else if (config_.negprop && near_shape(r, pos, rest, inner)) {
      enqueue(Event{EventKind::NearAssign, false, inner, b, r.sym, pos, rest});
    }
    return;
  }
  const Node& a = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin)])];
  const Node& b = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin + 1)])];
  const Node* side = nullptr;
  int v = -1;
  if (a.value >= 0 && b.value < 0) {
    side = &b;
    v = a.value;
  } else if (b.value >= 0 && a.value < 0) {
    side = &a;
    v = b.value;
  } else {
    return;
  }
  if (side->open_args == 0) {
    enqueue(Event{l.positive ? EventKind::Assign : EventKind::Elim, false, side->cell, v, 0, 0, 0});
  } else if (config_.negprop && near_shape(*side, pos, rest, inner)) {
    enqueue(Event{l.positive ? EventKind::NearAssign : EventKind::NearElim, false, inner, v,
                  side->sym, pos, rest});
  }
}

long State::violated_clause() const {
  for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
    const GClause& cl = clauses_[ci];
    if (cl.satisfied) continue;
    bool all_false = true;
    for (int i = 0; i < cl.lit_count && all_false; ++i) {
      const Lit& l = lits_[static_cast<std::size_t>(cl.lit_begin + i)];
      const Node& r = nodes_[static_cast<std::size_t>(l.root)];
      int truth = -1;
      if (r.sym == kEquality) {
        const int a = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin)])].value;
        const int b = nodes_[static_cast<std::size_t>(arg_ids_[static_cast<std::size_t>(r.args_begin + 1)])].value;
        if (a >= 0 && b >= 0) truth = a == b;
      } else if (r.value >= 0) {
        truth = r.value == 1;
      }
      if (truth < 0 || truth == l.positive) all_false = false;
    }
    if (all_false) return static_cast<long>(ci);
  }
  return -1;
}

std::uint64_t State::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](long long v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  auto mix_all = [&](const std::vector<int>& xs) {
    mix(static_cast<long long>(xs.size()));
    for (int x : xs) mix(x);
  };
  mix(max_constrained_);
  mix_all(value_);
  mix_all(npossible_);
  mix_all(eliminated_);
  mix_all(occ_head_);
  for (const auto& nd : nodes_) {
    mix(nd.value);
    mix(nd.open_args);
    mix(nd.cell);
    mix(nd.next_occ);
  }
  for (const auto& l : lits_) mix(l.status);
  for (const auto& c : clauses_) {
    mix(c.active);
    mix(c.satisfied);
  }
  for (const auto& leaf_entries : leaves_) mix_all(leaf_entries);
  return h;
}

bool State::complete() const {
  return std::all_of(value_.begin(), value_.end(), [](int v) { return v >= 0; });
}

Interpretation State::to_interpretation() const {
  Interpretation interp;
  interp.size = n_;
  for (const auto& t : tables_) {
    InterpTable it{t.name, t.arity, t.relation, {}};
    it.values.assign(value_.begin() + t.base, value_.begin() + t.base + t.size);
    interp.tables.push_back(std::move(it));
  }
  return interp;
}

std::string State::describe_partial() const {
  std::ostringstream out;
  for (const auto& t : tables_) {
    out << t.name;
    if (t.arity > 0) out << "/" << t.arity;
    out << ":";
    for (int i = 0; i < t.size; ++i) {
      const int v = value_[static_cast<std::size_t>(t.base + i)];
      out << " " << (v >= 0 ? std::to_string(v) : "-");
    }
    out << "\n";
  }
  return out.str();
}

void State::account_memory() {
  if (!memory_) return;
  // Index leaves hold at most one entry per trail record.
  const std::size_t dynamic = trail_.capacity() * (sizeof(TrailEntry) + sizeof(int)) +
                              queue_.capacity() * sizeof(Event);
  if (dynamic > dynamic_charged_) {
    memory_->charge(dynamic - dynamic_charged_);
    charged_ += dynamic - dynamic_charged_;
    dynamic_charged_ = dynamic;
  }
}

}  // namespace mace4
