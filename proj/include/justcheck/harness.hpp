/*
 * Copyright (c) 2026 The justcheck authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <atomic>
#include <thread>

#include "justcheck/catalog.hpp"
#include "justcheck/checker.hpp"
#include "justcheck/report.hpp"
#include "justcheck/scenario.hpp"

namespace justcheck {

/// One verification cell. Safe and regular registers are evaluated under the
/// thread-interference relation only; all four relations apply to atomic
/// registers.
struct RunConfig {
  std::string algorithm;
  std::string variant = "base";
  uint32_t threads = 2;
  RegisterKind registers = RegisterKind::Atomic;
  ConcurrencyMode conc = ConcurrencyMode::T;
  std::string property = "all";  // mutex | deadlock | starvation | all
  uint64_t max_states = 50'000'000;
  uint64_t max_transitions = 100'000'000;
  int64_t budget_ms = 0;  // 0 = unbounded
  bool want_witness = false;
  uint64_t seed = 0;  // randomized test utilities only
  // optional initial-value overrides, matched by register name
  std::vector<std::pair<std::string, Value>> initial_overrides;

  void validate() const {
    if (registers != RegisterKind::Safe && registers != RegisterKind::Regular &&
        registers != RegisterKind::Atomic)
      throw std::invalid_argument("run registers must be safe, regular or atomic");
    if (registers != RegisterKind::Atomic && conc != ConcurrencyMode::T)
      throw std::invalid_argument(
          "safe and regular registers are evaluated under the T relation only");
    if (property != "all" && property != "mutex" && property != "deadlock" &&
        property != "starvation")
      throw std::invalid_argument("unknown property: " + property);
  }
};

inline RegisterKind parse_register_kind(const std::string& s) {
  if (s == "safe") return RegisterKind::Safe;
  if (s == "regular") return RegisterKind::Regular;
  if (s == "atomic") return RegisterKind::Atomic;
  throw std::invalid_argument("unknown register kind: " + s);
}

inline ConcurrencyMode parse_mode(const std::string& s) {
  if (s == "T") return ConcurrencyMode::T;
  if (s == "S") return ConcurrencyMode::S;
  if (s == "I") return ConcurrencyMode::I;
  if (s == "A") return ConcurrencyMode::A;
  throw std::invalid_argument("unknown concurrency mode: " + s);
}

namespace detail {

inline WitnessDoc witness_doc_path(const Model& m, const std::vector<Transition>& path) {
  WitnessDoc w;
  w.kind = "path";
  auto names = m.reg_namer();
  for (const auto& t : path) w.steps.push_back(render(t.label, names));
  return w;
}

inline WitnessDoc witness_doc_lasso(const Model& m, const LivenessWitness& lw) {
  WitnessDoc w;
  w.kind = lw.cycle.empty() ? "path" : "lasso";
  w.thread = lw.thread;
  w.trigger_pos = lw.trigger_pos;
  w.entry_pos = lw.entry_pos;
  auto names = m.reg_namer();
  for (const auto& t : lw.prefix) w.steps.push_back(render(t.label, names));
  for (const auto& t : lw.cycle) w.cycle.push_back(render(t.label, names));
  return w;
}

}  // namespace detail

/// Runs the three checks with the short-circuit reporting order (no liveness
/// when mutual exclusion fails, no starvation check when deadlock freedom
/// fails) and derives the verdict letter. Cap or budget overruns yield '?',
/// never a fabricated letter.
inline CellResult run_cell(const RunConfig& cfg) {
  cfg.validate();
  CellResult cell;
  cell.algorithm = cfg.algorithm;
  cell.variant = cfg.variant;
  cell.threads = cfg.threads;
  cell.registers = kind_name(cfg.registers);
  cell.conc = mode_name(cfg.conc);
  auto t0 = std::chrono::steady_clock::now();
  auto deadline = cfg.budget_ms > 0 ? t0 + std::chrono::milliseconds(cfg.budget_ms)
                                    : std::chrono::steady_clock::time_point::max();
  try {
    AlgorithmSpec spec =
        algorithm_catalog(cfg.algorithm, cfg.variant, cfg.threads).with_kind(cfg.registers);
    cell.display_name = spec.display_name;
    for (const auto& [name, value] : cfg.initial_overrides) {
      bool found = false;
      for (auto& r : spec.registers)
        if (r.name == name) {
          r.initial = value;
          found = true;
        }
      if (!found) throw std::invalid_argument("initial override: no register " + name);
    }
    ExploreCaps caps;
    caps.max_states = cfg.max_states;
    caps.max_transitions = cfg.max_transitions;
    caps.deadline = deadline;
    Model m(spec.programs, spec.registers, caps);
    cell.stats.states = m.num_states();
    cell.stats.transitions = m.num_edges();

    bool only = cfg.property != "all";
    auto want = [&](const char* p) { return !only || cfg.property == p; };

    bool mutex_ok = true;
    if (want("mutex")) {
      Verdict v = check_mutual_exclusion(m);
      mutex_ok = v.holds;
      cell.mutex = v.holds ? "holds" : "violated";
      if (!v.holds && cfg.want_witness && v.safety_witness)
        cell.witness = detail::witness_doc_path(m, *v.safety_witness);
    }
    bool deadlock_ok = true;
    if (want("deadlock") && (only || mutex_ok)) {
      Verdict v = check_liveness(m, PropertyKind::DeadlockFreedom, cfg.conc, deadline);
      deadlock_ok = v.holds;
      cell.deadlock = v.holds ? "holds" : "violated";
      cell.stats.fixpoint_iterations += v.stats.fixpoint_iterations;
      if (!v.holds && cfg.want_witness && v.liveness_witness && !cell.witness)
        cell.witness = detail::witness_doc_lasso(m, *v.liveness_witness);
    }
    if (want("starvation") && (only || (mutex_ok && deadlock_ok))) {
      Verdict v = check_liveness(m, PropertyKind::StarvationFreedom, cfg.conc, deadline);
      cell.starvation = v.holds ? "holds" : "violated";
      cell.stats.fixpoint_iterations += v.stats.fixpoint_iterations;
      if (!v.holds && cfg.want_witness && v.liveness_witness && !cell.witness)
        cell.witness = detail::witness_doc_lasso(m, *v.liveness_witness);
    }

    if (cell.mutex == "violated")
      cell.letter = 'X';
    else if (cell.deadlock == "violated")
      cell.letter = 'M';
    else if (cell.starvation == "violated")
      cell.letter = 'D';
    else if (cell.mutex == "holds" && cell.deadlock == "holds" &&
             cell.starvation == "holds")
      cell.letter = 'S';
    else
      cell.letter = '?';  // partial run (single-property query)
  } catch (const CapExceeded& e) {
    cell.letter = '?';
    cell.error = e.what();
    cell.mutex = cell.deadlock = cell.starvation = "error";
  }
  cell.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return cell;
}

struct SuiteCell {
  std::string algorithm, variant;
  uint32_t threads;
  RegisterKind registers;
  ConcurrencyMode conc;
};

inline std::vector<SuiteCell> suite_cells(const std::string& suite) {
  std::vector<std::pair<RegisterKind, ConcurrencyMode>> cols = {
      {RegisterKind::Safe, ConcurrencyMode::T},
      {RegisterKind::Regular, ConcurrencyMode::T},
      {RegisterKind::Atomic, ConcurrencyMode::T},
      {RegisterKind::Atomic, ConcurrencyMode::S},
      {RegisterKind::Atomic, ConcurrencyMode::I},
      {RegisterKind::Atomic, ConcurrencyMode::A},
  };
  std::vector<SuiteCell> cells;
  for (const auto& row : catalog_rows()) {
    bool two = row.table_threads == 2;
    bool in_suite = suite == "full" || (suite == "two_thread" && two) ||
                    (suite == "three_thread" && !two);
    if (!in_suite) continue;
    // the bit variant of the Szymanski flag algorithm with the fixed exit
    // order is not a table row; it stays available via `verify`
    if (row.name == "szymanski_flag_bit" && row.variant == "alt") continue;
    for (const auto& [kind, mode] : cols)
      cells.push_back({row.name, row.variant, row.table_threads, kind, mode});
  }
  return cells;
}

/// Evaluates the given cells on a small worker pool. Per-cell errors are
/// recorded and the run continues; the assembled report is independent of the
/// worker count.
inline Report run_cells(const std::vector<SuiteCell>& cells, const std::string& suite,
                        unsigned jobs = 1, int64_t per_cell_budget_ms = 0,
                        uint64_t max_states = 50'000'000) {
  Report report;
  report.suite = suite;
  report.cells.resize(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      RunConfig cfg;
      cfg.algorithm = cells[i].algorithm;
      cfg.variant = cells[i].variant;
      cfg.threads = cells[i].threads;
      cfg.registers = cells[i].registers;
      cfg.conc = cells[i].conc;
      cfg.budget_ms = per_cell_budget_ms;
      cfg.max_states = max_states;
      cfg.want_witness = true;
      report.cells[i] = run_cell(cfg);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

inline Report run_matrix(const std::string& suite, unsigned jobs = 1,
                         int64_t per_cell_budget_ms = 0,
                         uint64_t max_states = 50'000'000) {
  return run_cells(suite_cells(suite), suite, jobs, per_cell_budget_ms, max_states);
}

}  // namespace justcheck
