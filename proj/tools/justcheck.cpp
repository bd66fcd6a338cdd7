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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "justcheck/harness.hpp"

using namespace justcheck;

namespace {

nlohmann::json cell_to_json(const CellResult& c) {
  Report r;
  r.suite = "single";
  r.cells.push_back(c);
  return render_report_json(r)["cells"][0];
}

int cmd_verify(const RunConfig& cfg, const std::string& format) {
  CellResult cell = run_cell(cfg);
  if (format == "json") {
    std::cout << cell_to_json(cell).dump(2) << "\n";
  } else {
    std::cout << cell.display_name << "  threads=" << cell.threads
              << "  registers=" << cell.registers << "  conc=" << cell.conc << "\n";
    auto line = [](const char* name, const std::string& v) {
      std::cout << "  " << name << ": " << v << "\n";
    };
    line("mutex", cell.mutex);
    line("deadlock", cell.deadlock);
    line("starvation", cell.starvation);
    std::cout << "  verdict: " << cell.letter << "\n";
    std::cout << "  states=" << cell.stats.states
              << " transitions=" << cell.stats.transitions
              << " wall_ms=" << cell.stats.wall_ms << "\n";
    if (cell.witness) {
      std::cout << "witness (" << cell.witness->kind << "):\n";
      size_t k = 0;
      for (const auto& s : cell.witness->steps) std::cout << k++ << ": " << s << "\n";
      if (!cell.witness->cycle.empty()) {
        std::cout << "--- cycle ---\n";
        for (const auto& s : cell.witness->cycle) std::cout << k++ << ": " << s << "\n";
      }
    }
    if (!cell.error.empty()) std::cout << "error: " << cell.error << "\n";
  }
  if (!cell.error.empty()) return 2;
  bool requested_hold = true;
  if (cfg.property == "all")
    requested_hold = cell.letter == 'S';
  else if (cfg.property == "mutex")
    requested_hold = cell.mutex == "holds";
  else if (cfg.property == "deadlock")
    requested_hold = cell.deadlock == "holds";
  else
    requested_hold = cell.starvation == "holds";
  return requested_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"justcheck: verification of mutual exclusion algorithms under "
               "justness, with safe/regular/atomic registers"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check one algorithm/memory-model cell");
  RunConfig cfg;
  std::string registers = "atomic", conc = "T", format = "text";
  verify->add_option("--algorithm", cfg.algorithm, "algorithm name")->required();
  verify->add_option("--variant", cfg.variant, "variant tag (default: base)");
  verify->add_option("--threads", cfg.threads, "thread count N");
  verify->add_option("--registers", registers, "safe|regular|atomic");
  verify->add_option("--conc", conc, "concurrency relation: T|S|I|A");
  verify->add_option("--property", cfg.property, "mutex|deadlock|starvation|all");
  verify->add_flag("--witness", cfg.want_witness, "print a counterexample when violated");
  verify->add_option("--max-states", cfg.max_states, "state cap");
  verify->add_option("--max-transitions", cfg.max_transitions, "transition cap");
  verify->add_option("--budget-ms", cfg.budget_ms, "wall-clock budget (0 = none)");
  verify->add_option("--format", format, "text|json");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "run a verification suite");
  std::string suite = "two_thread", out_path, config_path;
  unsigned jobs = 1;
  int64_t budget_ms = 0;
  uint64_t max_states = 50'000'000;
  matrix->add_option("--suite", suite, "two_thread|three_thread|full");
  matrix->add_option("--jobs", jobs, "parallel cells");
  matrix->add_option("--out", out_path, "write the JSON report here");
  matrix->add_option("--budget-ms", budget_ms, "per-cell wall-clock budget");
  matrix->add_option("--max-states", max_states, "per-cell state cap");
  matrix->add_option("--config", config_path,
                     "JSON config with suite/jobs/budget_ms/max_states; flags override");

  // scenario
  auto* scenario = app.add_subcommand("scenario", "register overlap-schedule outcomes");
  bool appendix_a = false;
  std::string scen_registers = "safe";
  scenario->add_flag("--appendix-a", appendix_a, "the three-thread SWMR schedule");
  scenario->add_option("--registers", scen_registers, "safe|regular|atomic");

  // list
  auto* list = app.add_subcommand("list", "print the supported algorithm matrix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cfg.registers = parse_register_kind(registers);
      cfg.conc = parse_mode(conc);
      return cmd_verify(cfg, format);
    }
    if (*matrix) {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config: " + config_path);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.contains("suite") && matrix->count("--suite") == 0)
          suite = j["suite"].get<std::string>();
        if (j.contains("jobs") && matrix->count("--jobs") == 0)
          jobs = j["jobs"].get<unsigned>();
        if (j.contains("budget_ms") && matrix->count("--budget-ms") == 0)
          budget_ms = j["budget_ms"].get<int64_t>();
        if (j.contains("max_states") && matrix->count("--max-states") == 0)
          max_states = j["max_states"].get<uint64_t>();
      }
      Report r = run_matrix(suite, jobs, budget_ms, max_states);
      std::cout << render_report_text(r);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << render_report_json(r).dump(2) << "\n";
      }
      for (const auto& c : r.cells)
        if (!c.error.empty()) return 2;
      return 0;
    }
    if (*scenario) {
      if (!appendix_a) throw std::runtime_error("only --appendix-a is available");
      RegisterKind kind = parse_register_kind(scen_registers);
      auto outcomes = run_appendix_a(kind);
      std::cout << "register kind: " << scen_registers << "\n";
      for (const auto& t : outcomes) {
        const char* names = "abcde";
        std::cout << "  ";
        for (size_t i = 0; i < t.size(); ++i)
          std::cout << names[i] << "=" << t[i] << (i + 1 < t.size() ? " " : "");
        std::cout << "\n";
      }
      std::cout << "outcomes: " << outcomes.size() << "\n";
      return 0;
    }
    if (*list) {
      std::cout << std::left << std::setw(22) << "algorithm" << std::setw(18)
                << "variant" << std::setw(8) << "threads" << "table row\n";
      for (const auto& row : catalog_rows())
        std::cout << std::left << std::setw(22) << row.name << std::setw(18)
                  << row.variant << std::setw(8)
                  << (row.fixed_two_threads ? "2" : std::to_string(row.table_threads) + " (2..)")
                  << row.display_name << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
