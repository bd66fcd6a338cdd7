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

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace justcheck {

/// Machine-readable witness: rendered action labels plus the trigger/entry
/// positions of liveness lassos.
struct WitnessDoc {
  std::string kind;  // "path" (safety or finite completion) | "lasso"
  uint32_t thread = 0;
  uint64_t trigger_pos = 0;
  uint64_t entry_pos = 0;
  std::vector<std::string> steps;
  std::vector<std::string> cycle;

  friend bool operator==(const WitnessDoc&, const WitnessDoc&) = default;
};

struct CellStats {
  uint64_t states = 0;
  uint64_t transitions = 0;
  uint64_t fixpoint_iterations = 0;
  int64_t wall_ms = 0;

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// One (algorithm, memory model) verification outcome. Verdict letters follow
/// the reporting scheme: X none, M mutual exclusion only, D also deadlock
/// freedom, S all three; '?' marks a cell that exceeded its budget.
struct CellResult {
  std::string algorithm;
  std::string variant;
  std::string display_name;
  uint32_t threads = 2;
  std::string registers;  // safe | regular | atomic
  std::string conc;       // T | S | I | A
  char letter = '?';
  std::string mutex = "skipped";       // holds | violated | skipped | error
  std::string deadlock = "skipped";
  std::string starvation = "skipped";
  std::string error;                   // for '?' cells
  CellStats stats;
  std::optional<WitnessDoc> witness;

  friend bool operator==(const CellResult&, const CellResult&) = default;
};

struct Report {
  std::string suite;
  std::vector<CellResult> cells;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline const std::vector<std::pair<std::string, std::string>>& table_columns() {
  static const std::vector<std::pair<std::string, std::string>> cols = {
      {"safe", "T"},   {"regular", "T"}, {"atomic", "T"},
      {"atomic", "S"}, {"atomic", "I"},  {"atomic", "A"},
  };
  return cols;
}

}  // namespace detail

/// Text form mirrors the results-table layout: one row per algorithm, columns
/// safe/regular under T and atomic under T S I A.
inline std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "suite: " << (r.suite.empty() ? "custom" : r.suite) << "\n";
  os << std::left << std::setw(36) << "Algorithm" << std::setw(6) << "#thr"
     << "Safe Regular Atomic(T S I A)\n";

  // group by row, preserving first-seen order
  std::vector<std::tuple<std::string, std::string, uint32_t, std::string>> rows;
  std::map<std::tuple<std::string, std::string, uint32_t>,
           std::map<std::pair<std::string, std::string>, const CellResult*>>
      by_row;
  for (const auto& c : r.cells) {
    auto key = std::make_tuple(c.algorithm, c.variant, c.threads);
    if (!by_row.count(key)) rows.emplace_back(c.algorithm, c.variant, c.threads, c.display_name);
    by_row[key][{c.registers, c.conc}] = &c;
  }
  for (const auto& [alg, var, thr, disp] : rows) {
    auto& cells = by_row[std::make_tuple(alg, var, thr)];
    std::string line;
    for (const auto& col : detail::table_columns()) {
      auto it = cells.find(col);
      if (!line.empty()) line += " ";
      line += it == cells.end() ? '-' : it->second->letter;
    }
    os << std::left << std::setw(36) << disp << std::setw(6) << thr << line << "\n";
  }
  return os.str();
}

inline nlohmann::json witness_to_json(const WitnessDoc& w) {
  return nlohmann::json{{"kind", w.kind},       {"thread", w.thread},
                        {"trigger_pos", w.trigger_pos}, {"entry_pos", w.entry_pos},
                        {"steps", w.steps},     {"cycle", w.cycle}};
}

inline nlohmann::json render_report_json(const Report& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) {
    nlohmann::json jc{
        {"algorithm", c.algorithm},
        {"variant", c.variant},
        {"display_name", c.display_name},
        {"threads", c.threads},
        {"registers", c.registers},
        {"conc", c.conc},
        {"verdict_letter", std::string(1, c.letter)},
        {"properties",
         {{"mutex", c.mutex}, {"deadlock", c.deadlock}, {"starvation", c.starvation}}},
        {"stats",
         {{"states", c.stats.states},
          {"transitions", c.stats.transitions},
          {"fixpoint_iterations", c.stats.fixpoint_iterations},
          {"wall_ms", c.stats.wall_ms}}},
    };
    if (!c.error.empty()) jc["error"] = c.error;
    if (c.witness) jc["witness"] = witness_to_json(*c.witness);
    cells.push_back(std::move(jc));
  }
  return nlohmann::json{{"suite", r.suite}, {"cells", std::move(cells)}};
}

inline Report parse_report_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& jc : j.at("cells")) {
    CellResult c;
    c.algorithm = jc.at("algorithm").get<std::string>();
    c.variant = jc.at("variant").get<std::string>();
    c.display_name = jc.at("display_name").get<std::string>();
    c.threads = jc.at("threads").get<uint32_t>();
    c.registers = jc.at("registers").get<std::string>();
    c.conc = jc.at("conc").get<std::string>();
    c.letter = jc.at("verdict_letter").get<std::string>().at(0);
    c.mutex = jc.at("properties").at("mutex").get<std::string>();
    c.deadlock = jc.at("properties").at("deadlock").get<std::string>();
    c.starvation = jc.at("properties").at("starvation").get<std::string>();
    c.stats.states = jc.at("stats").at("states").get<uint64_t>();
    c.stats.transitions = jc.at("stats").at("transitions").get<uint64_t>();
    c.stats.fixpoint_iterations = jc.at("stats").at("fixpoint_iterations").get<uint64_t>();
    c.stats.wall_ms = jc.at("stats").at("wall_ms").get<int64_t>();
    if (jc.contains("error")) c.error = jc.at("error").get<std::string>();
    if (jc.contains("witness")) {
      WitnessDoc w;
      const auto& jw = jc.at("witness");
      w.kind = jw.at("kind").get<std::string>();
      w.thread = jw.at("thread").get<uint32_t>();
      w.trigger_pos = jw.at("trigger_pos").get<uint64_t>();
      w.entry_pos = jw.at("entry_pos").get<uint64_t>();
      w.steps = jw.at("steps").get<std::vector<std::string>>();
      w.cycle = jw.at("cycle").get<std::vector<std::string>>();
      c.witness = std::move(w);
    }
    r.cells.push_back(std::move(c));
  }
  return r;
}

}  // namespace justcheck
