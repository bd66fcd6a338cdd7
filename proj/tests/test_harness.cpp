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

#include <catch2/catch_amalgamated.hpp>

#include "justcheck/harness.hpp"

using namespace justcheck;

namespace {

RunConfig cell(const char* alg, const char* var, uint32_t n, RegisterKind k,
               ConcurrencyMode c) {
  RunConfig cfg;
  cfg.algorithm = alg;
  cfg.variant = var;
  cfg.threads = n;
  cfg.registers = k;
  cfg.conc = c;
  return cfg;
}

}  // namespace

TEST_CASE("run_cell verdict letters") {
  CHECK(run_cell(cell("kessels", "base", 2, RegisterKind::Atomic, ConcurrencyMode::S))
            .letter == 'S');
  CHECK(run_cell(cell("kessels", "base", 2, RegisterKind::Safe, ConcurrencyMode::T))
            .letter == 'X');
}

TEST_CASE("liveness checks are skipped once an earlier property fails") {
  CellResult x = run_cell(cell("kessels", "base", 2, RegisterKind::Safe, ConcurrencyMode::T));
  CHECK(x.mutex == "violated");
  CHECK(x.deadlock == "skipped");
  CHECK(x.starvation == "skipped");
}

TEST_CASE("config invariants") {
  CHECK_THROWS(run_cell(cell("peterson", "base", 2, RegisterKind::Safe, ConcurrencyMode::S)));
  CHECK_THROWS(run_cell(cell("peterson", "base", 2, RegisterKind::Regular, ConcurrencyMode::A)));
  RunConfig bad = cell("peterson", "base", 2, RegisterKind::Atomic, ConcurrencyMode::T);
  bad.property = "everything";
  CHECK_THROWS(run_cell(bad));
}

TEST_CASE("budget overruns mark the cell, never fabricate a letter") {
  RunConfig cfg = cell("dekker", "base", 2, RegisterKind::Atomic, ConcurrencyMode::T);
  cfg.max_states = 20;
  CellResult r = run_cell(cfg);
  CHECK(r.letter == '?');
  CHECK_FALSE(r.error.empty());
}

TEST_CASE("report letters are invariant under the parallelism degree") {
  std::vector<SuiteCell> cells;
  for (ConcurrencyMode m : {ConcurrencyMode::T, ConcurrencyMode::S, ConcurrencyMode::I,
                            ConcurrencyMode::A})
    cells.push_back({"peterson", "base", 2, RegisterKind::Atomic, m});
  Report serial = run_cells(cells, "test", 1);
  Report parallel = run_cells(cells, "test", 4);
  REQUIRE(serial.cells.size() == parallel.cells.size());
  for (size_t i = 0; i < serial.cells.size(); ++i) {
    CHECK(serial.cells[i].letter == parallel.cells[i].letter);
    CHECK(serial.cells[i].witness == parallel.cells[i].witness);
  }
}

TEST_CASE("empty suite renders a header-only table") {
  Report r;
  r.suite = "empty";
  std::string text = render_report_text(r);
  CHECK(text.find("Algorithm") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("structured report round-trips") {
  std::vector<SuiteCell> cells{
      {"peterson", "base", 2, RegisterKind::Atomic, ConcurrencyMode::I}};
  Report r = run_cells(cells, "roundtrip");
  nlohmann::json j = render_report_json(r);
  Report back = parse_report_json(j);
  CHECK(back == r);
  // and the single cell carries a witness (deadlock freedom fails under I)
  REQUIRE(r.cells[0].witness.has_value());
  CHECK(r.cells[0].witness->kind == "lasso");
}

TEST_CASE("text table contains the expected peterson row") {
  std::vector<SuiteCell> cells;
  for (const auto& [k, m] : std::vector<std::pair<RegisterKind, ConcurrencyMode>>{
           {RegisterKind::Safe, ConcurrencyMode::T},
           {RegisterKind::Regular, ConcurrencyMode::T},
           {RegisterKind::Atomic, ConcurrencyMode::T},
           {RegisterKind::Atomic, ConcurrencyMode::S},
           {RegisterKind::Atomic, ConcurrencyMode::I},
           {RegisterKind::Atomic, ConcurrencyMode::A}})
    cells.push_back({"peterson", "base", 2, k, m});
  Report r = run_cells(cells, "row");
  std::string text = render_report_text(r);
  CHECK(text.find("Peterson") != std::string::npos);
  CHECK(text.find("X X S S M M") != std::string::npos);
}

TEST_CASE("initial-value overrides are applied by register name") {
  RunConfig cfg = cell("peterson", "base", 2, RegisterKind::Atomic, ConcurrencyMode::T);
  cfg.initial_overrides = {{"turn", 1}};
  CHECK(run_cell(cfg).letter == 'S');  // symmetric in the initial turn
  cfg.initial_overrides = {{"nonexistent", 1}};
  CHECK_THROWS(run_cell(cfg));
}
