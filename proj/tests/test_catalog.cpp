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

#include "justcheck/catalog.hpp"
#include "justcheck/model.hpp"

using namespace justcheck;

TEST_CASE("peterson catalog entry") {
  AlgorithmSpec s = algorithm_catalog("peterson", "base", 2);
  REQUIRE(s.registers.size() == 3);
  CHECK(s.registers[0].name == "flag0");
  CHECK(s.registers[0].domain == std::vector<Value>{0, 1});
  CHECK(s.registers[0].initial_value() == 0);
  CHECK(s.registers[2].name == "turn");
  CHECK(s.registers[2].initial_value() == 0);
  CHECK(s.programs.size() == 2);
}

TEST_CASE("aravind alt entry at 3 threads") {
  AlgorithmSpec s = algorithm_catalog("aravind_blru", "alt", 3);
  REQUIRE(s.registers.size() == 9);
  CHECK(s.registers[6].name == "date0");
  CHECK(s.registers[6].initial_value() == 0);
  CHECK(s.registers[7].initial_value() == 1);
  CHECK(s.registers[8].initial_value() == 2);
  // dates range over 0..2N-1
  CHECK(s.registers[6].domain.size() == 6);
}

TEST_CASE("dftosf wraps lamport 1-bit with fresh flag/turn registers") {
  AlgorithmSpec s = algorithm_catalog("dftosf", "lamport1bit", 3);
  REQUIRE(s.registers.size() == 7);
  CHECK(s.registers[0].name == "x0");  // the inner registers keep Lamport's name
  CHECK(s.registers[3].name == "flag0");
  CHECK(s.registers[3].initial_value() == 0);
  CHECK(s.registers[6].name == "turn");
  CHECK(s.registers[6].domain == std::vector<Value>{0, 1, 2});
  CHECK(s.registers[6].initial_value() == 0);
}

TEST_CASE("unknown combinations are rejected") {
  CHECK_THROWS(algorithm_catalog("peterson", "base", 3));
  CHECK_THROWS(algorithm_catalog("peterson", "alt", 2));
  CHECK_THROWS(algorithm_catalog("nonsense", "base", 2));
  CHECK_THROWS(algorithm_catalog("dftosf", "dekker_rw_safe", 3));
}

TEST_CASE("register ids referenced by programs exist and models compose") {
  for (const auto& row : catalog_rows()) {
    AlgorithmSpec s = algorithm_catalog(row.name, row.variant, row.table_threads);
    CHECK(s.programs.size() == s.nthreads);
    if (row.table_threads == 2) {
      // small enough to compose in a unit test
      Model m(s.programs, s.registers);
      CHECK(m.num_states() > 2);
    }
  }
}

TEST_CASE("composed catalog models keep rds/wrts disjoint everywhere") {
  for (const char* alg : {"peterson", "kessels"}) {
    AlgorithmSpec s = algorithm_catalog(alg, "base", 2);
    Model m(s.programs, s.registers);
    for (uint32_t r = 0; r < s.registers.size(); ++r) {
      const RegisterComponent& rc = m.register_component(r);
      for (StateId sid = 0; sid < m.num_states(); ++sid) {
        RegisterStatus st = rc.status_of(m.register_state(sid, r));
        CHECK((st.rds & st.wrts) == 0);
      }
    }
  }
}

TEST_CASE("alphabet partition: crit/noncrit in exactly one thread component") {
  AlgorithmSpec s = algorithm_catalog("dekker", "base", 2);
  Model m(s.programs, s.registers);
  for (ThreadId t = 0; t < 2; ++t) {
    CHECK(m.thread_lts(t).in_alphabet(Action::crit(t)));
    CHECK_FALSE(m.thread_lts(t).in_alphabet(Action::crit(1 - t)));
    CHECK_FALSE(m.thread_lts(t).in_alphabet(Action::order_write(t, 2)));
  }
}
