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
#include "justcheck/program.hpp"

using namespace justcheck;

TEST_CASE("a bare critical-section program compiles to the two-state cycle") {
  ProgramBuilder b(0);
  b.crit();
  Lts l = compile_thread(b.finish(), {});
  REQUIRE(l.num_states == 2);
  CHECK(enabled_in(l, l.initial) == std::set<Action>{Action::noncrit(0)});
  StateId after = l.out[l.initial][0].second;
  CHECK(enabled_in(l, after) == std::set<Action>{Action::crit(0)});
  CHECK(l.out[after][0].second == l.initial);
}

TEST_CASE("peterson thread: the first register action is the flag write") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2);
  for (ThreadId i = 0; i < 2; ++i) {
    Lts l = compile_thread(spec.programs[i], spec.registers);
    StateId ncs = l.initial;
    REQUIRE(l.out[ncs].size() == 1);
    REQUIRE(l.out[ncs][0].first == Action::noncrit(i));
    StateId first = l.out[ncs][0].second;
    auto en = enabled_in(l, first);
    REQUIRE(en.size() == 1);
    CHECK(*en.begin() == Action::start_write(i, i, 1));
  }
}

TEST_CASE("every catalog entry compiles to a well-formed thread LTS") {
  for (const auto& row : catalog_rows()) {
    uint32_t n = row.table_threads;
    AlgorithmSpec spec = algorithm_catalog(row.name, row.variant, n);
    for (ThreadId i = 0; i < n; ++i) {
      Lts l = compile_thread(spec.programs[i], spec.registers);
      INFO(row.name << "/" << row.variant << " thread " << i);
      CHECK(validate_thread_lts(l).empty());
    }
  }
}

TEST_CASE("validator flags a start_write leading to a state that also enables crit") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state(), s2 = l.add_state();
  l.add_transition(s0, Action::start_write(0, 0, 1), s1);
  l.add_transition(s1, Action::finish_write(0, 0), s2);
  l.add_transition(s1, Action::crit(0), s2);
  auto v = validate_thread_lts(l);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().find("start_write") != std::string::npos);
}

TEST_CASE("validator flags finish_read enabled at the initial state") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.declare_action(Action::finish_read(0, 0, 0));
  l.declare_action(Action::finish_read(0, 0, 1));
  l.add_transition(s0, Action::finish_read(0, 0, 0), s1);
  auto v = validate_thread_lts(l);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().find("finish_read") != std::string::npos);
}

TEST_CASE("recompilation is deterministic") {
  AlgorithmSpec spec = algorithm_catalog("dekker", "rw_safe", 2);
  Lts a = compile_thread(spec.programs[0], spec.registers);
  Lts b = compile_thread(spec.programs[0], spec.registers);
  REQUIRE(a.num_states == b.num_states);
  REQUIRE(a.actions == b.actions);
  for (StateId s = 0; s < a.num_states; ++s) CHECK(a.out[s] == b.out[s]);
}

TEST_CASE("compile errors") {
  std::vector<RegisterConfig> regs{boolean_register("f")};
  SECTION("expression out of domain") {
    ProgramBuilder b(0);
    b.write(RegRef::direct(0), kv(7));
    b.crit();
    CHECK_THROWS_WITH(compile_thread(b.finish(), regs),
                      Catch::Matchers::ContainsSubstring("domain"));
  }
  SECTION("register arity mismatch: domain does not fit destination local") {
    std::vector<RegisterConfig> wide{range_register("x", 0, 4, 0)};
    ProgramBuilder b(0);
    uint32_t tmp = b.boolean();  // too small for x's domain
    b.read(tmp, RegRef::direct(0));
    b.crit();
    CHECK_THROWS_WITH(compile_thread(b.finish(), wide),
                      Catch::Matchers::ContainsSubstring("arity"));
  }
  SECTION("goto target must exist") {
    ProgramBuilder b(0);
    uint32_t lbl = b.label();
    b.crit();
    b.jump(lbl);  // never placed
    CHECK_THROWS_WITH(b.finish(), Catch::Matchers::ContainsSubstring("label"));
  }
  SECTION("a round without a critical section is rejected") {
    ProgramBuilder b(0);
    b.write(RegRef::direct(0), kv(1));
    CHECK_THROWS_WITH(compile_thread(b.finish(), regs),
                      Catch::Matchers::ContainsSubstring("critical section"));
  }
  SECTION("action-free control loops are rejected") {
    ProgramBuilder b(0);
    uint32_t l = b.here();
    b.jump(l);
    b.crit();
    CHECK_THROWS_WITH(compile_thread(b.finish(), regs),
                      Catch::Matchers::ContainsSubstring("loop"));
  }
}

TEST_CASE("thread alphabets cover the full register interface") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2);
  Lts l = compile_thread(spec.programs[0], spec.registers);
  // even actions the program never performs are declared (CSP synchronisation)
  CHECK(l.in_alphabet(Action::start_read(0, 0)));
  CHECK(l.in_alphabet(Action::start_write(0, 2, 1)));
  CHECK_FALSE(l.in_alphabet(Action::start_read(1, 0)));   // other thread
  CHECK_FALSE(l.in_alphabet(Action::order_read(0, 2)));   // register local
  CHECK(l.in_alphabet(Action::crit(0)));
  CHECK(l.in_alphabet(Action::noncrit(0)));
}
