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
#include "justcheck/compose.hpp"
#include "justcheck/model.hpp"
#include "support/naive_compose.hpp"
#include "support/random_lts.hpp"

using namespace justcheck;

namespace {

Lts single_step(Action a) {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.add_transition(s0, a, s1);
  return l;
}

}  // namespace

TEST_CASE("disjoint alphabets interleave") {
  Action a = Action::crit(0), b = Action::crit(1);
  Lts prod = compose_parallel({single_step(a), single_step(b)});
  CHECK(prod.num_states == 4);
  CHECK(prod.num_transitions() == 4);
  // both interleavings ab and ba exist
  auto en0 = enabled_in(prod, prod.initial);
  CHECK(en0 == std::set<Action>{a, b});
}

TEST_CASE("a shared action disabled in one component is disabled in the product") {
  Action a = Action::crit(0), b = Action::crit(1);
  Lts lhs = single_step(a);
  // rhs declares `a` in its alphabet but never enables it
  Lts rhs = single_step(b);
  rhs.declare_action(a);
  Lts prod = compose_parallel({lhs, rhs});
  for (StateId s = 0; s < prod.num_states; ++s) CHECK(!enables(prod, s, a));
}

TEST_CASE("enabled_in") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.add_transition(s0, Action::crit(0), s1);
  CHECK(enabled_in(l, s1).empty());  // deadlocked state
  CHECK(enabled_in(l, s0) == std::set<Action>{Action::crit(0)});
  CHECK_THROWS_AS(enabled_in(l, 7), std::out_of_range);
}

TEST_CASE("product initial state of a two-thread model enables both noncrit actions") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2);
  Model m(spec.programs, spec.registers);
  std::set<Action> en;
  for (const auto& e : m.out_edges(0)) en.insert(e.label);
  CHECK(en == std::set<Action>{Action::noncrit(0), Action::noncrit(1)});
}

TEST_CASE("atomic register: after start_read only order_read is enabled for the reader") {
  RegisterConfig cfg{"r", {0, 1}, 0, RegisterKind::Atomic};
  Lts reg = register_lts(cfg, 2);
  // find the target of start_read(0, r)
  bool found = false;
  for (const auto& [a, t] : reg.out[reg.initial]) {
    if (a != Action::start_read(0, 0)) continue;
    found = true;
    std::set<Action> of_thread0;
    for (Action e : enabled_in(reg, t))
      if (e.thread() == 0) of_thread0.insert(e);
    CHECK(of_thread0 == std::set<Action>{Action::order_read(0, 0)});
  }
  CHECK(found);
}

TEST_CASE("peterson product matches the lockstep composition oracle") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2);
  Model m(spec.programs, spec.registers);

  std::vector<Lts> comps;
  for (ThreadId t = 0; t < 2; ++t) comps.push_back(m.thread_lts(t));
  for (uint32_t r = 0; r < spec.registers.size(); ++r)
    comps.push_back(register_lts(spec.registers[r], 2, r));
  auto [states, transitions] = testsupport::lockstep_count(comps);
  CHECK(m.num_states() == states);
  CHECK(m.num_edges() == transitions);
}

TEST_CASE("composition is associative up to state-vector reindexing") {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 12; ++round) {
    auto ls = testsupport::random_deterministic_components(rng, 3);
    Lts flat = compose_parallel(ls);
    Lts left = compose_parallel({compose_parallel({ls[0], ls[1]}), ls[2]});
    Lts right = compose_parallel({ls[0], compose_parallel({ls[1], ls[2]})});
    auto sig = testsupport::canonical_signature_deterministic;
    CHECK(sig(flat) == sig(left));
    CHECK(sig(flat) == sig(right));
  }
}

TEST_CASE("every product transition projects to component transitions") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2).with_kind(RegisterKind::Safe);
  Model m(spec.programs, spec.registers);
  std::vector<Lts> comps;
  for (ThreadId t = 0; t < 2; ++t) comps.push_back(m.thread_lts(t));
  for (uint32_t r = 0; r < spec.registers.size(); ++r)
    comps.push_back(register_lts(spec.registers[r], 2, r));

  const auto& p = m.product();
  for (const auto& e : p.edges) {
    for (size_t c = 0; c < comps.size(); ++c) {
      uint32_t from = p.component_state(e.src, c);
      uint32_t to = p.component_state(e.dst, c);
      if (comps[c].in_alphabet(e.label)) {
        CHECK(comps[c].has_transition(from, e.label, to));
      } else {
        CHECK(from == to);
      }
    }
  }
}

TEST_CASE("re-running composition is deterministic") {
  AlgorithmSpec spec = algorithm_catalog("dekker", "base", 2);
  Model m1(spec.programs, spec.registers);
  Model m2(spec.programs, spec.registers);
  REQUIRE(m1.num_states() == m2.num_states());
  REQUIRE(m1.num_edges() == m2.num_edges());
  for (size_t i = 0; i < m1.product().edges.size(); ++i) {
    CHECK(m1.product().edges[i].src == m2.product().edges[i].src);
    CHECK(m1.product().edges[i].label == m2.product().edges[i].label);
    CHECK(m1.product().edges[i].dst == m2.product().edges[i].dst);
  }
}

TEST_CASE("state cap overflow reports an explicit error") {
  AlgorithmSpec spec = algorithm_catalog("peterson", "base", 2);
  ExploreCaps caps;
  caps.max_states = 10;
  CHECK_THROWS_AS(Model(spec.programs, spec.registers, caps), CapExceeded);
}

TEST_CASE("edge-list dump format") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.add_transition(s0, Action::start_write(0, 0, 1), s1);
  l.add_transition(s1, Action::crit(1), s0);
  std::string dump = dump_edges(l, [](RegisterId) { return std::string("flag0"); });
  CHECK(dump == "0 start_write(t=0,r=flag0,v=1) 1\n1 crit(t=1) 0\n");
}
