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
#include "justcheck/checker.hpp"

using namespace justcheck;

namespace {

Model catalog_model(const char* name, const char* variant, uint32_t n, RegisterKind k) {
  AlgorithmSpec s = algorithm_catalog(name, variant, n).with_kind(k);
  return Model(s.programs, s.registers);
}

}  // namespace

TEST_CASE("mutual exclusion verdict examples") {
  SECTION("peterson atomic holds") {
    Model m = catalog_model("peterson", "base", 2, RegisterKind::Atomic);
    CHECK(check_mutual_exclusion(m).holds);
  }
  SECTION("peterson safe violated, witness replays into a double-crit state") {
    Model m = catalog_model("peterson", "base", 2, RegisterKind::Safe);
    Verdict v = check_mutual_exclusion(m);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.safety_witness.has_value());
    StateId at = 0;
    for (const auto& t : *v.safety_witness) {
      REQUIRE(t.src == at);
      bool found = false;
      for (const auto& e : m.out_edges(t.src))
        found |= e.label == t.label && e.dst == t.dst;
      REQUIRE(found);
      at = t.dst;
    }
    std::set<ThreadId> crit_threads;
    for (const auto& e : m.out_edges(at))
      if (e.label.kind() == ActionKind::Crit) crit_threads.insert(e.label.thread());
    CHECK(crit_threads.size() >= 2);
  }
  SECTION("a single thread cannot conflict") {
    ProgramBuilder b(0);
    b.crit();
    std::vector<ThreadProgram> progs;
    progs.push_back(b.finish());
    Model m(std::move(progs), {});
    CHECK(check_mutual_exclusion(m).holds);
  }
}

TEST_CASE("nu core: a response on every cycle empties X") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.add_transition(s0, Action::start_read(0, 0), s1);
  l.add_transition(s1, Action::crit(0), s0);
  Model m = Model::from_explicit(l, 1);
  NuCore nu = nu_core(m, crit_all(), ConcurrencyMode::T);
  CHECK(nu.X.count() == 0);
}

TEST_CASE("nu core: states with only blockable actions enabled stay in X") {
  Lts l;
  StateId s0 = l.add_state(), s1 = l.add_state();
  l.add_transition(s0, Action::noncrit(0), s1);
  l.add_transition(s1, Action::crit(0), s0);
  Model m = Model::from_explicit(l, 1);
  NuCore nu = nu_core(m, crit_all(), ConcurrencyMode::T);
  CHECK(nu.X.get(0));       // may stay in the non-critical section forever
  CHECK_FALSE(nu.X.get(1)); // crit is unavoidable once pending
}

TEST_CASE("nu core is antitone in the response set and idempotent") {
  Model m = catalog_model("peterson", "base", 2, RegisterKind::Atomic);
  for (ConcurrencyMode mode : {ConcurrencyMode::T, ConcurrencyMode::S, ConcurrencyMode::I}) {
    NuCore small = nu_core(m, crit_of(0), mode);   // response subset
    NuCore big = nu_core(m, crit_all(), mode);     // response superset
    for (StateId s = 0; s < m.num_states(); ++s)
      if (big.X.get(s)) CHECK(small.X.get(s));
    NuCore again = nu_core(m, crit_all(), mode, big.X);
    CHECK(again.X == big.X);
  }
}

TEST_CASE("round-robin cycle extraction discharges every enabled class") {
  // two self-loops by different threads at one state: the cycle must
  // alternate both labels
  Lts l;
  StateId u = l.add_state();
  Action a = Action::finish_write(0, 0), b = Action::finish_write(1, 1);
  l.add_transition(u, a, u);
  l.add_transition(u, b, u);
  Model m = Model::from_explicit(l, 2);
  NuCore nu = nu_core(m, crit_all(), ConcurrencyMode::T);
  REQUIRE(nu.X.get(0));
  auto [ext, cycle] = extract_lasso_cycle(m, nu, 0, crit_all());
  REQUIRE_FALSE(cycle.empty());
  std::set<Action> labels;
  for (const auto& t : cycle) labels.insert(t.label);
  for (const auto& t : ext) labels.insert(t.label);
  CHECK(labels == std::set<Action>{a, b});
}

TEST_CASE("liveness verdicts around Dekker (Table 1 row)") {
  SECTION("safe registers, mode T: deadlock freedom violated") {
    Model m = catalog_model("dekker", "base", 2, RegisterKind::Safe);
    Verdict df = check_liveness(m, PropertyKind::DeadlockFreedom, ConcurrencyMode::T);
    CHECK_FALSE(df.holds);
    REQUIRE(df.liveness_witness.has_value());
    CHECK(validate_liveness_witness(m, *df.liveness_witness,
                                    PropertyKind::DeadlockFreedom, ConcurrencyMode::T));
  }
  SECTION("atomic registers, mode T: starvation freedom holds") {
    Model m = catalog_model("dekker", "base", 2, RegisterKind::Atomic);
    CHECK(check_liveness(m, PropertyKind::StarvationFreedom, ConcurrencyMode::T).holds);
  }
  SECTION("atomic registers, mode S: deadlock freedom holds, starvation violated") {
    Model m = catalog_model("dekker", "base", 2, RegisterKind::Atomic);
    CHECK(check_liveness(m, PropertyKind::DeadlockFreedom, ConcurrencyMode::S).holds);
    Verdict sf = check_liveness(m, PropertyKind::StarvationFreedom, ConcurrencyMode::S);
    REQUIRE_FALSE(sf.holds);
    REQUIRE(sf.liveness_witness.has_value());
    CHECK(validate_liveness_witness(m, *sf.liveness_witness,
                                    PropertyKind::StarvationFreedom, ConcurrencyMode::S));
  }
}

TEST_CASE("no liveness under I: peterson atomic, deadlock freedom fails") {
  Model m = catalog_model("peterson", "base", 2, RegisterKind::Atomic);
  Verdict df = check_liveness(m, PropertyKind::DeadlockFreedom, ConcurrencyMode::I);
  REQUIRE_FALSE(df.holds);
  REQUIRE(df.liveness_witness.has_value());
  CHECK(validate_liveness_witness(m, *df.liveness_witness,
                                  PropertyKind::DeadlockFreedom, ConcurrencyMode::I));
  // and under T it holds
  CHECK(check_liveness(m, PropertyKind::DeadlockFreedom, ConcurrencyMode::T).holds);
}

TEST_CASE("busy-wait lasso justness per mode") {
  // thread 0 busy-waits reading r (never sees the value it wants) while
  // thread 1 is parked with start_write thread-enabled
  std::vector<RegisterConfig> regs{boolean_register("r")};
  std::vector<ThreadProgram> programs;
  {
    ProgramBuilder b(0);
    uint32_t tmp = b.boolean();
    uint32_t loop = b.here(), pass = b.label();
    b.read(tmp, RegRef::direct(0));
    b.branch_true(eq(lv(tmp), kv(1)), pass);
    b.set(tmp, kv(0));
    b.jump(loop);
    b.place(pass);
    b.set(tmp, kv(0));
    b.crit();
    programs.push_back(b.finish());
  }
  {
    ProgramBuilder b(1);
    b.write(RegRef::direct(0), kv(1));
    b.crit();
    programs.push_back(b.finish());
  }
  regs[0].kind = RegisterKind::Atomic;
  Model m(programs, regs);

  // drive: noncrit(0), noncrit(1), then thread 0 loops one full read of r=0
  auto step = [&](StateId at, Action a) {
    for (const auto& e : m.out_edges(at))
      if (e.label == a) return e;
    FAIL("missing transition " << render(a));
    return m.out_edges(at)[0];
  };
  Lasso l;
  l.start = 0;
  StateId at = 0;
  for (Action a : {Action::noncrit(0), Action::noncrit(1)}) {
    auto e = step(at, a);
    l.prefix.push_back(e);
    at = e.dst;
  }
  StateId cyc_start = at;
  for (Action a : {Action::start_read(0, 0), Action::order_read(0, 0),
                   Action::finish_read(0, 0, 0)}) {
    auto e = step(at, a);
    l.cycle.push_back(e);
    at = e.dst;
  }
  REQUIRE(at == cyc_start);

  CHECK_FALSE(is_just_lasso(m, l, ConcurrencyMode::T));
  CHECK_FALSE(is_just_lasso(m, l, ConcurrencyMode::S));
  CHECK(is_just_lasso(m, l, ConcurrencyMode::I));
  CHECK(is_just_lasso(m, l, ConcurrencyMode::A));
  // the direct Def-2.2 procedure agrees
  CHECK_FALSE(just_lasso_direct(m, l, ConcurrencyMode::T));
  CHECK_FALSE(just_lasso_direct(m, l, ConcurrencyMode::S));
  CHECK(just_lasso_direct(m, l, ConcurrencyMode::I));
  CHECK(just_lasso_direct(m, l, ConcurrencyMode::A));

  // a lasso whose cycle moves both threads is just under every mode
  CHECK_THROWS_AS(is_just_lasso(m, Lasso{}, ConcurrencyMode::T), std::invalid_argument);
}

TEST_CASE("brute force agrees with the fixpoint on peterson, all modes") {
  Model m = catalog_model("peterson", "base", 2, RegisterKind::Atomic);
  for (ConcurrencyMode mode : {ConcurrencyMode::T, ConcurrencyMode::S,
                               ConcurrencyMode::I, ConcurrencyMode::A}) {
    for (PropertyKind p : {PropertyKind::DeadlockFreedom, PropertyKind::StarvationFreedom}) {
      Verdict fast = check_liveness(m, p, mode);
      Verdict slow = brute_force_liveness(m, p, mode, 1u << 20);
      INFO("mode " << mode_name(mode) << " property " << property_name(p));
      CHECK(fast.holds == slow.holds);
    }
  }
}

TEST_CASE("brute force rejects models beyond its bound") {
  Model m = catalog_model("peterson", "base", 2, RegisterKind::Atomic);
  CHECK_THROWS_AS(
      brute_force_liveness(m, PropertyKind::DeadlockFreedom, ConcurrencyMode::T, 10),
      std::invalid_argument);
}

TEST_CASE("two-state single-thread toy satisfies both liveness properties") {
  ProgramBuilder b(0);
  b.crit();
  std::vector<ThreadProgram> progs;
  progs.push_back(b.finish());
  Model m(std::move(progs), {});
  for (PropertyKind p : {PropertyKind::DeadlockFreedom, PropertyKind::StarvationFreedom}) {
    CHECK(check_liveness(m, p, ConcurrencyMode::T).holds);
    CHECK(brute_force_liveness(m, p, ConcurrencyMode::T).holds);
  }
}
