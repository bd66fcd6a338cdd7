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

#include <memory>
#include <random>

#include "justcheck/model.hpp"

namespace testsupport {

/// Random two-thread protocols over one shared binary register: short entry
/// and exit sequences of writes, reads, busy-waits and conditional writes
/// around the critical section. Most are not mutual exclusion algorithms;
/// they exist to exercise the liveness machinery.
inline justcheck::ThreadProgram random_program(std::mt19937_64& rng,
                                               justcheck::ThreadId t) {
  using namespace justcheck;
  ProgramBuilder b(t);
  uint32_t tmp = b.boolean();
  auto reg = RegRef::direct(0);
  auto emit = [&]() {
    switch (rng() % 4) {
      case 0:
        b.write(reg, kv(Value(rng() % 2)));
        break;
      case 1:
        b.read(tmp, reg);
        b.set(tmp, kv(0));
        break;
      case 2: {  // busy wait for a value
        Value want = Value(rng() % 2);
        uint32_t loop = b.here(), pass = b.label();
        b.read(tmp, reg);
        b.branch_true(eq(lv(tmp), kv(want)), pass);
        b.set(tmp, kv(0));
        b.jump(loop);
        b.place(pass);
        b.set(tmp, kv(0));
        break;
      }
      default: {  // conditional write
        Value when = Value(rng() % 2);
        uint32_t skip = b.label();
        b.read(tmp, reg);
        b.branch_true(ne(lv(tmp), kv(when)), skip);
        b.set(tmp, kv(0));
        b.write(reg, kv(Value(rng() % 2)));
        uint32_t after = b.label();
        b.jump(after);
        b.place(skip);
        b.set(tmp, kv(0));
        b.place(after);
        break;
      }
    }
  };
  size_t entry = 1 + rng() % 3, exit = rng() % 2;
  for (size_t k = 0; k < entry; ++k) emit();
  b.crit();
  for (size_t k = 0; k < exit; ++k) emit();
  return b.finish();
}

/// A random tiny composed model: 2 threads, one binary register of the given
/// kind, at most `max_states` reachable states (regenerates otherwise).
inline std::unique_ptr<justcheck::Model> random_model(std::mt19937_64& rng,
                                                      justcheck::RegisterKind kind,
                                                      size_t max_states = 200) {
  using namespace justcheck;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<ThreadProgram> programs;
    programs.push_back(random_program(rng, 0));
    programs.push_back(random_program(rng, 1));
    std::vector<RegisterConfig> regs{boolean_register("r")};
    regs[0].kind = kind;
    auto m = std::make_unique<Model>(std::move(programs), std::move(regs));
    if (m->num_states() <= max_states) return m;
  }
  throw std::runtime_error("could not generate a small random model");
}

/// A random lasso in the model: random-walk prefix, then walk until a state
/// repeats and close that cycle.
inline justcheck::Lasso random_lasso(const justcheck::Model& m, std::mt19937_64& rng) {
  using namespace justcheck;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Lasso l;
    l.start = 0;
    StateId at = 0;
    size_t steps = rng() % 8;
    bool stuck = false;
    for (size_t k = 0; k < steps; ++k) {
      auto es = m.out_edges(at);
      if (es.empty()) {
        stuck = true;
        break;
      }
      const Transition& e = es[rng() % es.size()];
      l.prefix.push_back(e);
      at = e.dst;
    }
    if (stuck) continue;
    std::map<StateId, size_t> pos{{at, 0}};
    std::vector<Transition> walk;
    while (walk.size() < 4 * m.num_states() + 8) {
      auto es = m.out_edges(at);
      if (es.empty()) break;
      const Transition& e = es[rng() % es.size()];
      walk.push_back(e);
      at = e.dst;
      auto it = pos.find(at);
      if (it != pos.end()) {
        l.prefix.insert(l.prefix.end(), walk.begin(), walk.begin() + it->second);
        l.cycle.assign(walk.begin() + it->second, walk.end());
        return l;
      }
      pos[at] = walk.size();
    }
  }
  throw std::runtime_error("could not sample a lasso");
}

}  // namespace testsupport
