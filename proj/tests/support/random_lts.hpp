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

#include <random>
#include <sstream>
#include <vector>

#include "justcheck/lts.hpp"

namespace testsupport {

/// Deterministic random components over a small shared label pool (so that
/// some actions synchronise): at most one successor per (state, label).
inline std::vector<justcheck::Lts> random_deterministic_components(std::mt19937_64& rng,
                                                                   size_t k) {
  using namespace justcheck;
  std::vector<Action> pool;
  for (ThreadId t = 0; t < 3; ++t) {
    pool.push_back(Action::crit(t));
    pool.push_back(Action::noncrit(t));
  }
  std::vector<Lts> out;
  for (size_t c = 0; c < k; ++c) {
    Lts l;
    size_t n = 2 + rng() % 3;
    for (size_t s = 0; s < n; ++s) l.add_state();
    for (StateId s = 0; s < l.num_states; ++s) {
      size_t fanout = rng() % 3;
      std::vector<Action> picked;
      for (size_t f = 0; f < fanout; ++f) {
        Action a = pool[rng() % pool.size()];
        bool dup = false;
        for (Action p : picked) dup |= p == a;
        if (dup) continue;
        picked.push_back(a);
        l.add_transition(s, a, StateId(rng() % n));
      }
    }
    // occasionally declare an extra action that is never enabled
    if (rng() % 2) l.declare_action(pool[rng() % pool.size()]);
    out.push_back(std::move(l));
  }
  return out;
}

/// Canonical form of a deterministic LTS's reachable part: BFS numbering with
/// label-sorted successor order. Equal signatures = isomorphic reachable LTSs.
inline std::string canonical_signature_deterministic(const justcheck::Lts& l) {
  using namespace justcheck;
  std::vector<int64_t> canon(l.num_states, -1);
  std::vector<StateId> order{l.initial};
  canon[l.initial] = 0;
  std::ostringstream os;
  for (size_t q = 0; q < order.size(); ++q) {
    StateId s = order[q];
    for (const auto& [a, t] : l.out[s]) {  // sorted by label
      if (canon[t] < 0) {
        canon[t] = int64_t(order.size());
        order.push_back(t);
      }
      os << q << ":" << a.bits() << ">" << canon[t] << ";";
    }
  }
  return os.str();
}

}  // namespace testsupport
