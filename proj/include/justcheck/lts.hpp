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
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "justcheck/action.hpp"

namespace justcheck {

using StateId = uint32_t;

struct Transition {
  StateId src;
  Action label;
  StateId dst;

  friend bool operator==(const Transition& a, const Transition& b) {
    return a.src == b.src && a.label == b.label && a.dst == b.dst;
  }
};

/// Finite labelled transition system with an explicitly declared action set.
/// States are dense ids 0..num_states-1. For parallel compositions,
/// state_components records the per-component local state of every product
/// state so that threads and registers stay individually addressable.
struct Lts {
  StateId num_states = 0;
  StateId initial = 0;
  std::vector<Action> actions;                       // declared alphabet, sorted
  std::vector<std::vector<std::pair<Action, StateId>>> out;  // per-state successors
  std::vector<std::vector<StateId>> state_components;        // empty unless composed

  void declare_action(Action a) {
    auto it = std::lower_bound(actions.begin(), actions.end(), a);
    if (it == actions.end() || *it != a) actions.insert(it, a);
  }

  bool in_alphabet(Action a) const {
    return std::binary_search(actions.begin(), actions.end(), a);
  }

  StateId add_state() {
    out.emplace_back();
    return num_states++;
  }

  void add_transition(StateId s, Action a, StateId t) {
    if (s >= num_states || t >= num_states)
      throw std::invalid_argument("transition endpoint not a state");
    declare_action(a);
    auto& v = out[s];
    auto p = std::make_pair(a, t);
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || *it != p) v.insert(it, p);
  }

  bool has_transition(StateId s, Action a, StateId t) const {
    const auto& v = out[s];
    return std::binary_search(v.begin(), v.end(), std::make_pair(a, t));
  }

  size_t num_transitions() const {
    size_t n = 0;
    for (const auto& v : out) n += v.size();
    return n;
  }
};

/// Exactly the labels with an outgoing transition from s.
inline std::set<Action> enabled_in(const Lts& lts, StateId s) {
  if (s >= lts.num_states) throw std::out_of_range("enabled_in: unknown state");
  std::set<Action> r;
  for (const auto& [a, t] : lts.out[s]) r.insert(a);
  return r;
}

inline bool enables(const Lts& lts, StateId s, Action a) {
  const auto& v = lts.out[s];
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(a, StateId(0)));
  return it != v.end() && it->first == a;
}

/// Finite representation of the infinite path prefix . cycle^omega. The cycle
/// starts at the last state of the prefix and is non-empty.
struct Lasso {
  StateId start = 0;                 // first state of the prefix
  std::vector<Transition> prefix;    // may be empty
  std::vector<Transition> cycle;     // non-empty; cycle.back().dst == entry()

  StateId entry() const { return prefix.empty() ? start : prefix.back().dst; }

  bool well_formed() const {
    if (cycle.empty()) return false;
    StateId at = start;
    for (const auto& t : prefix) {
      if (t.src != at) return false;
      at = t.dst;
    }
    if (cycle.front().src != at) return false;
    for (const auto& t : cycle) {
      if (t.src != at) return false;
      at = t.dst;
    }
    return at == entry();
  }
};

/// Debug dump: one line per transition, `<state-id> <label> <state-id>`.
inline std::string dump_edges(const Lts& lts,
                              const std::function<std::string(RegisterId)>& reg_name = {}) {
  std::ostringstream os;
  for (StateId s = 0; s < lts.num_states; ++s)
    for (const auto& [a, t] : lts.out[s])
      os << s << " " << render(a, reg_name) << " " << t << "\n";
  return os.str();
}

}  // namespace justcheck
