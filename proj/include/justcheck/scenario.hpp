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

#include <map>
#include <set>
#include <vector>

#include "justcheck/registers.hpp"

namespace justcheck {

/// One invocation or response in a fixed overlap schedule on a single
/// register. Read responses bind the returned value to the next slot of the
/// outcome tuple.
struct ScenarioEvent {
  enum class Kind { StartRead, FinishRead, StartWrite, FinishWrite } kind;
  ThreadId thread = 0;
  Value value = 0;  // StartWrite only
};

using ScenarioScript = std::vector<ScenarioEvent>;

/// The seven-operation schedule on register x over {0,1,2}: w(0), then two
/// non-overlapping reads, then r3/r4/r5 all overlapping the long write w(2),
/// with r4 and r5 mutually overlapping.
inline ScenarioScript appendix_a_script() {
  using K = ScenarioEvent::Kind;
  return {
      {K::StartWrite, 0, 0}, {K::FinishWrite, 0},       // w1: x <- 0
      {K::StartRead, 1},     {K::StartRead, 2},
      {K::FinishRead, 1},                               // a
      {K::FinishRead, 2},                               // b
      {K::StartRead, 1},                                // r3
      {K::StartWrite, 0, 2},                            // w2: x <- 2 (long)
      {K::FinishRead, 1},                               // c
      {K::StartRead, 1},     {K::StartRead, 2},         // r4, r5 overlap
      {K::FinishRead, 1},                               // d
      {K::FinishRead, 2},                               // e
      {K::FinishWrite, 0},
  };
}

/// Enumerates every tuple of read results the register model permits for the
/// script, interleaving the register-local order actions in all possible
/// ways.
inline std::set<std::vector<Value>> run_scenario(const ScenarioScript& script,
                                                 const RegisterConfig& cfg,
                                                 uint32_t nthreads) {
  // one operation per thread at a time
  {
    std::vector<int> pending(nthreads, 0);  // 0 idle, 1 read, 2 write
    for (const auto& ev : script) {
      if (ev.thread >= nthreads)
        throw std::invalid_argument("scenario thread id out of range");
      int& p = pending[ev.thread];
      switch (ev.kind) {
        case ScenarioEvent::Kind::StartRead:
          if (p) throw std::invalid_argument("thread already has a pending operation");
          p = 1;
          break;
        case ScenarioEvent::Kind::StartWrite:
          if (p) throw std::invalid_argument("thread already has a pending operation");
          p = 2;
          break;
        case ScenarioEvent::Kind::FinishRead:
          if (p != 1) throw std::invalid_argument("finish_read without a pending read");
          p = 0;
          break;
        case ScenarioEvent::Kind::FinishWrite:
          if (p != 2) throw std::invalid_argument("finish_write without a pending write");
          p = 0;
          break;
      }
    }
  }

  RegisterComponent rc(0, cfg, nthreads);
  std::map<std::pair<size_t, StateId>, std::set<std::vector<Value>>> memo;

  std::function<const std::set<std::vector<Value>>&(size_t, StateId)> go =
      [&](size_t idx, StateId st) -> const std::set<std::vector<Value>>& {
    auto key = std::make_pair(idx, st);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    std::set<std::vector<Value>> out;
    if (idx == script.size()) {
      out.insert({});
    } else {
      const ScenarioEvent& ev = script[idx];
      for (const auto& [a, succ] : rc.successors(st)) {
        if (a.thread() != ev.thread) continue;
        switch (ev.kind) {
          case ScenarioEvent::Kind::FinishRead:
            if (a.kind() == ActionKind::FinishRead)
              for (const auto& suf : go(idx + 1, succ)) {
                std::vector<Value> t{a.value()};
                t.insert(t.end(), suf.begin(), suf.end());
                out.insert(std::move(t));
              }
            break;
          case ScenarioEvent::Kind::StartRead:
            if (a.kind() == ActionKind::StartRead)
              for (const auto& suf : go(idx + 1, succ)) out.insert(suf);
            break;
          case ScenarioEvent::Kind::StartWrite:
            if (a.kind() == ActionKind::StartWrite && a.value() == ev.value)
              for (const auto& suf : go(idx + 1, succ)) out.insert(suf);
            break;
          case ScenarioEvent::Kind::FinishWrite:
            if (a.kind() == ActionKind::FinishWrite)
              for (const auto& suf : go(idx + 1, succ)) out.insert(suf);
            break;
        }
      }
    }
    // register-local order actions may fire between script events
    for (const auto& [a, succ] : rc.successors(st))
      if (a.is_register_local())
        for (const auto& suf : go(idx, succ)) out.insert(suf);
    return memo.emplace(key, std::move(out)).first->second;
  };

  return go(0, rc.initial_state());
}

inline std::set<std::vector<Value>> run_appendix_a(RegisterKind kind) {
  RegisterConfig cfg{"x", {0, 1, 2}, 0, kind};
  return run_scenario(appendix_a_script(), cfg, 3);
}

}  // namespace justcheck
