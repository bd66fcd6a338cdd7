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

#include <optional>
#include <string>

#include "justcheck/action.hpp"
#include "justcheck/compose.hpp"
#include "justcheck/lts.hpp"

namespace justcheck {

/// The four concurrency relations, by how much register access blocks:
///   T  thread interference only (non-blocking reads and writes)
///   S  start writes also interfere with starts on the same register
///   I  additionally start reads interfere with start writes
///   A  additionally start reads interfere with start reads
enum class ConcurrencyMode : uint8_t { T, S, I, A };

inline const char* mode_name(ConcurrencyMode m) {
  switch (m) {
    case ConcurrencyMode::T: return "T";
    case ConcurrencyMode::S: return "S";
    case ConcurrencyMode::I: return "I";
    case ConcurrencyMode::A: return "A";
  }
  return "?";
}

/// Only noncrit(t) is blockable: a thread may stay in its non-critical
/// section forever.
inline bool blockable(Action a) { return a.kind() == ActionKind::NonCrit; }

/// True iff b interferes with a under the given mode (the complement of the
/// concurrency relation). Every relation contains same-thread interference;
/// crit/noncrit carry no register, so they interfere via thread identity only.
inline bool interferes(ConcurrencyMode m, Action a, Action b) {
  if (a.thread() == b.thread()) return true;
  if (m == ConcurrencyMode::T) return false;
  if (!a.has_register() || a.reg() != b.reg()) return false;
  switch (m) {
    case ConcurrencyMode::S:
      return a.is_start() && b.is_start_write();
    case ConcurrencyMode::I:
      return (a.is_start() && b.is_start_write()) ||
             (a.is_start_write() && b.is_start_read());
    case ConcurrencyMode::A:
      return a.is_start() && b.is_start();
    default:
      return false;
  }
}

/// Finite descriptor of elim_C(a) = { b | interferes(C, a, b) }: same-thread
/// interference plus, for start actions under S/I/A, one register component.
/// Actions with equal descriptors have identical interferer sets, which lets
/// the fixpoint batch its backward sweeps per class.
struct InterfererClass {
  enum class Extra : uint8_t { None, WritesOn, StartsOn };

  ThreadId thread = 0;
  Extra extra = Extra::None;
  RegisterId reg = kNoRegister;

  bool matches(Action b) const {
    if (b.thread() == thread) return true;
    switch (extra) {
      case Extra::None: return false;
      case Extra::WritesOn: return b.is_start_write() && b.reg() == reg;
      case Extra::StartsOn: return b.is_start() && b.reg() == reg;
    }
    return false;
  }

  friend bool operator==(const InterfererClass& a, const InterfererClass& b) {
    return a.thread == b.thread && a.extra == b.extra && a.reg == b.reg;
  }
  friend bool operator<(const InterfererClass& a, const InterfererClass& b) {
    return std::tie(a.thread, a.extra, a.reg) < std::tie(b.thread, b.extra, b.reg);
  }
};

inline InterfererClass interferer_class(ConcurrencyMode m, Action a) {
  InterfererClass c;
  c.thread = a.thread();
  switch (m) {
    case ConcurrencyMode::T:
      break;
    case ConcurrencyMode::S:
      if (a.is_start()) {
        c.extra = InterfererClass::Extra::WritesOn;
        c.reg = a.reg();
      }
      break;
    case ConcurrencyMode::I:
      if (a.is_start_read()) {
        c.extra = InterfererClass::Extra::WritesOn;
        c.reg = a.reg();
      } else if (a.is_start_write()) {
        c.extra = InterfererClass::Extra::StartsOn;
        c.reg = a.reg();
      }
      break;
    case ConcurrencyMode::A:
      if (a.is_start()) {
        c.extra = InterfererClass::Extra::StartsOn;
        c.reg = a.reg();
      }
      break;
  }
  return c;
}

struct ThreadConsistencyViolation {
  StateId state;
  Action enabled;   // a, enabled at state
  Action taken;     // b, with thr(a) != thr(b)
  StateId successor;  // where a is no longer enabled
};

/// Exhaustively checks Def 4.2: an enabled action survives any transition of
/// a different thread. Holds for compositions built from the safe/regular/
/// atomic register processes (Lemma 4.3); fails for the fine-tuned blocking
/// register variants.
inline std::optional<ThreadConsistencyViolation> check_thread_consistency(
    const Product& p) {
  for (StateId s = 0; s < p.num_states; ++s) {
    for (uint64_t ei = p.edge_offsets[s]; ei < p.edge_offsets[s + 1]; ++ei) {
      const Transition& e = p.edges[ei];
      for (uint64_t ai = p.edge_offsets[s]; ai < p.edge_offsets[s + 1]; ++ai) {
        Action a = p.edges[ai].label;
        if (a.thread() == e.label.thread()) continue;
        bool still = false;
        for (uint64_t bi = p.edge_offsets[e.dst]; bi < p.edge_offsets[e.dst + 1]; ++bi)
          if (p.edges[bi].label == a) {
            still = true;
            break;
          }
        if (!still) return ThreadConsistencyViolation{s, a, e.label, e.dst};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ThreadConsistencyViolation> check_thread_consistency(
    const Lts& lts) {
  for (StateId s = 0; s < lts.num_states; ++s) {
    for (const auto& [b, sp] : lts.out[s]) {
      for (const auto& [a, unused] : lts.out[s]) {
        (void)unused;
        if (a.thread() == b.thread()) continue;
        if (!enables(lts, sp, a)) return ThreadConsistencyViolation{s, a, b, sp};
      }
    }
  }
  return std::nullopt;
}

}  // namespace justcheck
