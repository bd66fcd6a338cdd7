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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace justcheck {

/// A thread performing a full read is start_read -- order_read -- finish_read(d)
/// (the order step exists only in the atomic register model); a write is
/// start_write(d) -- order_write -- finish_write. crit/noncrit are the thread
/// local actions marking entry into the critical section and departure from
/// the non-critical section.
enum class ActionKind : uint8_t {
  StartRead = 0,
  FinishRead,
  StartWrite,
  FinishWrite,
  OrderRead,
  OrderWrite,
  Crit,
  NonCrit,
};

using Value = int32_t;
using ThreadId = uint32_t;
using RegisterId = uint32_t;

constexpr RegisterId kNoRegister = 0xFF;
constexpr Value kNoValue = -1;

/// Action label: (kind, thread, register, value) packed into 32 bits so that
/// labels compare and hash as integers. The thr mapping is total, reg is
/// partial (kNoRegister for thread local actions), and the value slot is used
/// only by FinishRead and StartWrite.
class Action {
 public:
  Action() : bits_(0) {}

  static Action start_read(ThreadId t, RegisterId r) {
    return make(ActionKind::StartRead, t, r, kNoValue);
  }
  static Action finish_read(ThreadId t, RegisterId r, Value d) {
    check_value(d);
    return make(ActionKind::FinishRead, t, r, d);
  }
  static Action start_write(ThreadId t, RegisterId r, Value d) {
    check_value(d);
    return make(ActionKind::StartWrite, t, r, d);
  }
  static Action finish_write(ThreadId t, RegisterId r) {
    return make(ActionKind::FinishWrite, t, r, kNoValue);
  }
  static Action order_read(ThreadId t, RegisterId r) {
    return make(ActionKind::OrderRead, t, r, kNoValue);
  }
  static Action order_write(ThreadId t, RegisterId r) {
    return make(ActionKind::OrderWrite, t, r, kNoValue);
  }
  static Action crit(ThreadId t) {
    return make(ActionKind::Crit, t, kNoRegister, kNoValue);
  }
  static Action noncrit(ThreadId t) {
    return make(ActionKind::NonCrit, t, kNoRegister, kNoValue);
  }

  ActionKind kind() const { return static_cast<ActionKind>(bits_ >> 28); }
  ThreadId thread() const { return (bits_ >> 24) & 0xF; }
  RegisterId reg() const { return (bits_ >> 16) & 0xFF; }
  bool has_register() const { return reg() != kNoRegister; }
  Value value() const { return static_cast<Value>(bits_ & 0xFFFF) - 1; }
  bool has_value() const { return (bits_ & 0xFFFF) != 0; }

  bool is_start_read() const { return kind() == ActionKind::StartRead; }
  bool is_start_write() const { return kind() == ActionKind::StartWrite; }
  bool is_start() const { return is_start_read() || is_start_write(); }
  bool is_blockable() const { return kind() == ActionKind::NonCrit; }

  /// Register interface actions synchronise between one thread and one
  /// register; order actions are register local; crit/noncrit are thread
  /// local.
  bool is_register_local() const {
    return kind() == ActionKind::OrderRead || kind() == ActionKind::OrderWrite;
  }
  bool is_thread_local() const { return reg() == kNoRegister; }

  uint32_t bits() const { return bits_; }

  friend bool operator==(Action a, Action b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Action a, Action b) { return a.bits_ != b.bits_; }
  friend bool operator<(Action a, Action b) { return a.bits_ < b.bits_; }

 private:
  static void check_value(Value d) {
    if (d < 0 || d > 0xFFFE) throw std::invalid_argument("action value out of range");
  }
  static Action make(ActionKind k, ThreadId t, RegisterId r, Value d) {
    if (t > 0xF) throw std::invalid_argument("thread id out of range");
    if (r > 0xFF) throw std::invalid_argument("register id out of range");
    Action a;
    a.bits_ = (static_cast<uint32_t>(k) << 28) | (t << 24) | (r << 16) |
              static_cast<uint32_t>(d + 1);
    return a;
  }

  uint32_t bits_;
};

inline const char* kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::StartRead: return "start_read";
    case ActionKind::FinishRead: return "finish_read";
    case ActionKind::StartWrite: return "start_write";
    case ActionKind::FinishWrite: return "finish_write";
    case ActionKind::OrderRead: return "order_read";
    case ActionKind::OrderWrite: return "order_write";
    case ActionKind::Crit: return "crit";
    case ActionKind::NonCrit: return "noncrit";
  }
  return "?";
}

/// Renders e.g. `start_write(t=0,r=flag0,v=1)` or `crit(t=1)`. The register
/// name lookup is supplied by the owning model; by default register ids print
/// as r<k>.
inline std::string render(Action a,
                          const std::function<std::string(RegisterId)>& reg_name = {}) {
  std::string s = kind_name(a.kind());
  s += "(t=" + std::to_string(a.thread());
  if (a.has_register()) {
    s += ",r=";
    s += reg_name ? reg_name(a.reg()) : ("r" + std::to_string(a.reg()));
  }
  if (a.has_value()) s += ",v=" + std::to_string(a.value());
  s += ")";
  return s;
}

}  // namespace justcheck

template <>
struct std::hash<justcheck::Action> {
  size_t operator()(justcheck::Action a) const noexcept {
    return std::hash<uint32_t>()(a.bits());
  }
};
