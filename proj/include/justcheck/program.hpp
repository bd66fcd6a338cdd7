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

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "justcheck/lts.hpp"
#include "justcheck/registers.hpp"

namespace justcheck {

/// Expressions range over the thread's locals only; they are folded into the
/// control state at compilation time and generate no actions.
using Expr = std::function<Value(const std::vector<Value>&)>;

/// A register operand: a group of register ids indexed by a local expression
/// (e.g. flag[tmp]). Plain operands are a singleton group with index 0.
struct RegRef {
  std::vector<uint32_t> regs;
  Expr index;

  static RegRef direct(uint32_t reg) {
    return RegRef{{reg}, [](const std::vector<Value>&) { return Value(0); }};
  }
  static RegRef indexed(std::vector<uint32_t> group, Expr idx) {
    return RegRef{std::move(group), std::move(idx)};
  }
};

struct Instr {
  enum class Op { Read, Write, Set, Branch, Jump, Crit } op;
  RegRef ref;          // Read/Write
  uint32_t local = 0;  // Read dest / Set dest
  Expr expr;           // Write value / Set value / Branch condition
  uint32_t target = 0;       // Branch taken / Jump
  uint32_t target_else = 0;  // Branch not taken
};

/// Structured pseudocode of one thread: the entry and exit protocols around a
/// single critical-section marker. The implicit outer loop alternates with
/// the non-critical section: noncrit(t) starts a round with all locals reset
/// to zero, and control wraps back to the non-critical section after the last
/// instruction.
struct ThreadProgram {
  ThreadId thread = 0;
  std::vector<uint32_t> local_sizes;
  std::vector<Instr> code;
};

namespace detail {

// Conservative CFG checks: exactly one crit per round.
inline void check_crit_shape(const ThreadProgram& p) {
  size_t n = p.code.size();
  auto nexts = [&](size_t pc) {
    std::vector<size_t> r;
    const Instr& in = p.code[pc];
    switch (in.op) {
      case Instr::Op::Branch:
        r.push_back(in.target);
        r.push_back(in.target_else);
        break;
      case Instr::Op::Jump:
        r.push_back(in.target);
        break;
      default:
        r.push_back(pc + 1);
        break;
    }
    return r;
  };
  for (size_t pc = 0; pc < n; ++pc)
    for (size_t t : nexts(pc))
      if (t > n) throw std::invalid_argument("jump target out of range");

  // reach `end` (pc == n) from 0 while avoiding Crit?
  std::vector<char> seen(n + 1, 0);
  std::vector<size_t> stack{0};
  bool crit_free_round = false;
  while (!stack.empty()) {
    size_t pc = stack.back();
    stack.pop_back();
    if (pc == n) {
      crit_free_round = true;
      break;
    }
    if (seen[pc] || p.code[pc].op == Instr::Op::Crit) continue;
    seen[pc] = 1;
    for (size_t t : nexts(pc)) stack.push_back(t);
  }
  if (crit_free_round)
    throw std::invalid_argument("program admits a round without a critical section");

  // reach another Crit from any Crit without passing `end`?
  for (size_t c = 0; c < n; ++c) {
    if (p.code[c].op != Instr::Op::Crit) continue;
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, c + 1);
    while (!stack.empty()) {
      size_t pc = stack.back();
      stack.pop_back();
      if (pc >= n || seen[pc]) continue;
      seen[pc] = 1;
      if (p.code[pc].op == Instr::Op::Crit)
        throw std::invalid_argument("program admits two critical sections in a round");
      for (size_t t : nexts(pc)) stack.push_back(t);
    }
  }
}

}  // namespace detail

/// Compiles a thread program to its LTS. Reads become start_read followed by
/// one finish_read branch per domain value (binding the destination local);
/// writes become start_write(v) . finish_write with v evaluated over the
/// locals; local computation and branching fold into the control state and
/// generate no actions.
inline Lts compile_thread(const ThreadProgram& p,
                          const std::vector<RegisterConfig>& registers) {
  for (const auto& in : p.code) {
    if (in.op == Instr::Op::Read || in.op == Instr::Op::Write) {
      if (in.ref.regs.empty())
        throw std::invalid_argument("register operand with empty group");
      for (uint32_t r : in.ref.regs)
        if (r >= registers.size())
          throw std::invalid_argument("register arity mismatch: unknown register id");
      if (in.op == Instr::Op::Read) {
        if (in.local >= p.local_sizes.size())
          throw std::invalid_argument("read destination is not a local");
        for (uint32_t r : in.ref.regs)
          for (Value d : registers[r].domain)
            if (d < 0 || uint32_t(d) >= p.local_sizes[in.local])
              throw std::invalid_argument(
                  "register arity mismatch: domain of " + registers[r].name +
                  " does not fit read destination");
      }
    }
  }
  detail::check_crit_shape(p);

  const size_t nlocals = p.local_sizes.size();
  const uint32_t end_pc = static_cast<uint32_t>(p.code.size());

  struct Key {
    uint32_t tag;  // 0 = ncs, 1 = control, 2 = in-read, 3 = in-write
    uint32_t pc;
    uint32_t reg;
    std::vector<Value> locals;
    bool operator<(const Key& o) const {
      return std::tie(tag, pc, reg, locals) < std::tie(o.tag, o.pc, o.reg, o.locals);
    }
  };

  Lts lts;
  std::map<Key, StateId> index;
  std::vector<Key> work;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = index.emplace(k, lts.num_states);
    if (inserted) {
      lts.add_state();
      work.push_back(k);
    }
    return it->second;
  };

  auto eval = [&](const Expr& e, const std::vector<Value>& locals) {
    return e(locals);
  };
  auto set_local = [&](std::vector<Value>& locals, uint32_t i, Value v) {
    if (v < 0 || uint32_t(v) >= p.local_sizes[i])
      throw std::invalid_argument("expression out of domain for local " +
                                  std::to_string(i));
    locals[i] = v;
  };
  auto resolve_reg = [&](const RegRef& ref, const std::vector<Value>& locals) {
    Value i = eval(ref.index, locals);
    if (i < 0 || size_t(i) >= ref.regs.size())
      throw std::invalid_argument("register index expression out of range");
    return ref.regs[i];
  };

  // Folds Set/Branch/Jump until the next action point.
  auto resolve = [&](uint32_t pc, std::vector<Value> locals) -> Key {
    std::set<std::pair<uint32_t, std::vector<Value>>> visited;
    while (pc < end_pc) {
      const Instr& in = p.code[pc];
      if (in.op == Instr::Op::Read || in.op == Instr::Op::Write ||
          in.op == Instr::Op::Crit)
        return Key{1, pc, 0, std::move(locals)};
      if (!visited.emplace(pc, locals).second)
        throw std::invalid_argument("control loop without actions at pc " +
                                    std::to_string(pc));
      switch (in.op) {
        case Instr::Op::Set:
          set_local(locals, in.local, eval(in.expr, locals));
          ++pc;
          break;
        case Instr::Op::Branch:
          pc = eval(in.expr, locals) != 0 ? in.target : in.target_else;
          break;
        case Instr::Op::Jump:
          pc = in.target;
          break;
        default:
          break;
      }
    }
    return Key{0, 0, 0, std::vector<Value>(nlocals, 0)};  // wrap to NCS
  };

  intern(Key{0, 0, 0, std::vector<Value>(nlocals, 0)});
  for (size_t w = 0; w < work.size(); ++w) {
    Key k = work[w];
    StateId s = index.at(k);
    if (k.tag == 0) {
      StateId n = intern(resolve(0, std::vector<Value>(nlocals, 0)));
      lts.add_transition(s, Action::noncrit(p.thread), n);
      continue;
    }
    if (k.tag == 2) {  // pending read: all finish_read(d) branches
      const Instr& in = p.code[k.pc];
      for (Value d : registers[k.reg].domain) {
        auto locals = k.locals;
        set_local(locals, in.local, d);
        StateId n = intern(resolve(k.pc + 1, std::move(locals)));
        lts.add_transition(s, Action::finish_read(p.thread, k.reg, d), n);
      }
      continue;
    }
    if (k.tag == 3) {  // pending write
      StateId n = intern(resolve(k.pc + 1, k.locals));
      lts.add_transition(s, Action::finish_write(p.thread, k.reg), n);
      continue;
    }
    const Instr& in = p.code[k.pc];
    switch (in.op) {
      case Instr::Op::Read: {
        uint32_t r = resolve_reg(in.ref, k.locals);
        StateId n = intern(Key{2, k.pc, r, k.locals});
        lts.add_transition(s, Action::start_read(p.thread, r), n);
        break;
      }
      case Instr::Op::Write: {
        uint32_t r = resolve_reg(in.ref, k.locals);
        Value v = eval(in.expr, k.locals);
        registers[r].index_of(v);  // expression out of domain otherwise
        StateId n = intern(Key{3, k.pc, r, k.locals});
        lts.add_transition(s, Action::start_write(p.thread, r, v), n);
        break;
      }
      case Instr::Op::Crit: {
        StateId n = intern(resolve(k.pc + 1, k.locals));
        lts.add_transition(s, Action::crit(p.thread), n);
        break;
      }
      default:
        throw std::logic_error("unexpected instruction at action point");
    }
  }

  // Full interface alphabet of this thread over the register table (required
  // for CSP synchronisation even for registers the program never touches).
  lts.declare_action(Action::crit(p.thread));
  lts.declare_action(Action::noncrit(p.thread));
  for (uint32_t r = 0; r < registers.size(); ++r) {
    lts.declare_action(Action::start_read(p.thread, r));
    lts.declare_action(Action::finish_write(p.thread, r));
    for (Value d : registers[r].domain) {
      lts.declare_action(Action::finish_read(p.thread, r, d));
      lts.declare_action(Action::start_write(p.thread, r, d));
    }
  }
  return lts;
}

/// Checks the two thread-LTS well-formedness constraints: every start_read
/// leads to a state enabling exactly the finish_read(d) for all d in the
/// register's domain; every start_write leads to a state enabling only the
/// matching finish_write; and finish actions are enabled nowhere else.
inline std::vector<std::string> validate_thread_lts(const Lts& lts) {
  std::vector<std::string> violations;
  std::map<RegisterId, std::set<Value>> domain;  // from the declared alphabet
  for (Action a : lts.actions)
    if (a.kind() == ActionKind::FinishRead) domain[a.reg()].insert(a.value());

  std::set<StateId> post_read, post_write;
  for (StateId s = 0; s < lts.num_states; ++s) {
    for (const auto& [a, q] : lts.out[s]) {
      if (a.kind() == ActionKind::StartRead) {
        post_read.insert(q);
        std::set<Action> want;
        for (Value d : domain[a.reg()])
          want.insert(Action::finish_read(a.thread(), a.reg(), d));
        if (want.empty())
          violations.push_back("state " + std::to_string(q) +
                               ": no finish_read labels declared for register " +
                               std::to_string(a.reg()));
        else if (enabled_in(lts, q) != want)
          violations.push_back(
              "state " + std::to_string(q) +
              ": after start_read, enabled set is not exactly finish_read(d) for all d");
      } else if (a.kind() == ActionKind::StartWrite) {
        post_write.insert(q);
        std::set<Action> want{Action::finish_write(a.thread(), a.reg())};
        if (enabled_in(lts, q) != want)
          violations.push_back(
              "state " + std::to_string(q) +
              ": after start_write, enabled set is not exactly {finish_write}");
      }
    }
  }
  for (StateId s = 0; s < lts.num_states; ++s) {
    for (const auto& [a, q] : lts.out[s]) {
      (void)q;
      if (a.kind() == ActionKind::FinishRead && !post_read.count(s))
        violations.push_back("state " + std::to_string(s) +
                             ": finish_read enabled outside a post-start_read state");
      if (a.kind() == ActionKind::FinishWrite && !post_write.count(s))
        violations.push_back("state " + std::to_string(s) +
                             ": finish_write enabled outside a post-start_write state");
    }
  }
  return violations;
}

// ---- expression combinators ----------------------------------------------

inline Expr lv(uint32_t i) {
  return [i](const std::vector<Value>& l) { return l[i]; };
}
inline Expr kv(Value c) {
  return [c](const std::vector<Value>&) { return c; };
}
inline Expr unop(Expr a, std::function<Value(Value)> f) {
  return [a = std::move(a), f = std::move(f)](const std::vector<Value>& l) {
    return f(a(l));
  };
}
inline Expr binop(Expr a, Expr b, std::function<Value(Value, Value)> f) {
  return [a = std::move(a), b = std::move(b), f = std::move(f)](
             const std::vector<Value>& l) { return f(a(l), b(l)); };
}
inline Expr eq(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return Value(x == y); });
}
inline Expr ne(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return Value(x != y); });
}
inline Expr lt(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return Value(x < y); });
}
inline Expr ge(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return Value(x >= y); });
}
inline Expr add(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return x + y; });
}
inline Expr sub(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return x - y; });
}
inline Expr mod(Expr a, Value m) {
  return unop(std::move(a), [m](Value x) { return ((x % m) + m) % m; });
}
inline Expr max2(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return x > y ? x : y; });
}
inline Expr min2(Expr a, Expr b) {
  return binop(std::move(a), std::move(b), [](Value x, Value y) { return x < y ? x : y; });
}
inline Expr not_(Expr a) {
  return unop(std::move(a), [](Value x) { return Value(x == 0); });
}
inline Expr bit(Expr mask, Expr i) {
  return binop(std::move(mask), std::move(i),
               [](Value m, Value i) { return Value(m >> i & 1); });
}

/// Small fluent builder used by the algorithm catalog; labels are placed and
/// then bound, with all jump targets resolved at finish().
class ProgramBuilder {
 public:
  explicit ProgramBuilder(ThreadId t) { p_.thread = t; }

  uint32_t local(uint32_t size) {
    p_.local_sizes.push_back(size);
    return static_cast<uint32_t>(p_.local_sizes.size() - 1);
  }
  uint32_t boolean() { return local(2); }

  uint32_t label() {
    label_pos_.push_back(kUnbound);
    return static_cast<uint32_t>(label_pos_.size() - 1);
  }
  void place(uint32_t lbl) {
    if (label_pos_.at(lbl) != kUnbound) throw std::invalid_argument("label placed twice");
    label_pos_[lbl] = static_cast<uint32_t>(p_.code.size());
  }
  uint32_t here() {
    uint32_t l = label();
    place(l);
    return l;
  }

  void read(uint32_t dest, RegRef ref) {
    Instr in;
    in.op = Instr::Op::Read;
    in.ref = std::move(ref);
    in.local = dest;
    p_.code.push_back(std::move(in));
  }
  void write(RegRef ref, Expr value) {
    Instr in;
    in.op = Instr::Op::Write;
    in.ref = std::move(ref);
    in.expr = std::move(value);
    p_.code.push_back(std::move(in));
  }
  void set(uint32_t local, Expr value) {
    Instr in;
    in.op = Instr::Op::Set;
    in.local = local;
    in.expr = std::move(value);
    p_.code.push_back(std::move(in));
  }
  void branch_true(Expr cond, uint32_t lbl) {
    Instr in;
    in.op = Instr::Op::Branch;
    in.expr = std::move(cond);
    in.target = lbl;
    in.target_else = kFallthrough;
    fixup_.push_back(p_.code.size());
    p_.code.push_back(std::move(in));
  }
  void jump(uint32_t lbl) {
    Instr in;
    in.op = Instr::Op::Jump;
    in.target = lbl;
    fixup_.push_back(p_.code.size());
    p_.code.push_back(std::move(in));
  }
  void crit() {
    Instr in;
    in.op = Instr::Op::Crit;
    p_.code.push_back(std::move(in));
  }

  ThreadProgram finish() {
    for (size_t i : fixup_) {
      Instr& in = p_.code[i];
      if (in.target >= label_pos_.size() || label_pos_[in.target] == kUnbound)
        throw std::invalid_argument("goto target label does not exist");
      in.target = label_pos_[in.target];
      if (in.op == Instr::Op::Branch)
        in.target_else = static_cast<uint32_t>(i + 1);
    }
    return std::move(p_);
  }

 private:
  static constexpr uint32_t kUnbound = 0xFFFFFFFF;
  static constexpr uint32_t kFallthrough = 0xFFFFFFFE;
  ThreadProgram p_;
  std::vector<uint32_t> label_pos_;
  std::vector<size_t> fixup_;
};

}  // namespace justcheck
