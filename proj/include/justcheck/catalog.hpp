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

#include <string>
#include <vector>

#include "justcheck/program.hpp"

namespace justcheck {

struct AlgorithmSpec {
  std::string name;
  std::string variant;
  std::string display_name;
  uint32_t nthreads = 2;
  std::vector<RegisterConfig> registers;
  std::vector<ThreadProgram> programs;

  /// Applies one register kind to the whole model (the memory-model column).
  AlgorithmSpec with_kind(RegisterKind k) const {
    AlgorithmSpec s = *this;
    for (auto& r : s.registers) r.kind = k;
    return s;
  }
};

namespace catalog_detail {

// Shared scratch-local conventions: every await/test round resets the locals
// it used, so control states merge after the branch is decided.

struct Ctx {
  ProgramBuilder& b;
  uint32_t tmp;   // general scratch, sized to the largest domain read into it
  uint32_t tmp2;  // second scratch for two-register conditions
};

// busy wait until register == want
inline void await_eq(Ctx& c, RegRef reg, Value want) {
  uint32_t loop = c.b.here();
  uint32_t pass = c.b.label();
  c.b.read(c.tmp, reg);
  c.b.branch_true(eq(lv(c.tmp), kv(want)), pass);
  c.b.set(c.tmp, kv(0));
  c.b.jump(loop);
  c.b.place(pass);
  c.b.set(c.tmp, kv(0));
}

inline RegRef rr(uint32_t reg) { return RegRef::direct(reg); }

// ---- Peterson (Alg 1) -----------------------------------------------------

inline void peterson_entry(Ctx& c, uint32_t flag_i, uint32_t flag_j, uint32_t turn,
                           Value i, Value j) {
  c.b.write(rr(flag_i), kv(1));
  c.b.write(rr(turn), kv(i));
  uint32_t loop = c.b.here(), pass = c.b.label();
  c.b.read(c.tmp, rr(flag_j));
  c.b.branch_true(eq(lv(c.tmp), kv(0)), pass);
  c.b.read(c.tmp, rr(turn));
  c.b.branch_true(eq(lv(c.tmp), kv(j)), pass);
  c.b.set(c.tmp, kv(0));
  c.b.jump(loop);
  c.b.place(pass);
  c.b.set(c.tmp, kv(0));
}

inline AlgorithmSpec peterson() {
  AlgorithmSpec s{"peterson", "base", "Peterson", 2, {}, {}};
  s.registers = {boolean_register("flag0"), boolean_register("flag1"),
                 range_register("turn", 0, 1, 0)};
  for (ThreadId i = 0; i < 2; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    peterson_entry(c, i, 1 - i, 2, Value(i), Value(1 - i));
    b.crit();
    b.write(rr(i), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Dekker (Alg 2; alt and RW-safe variants, Sec 6.3) ---------------------

inline void dekker_entry(Ctx& c, uint32_t flag_i, uint32_t flag_j, uint32_t turn,
                         Value i, Value j, bool rw_safe_await) {
  c.b.write(rr(flag_i), kv(1));
  uint32_t outer = c.b.here();
  uint32_t done = c.b.label(), body = c.b.label();
  c.b.read(c.tmp, rr(flag_j));
  c.b.branch_true(eq(lv(c.tmp), kv(0)), done);
  c.b.read(c.tmp, rr(turn));
  c.b.branch_true(eq(lv(c.tmp), kv(j)), body);
  c.b.set(c.tmp, kv(0));
  c.b.jump(outer);
  c.b.place(body);
  c.b.set(c.tmp, kv(0));
  c.b.write(rr(flag_i), kv(0));
  {
    uint32_t loop = c.b.here(), pass = c.b.label();
    c.b.read(c.tmp, rr(turn));
    c.b.branch_true(eq(lv(c.tmp), kv(i)), pass);
    if (rw_safe_await) {
      c.b.read(c.tmp, rr(flag_j));
      c.b.branch_true(eq(lv(c.tmp), kv(0)), pass);
    }
    c.b.set(c.tmp, kv(0));
    c.b.jump(loop);
    c.b.place(pass);
    c.b.set(c.tmp, kv(0));
  }
  c.b.write(rr(flag_i), kv(1));
  c.b.jump(outer);
  c.b.place(done);
  c.b.set(c.tmp, kv(0));
}

inline void dekker_exit(Ctx& c, uint32_t flag_i, uint32_t turn, Value j,
                        bool write_turn_if_changed) {
  if (write_turn_if_changed) {
    uint32_t skip = c.b.label();
    c.b.read(c.tmp, rr(turn));
    c.b.branch_true(eq(lv(c.tmp), kv(j)), skip);
    c.b.set(c.tmp, kv(0));
    c.b.write(rr(turn), kv(j));
    uint32_t after = c.b.label();
    c.b.jump(after);
    c.b.place(skip);
    c.b.set(c.tmp, kv(0));
    c.b.place(after);
  } else {
    c.b.write(rr(turn), kv(j));
  }
  c.b.write(rr(flag_i), kv(0));
}

inline AlgorithmSpec dekker(const std::string& variant) {
  bool alt = variant == "alt";
  bool rw = variant == "rw_safe";
  AlgorithmSpec s{"dekker", variant,
                  rw ? "Dekker RW-safe" : (alt ? "Dekker (alt.)" : "Dekker"), 2, {}, {}};
  s.registers = {boolean_register("flag0"), boolean_register("flag1"),
                 range_register("turn", 0, 1, 0)};
  for (ThreadId i = 0; i < 2; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    dekker_entry(c, i, 1 - i, 2, Value(i), Value(1 - i), rw);
    b.crit();
    dekker_exit(c, i, 2, Value(1 - i), alt || rw);
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Aravind BLRU (Alg 3; Sec 6.2 alt) -------------------------------------

inline AlgorithmSpec aravind_blru(const std::string& variant, uint32_t n) {
  bool alt = variant == "alt";
  AlgorithmSpec s{"aravind_blru", variant,
                  alt ? "Aravind BLRU (alt.)" : "Aravind BLRU", n, {}, {}};
  // dates range over 0..2N-1: line 8 transiently writes max+1 before the
  // >= 2N-1 reset kicks in
  Value dmax = Value(2 * n - 1);
  std::vector<uint32_t> flag(n), stage(n), date(n);
  for (uint32_t t = 0; t < n; ++t)
    flag[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("flag" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    stage[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("stage" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    date[t] = uint32_t(s.registers.size()),
    s.registers.push_back(range_register("date" + std::to_string(t), 0, dmax, Value(t)));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    uint32_t tf = b.boolean(), ts = b.boolean();
    uint32_t td1 = b.local(2 * n), td2 = b.local(2 * n), tmax = b.local(2 * n);
    b.write(rr(flag[i]), kv(1));
    uint32_t repeat = b.here();
    b.write(rr(stage[i]), kv(0));
    for (uint32_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // await flag[j]=false or date[i]<date[j] (alt: and stage[j]=false)
      uint32_t loop = b.here(), pass = b.label(), fail = b.label();
      b.read(tf, rr(flag[j]));
      b.branch_true(eq(lv(tf), kv(0)), pass);
      b.read(td1, rr(date[i]));
      b.read(td2, rr(date[j]));
      b.branch_true(ge(lv(td1), lv(td2)), fail);
      if (alt) {
        b.read(ts, rr(stage[j]));
        b.branch_true(eq(lv(ts), kv(0)), pass);
      } else {
        b.jump(pass);
      }
      b.place(fail);
      b.set(tf, kv(0));
      b.set(ts, kv(0));
      b.set(td1, kv(0));
      b.set(td2, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(tf, kv(0));
      b.set(ts, kv(0));
      b.set(td1, kv(0));
      b.set(td2, kv(0));
    }
    b.write(rr(stage[i]), kv(1));
    {  // until all other stages are false, else back to line 3
      uint32_t back = b.label(), go = b.label();
      for (uint32_t j = 0; j < n; ++j) {
        if (j == i) continue;
        b.read(ts, rr(stage[j]));
        b.branch_true(ne(lv(ts), kv(0)), back);
        b.set(ts, kv(0));
      }
      b.jump(go);
      b.place(back);
      b.set(ts, kv(0));
      b.jump(repeat);
      b.place(go);
    }
    b.crit();
    // date[i] <- max(date[0..N-1]) + 1, clamped into the domain
    b.set(tmax, kv(0));
    for (uint32_t j = 0; j < n; ++j) {
      b.read(td1, rr(date[j]));
      b.set(tmax, max2(lv(tmax), lv(td1)));
      b.set(td1, kv(0));
    }
    b.set(tmax, min2(add(lv(tmax), kv(1)), kv(dmax)));
    b.write(rr(date[i]), lv(tmax));
    {
      uint32_t noreset = b.label();
      b.branch_true(lt(lv(tmax), kv(dmax)), noreset);
      for (uint32_t j = 0; j < n; ++j) b.write(rr(date[j]), kv(Value(j)));
      b.place(noreset);
      b.set(tmax, kv(0));
    }
    b.write(rr(stage[i]), kv(0));
    b.write(rr(flag[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Attiya-Welch (Algs 6/7; App H alts) -----------------------------------

inline void aw_turn_exit(Ctx& c, uint32_t turn, Value i, bool read_before_write) {
  if (read_before_write) {
    uint32_t skip = c.b.label(), after = c.b.label();
    c.b.read(c.tmp2, rr(turn));
    c.b.branch_true(eq(lv(c.tmp2), kv(i)), skip);
    c.b.set(c.tmp2, kv(0));
    c.b.write(rr(turn), kv(i));
    c.b.jump(after);
    c.b.place(skip);
    c.b.set(c.tmp2, kv(0));
    c.b.place(after);
  } else {
    c.b.write(rr(turn), kv(i));
  }
}

inline AlgorithmSpec attiya_welch(const std::string& variant) {
  bool var = variant == "var" || variant == "var_alt";
  bool alt = variant == "orig_alt" || variant == "var_alt";
  std::string disp = var ? (alt ? "Attiya-Welch (var., alt.)" : "Attiya-Welch (var.)")
                         : (alt ? "Attiya-Welch (orig., alt.)" : "Attiya-Welch (orig.)");
  AlgorithmSpec s{"attiya_welch", variant, disp, 2, {}, {}};
  s.registers = {boolean_register("flag0"), boolean_register("flag1"),
                 range_register("turn", 0, 1, 0)};
  for (ThreadId i = 0; i < 2; ++i) {
    Value j = Value(1 - i);
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    uint32_t flag_i = i, flag_j = 1 - i, turn = 2;
    uint32_t crit_lbl = b.label();
    if (!var) {
      uint32_t line1 = b.here();
      b.write(rr(flag_i), kv(0));
      {  // await flag[j]=false or turn=j
        uint32_t loop = b.here(), pass = b.label();
        b.read(c.tmp, rr(flag_j));
        b.branch_true(eq(lv(c.tmp), kv(0)), pass);
        b.read(c.tmp, rr(turn));
        b.branch_true(eq(lv(c.tmp), kv(j)), pass);
        b.set(c.tmp, kv(0));
        b.jump(loop);
        b.place(pass);
        b.set(c.tmp, kv(0));
      }
      b.write(rr(flag_i), kv(1));
      uint32_t else_wait = b.label();
      b.read(c.tmp, rr(turn));
      b.branch_true(ne(lv(c.tmp), kv(Value(i))), else_wait);
      b.set(c.tmp, kv(0));
      b.read(c.tmp, rr(flag_j));
      {
        uint32_t back = b.label();
        b.branch_true(ne(lv(c.tmp), kv(0)), back);
        b.set(c.tmp, kv(0));
        b.jump(crit_lbl);
        b.place(back);
        b.set(c.tmp, kv(0));
        b.jump(line1);
      }
      b.place(else_wait);
      b.set(c.tmp, kv(0));
      await_eq(c, rr(flag_j), 0);
    } else {
      uint32_t repeat = b.here();
      b.write(rr(flag_i), kv(0));
      {  // await flag[j]=false or turn=j
        uint32_t loop = b.here(), pass = b.label();
        b.read(c.tmp, rr(flag_j));
        b.branch_true(eq(lv(c.tmp), kv(0)), pass);
        b.read(c.tmp, rr(turn));
        b.branch_true(eq(lv(c.tmp), kv(j)), pass);
        b.set(c.tmp, kv(0));
        b.jump(loop);
        b.place(pass);
        b.set(c.tmp, kv(0));
      }
      b.write(rr(flag_i), kv(1));
      if (!alt) {
        // until turn=j or flag[j]=false, reading turn again afterwards
        uint32_t until_pass = b.label();
        b.read(c.tmp, rr(turn));
        b.branch_true(eq(lv(c.tmp), kv(j)), until_pass);
        b.read(c.tmp2, rr(flag_j));
        {
          uint32_t back = b.label();
          b.branch_true(ne(lv(c.tmp2), kv(0)), back);
          b.set(c.tmp, kv(0));
          b.set(c.tmp2, kv(0));
          b.jump(until_pass);
          b.place(back);
          b.set(c.tmp, kv(0));
          b.set(c.tmp2, kv(0));
          b.jump(repeat);
        }
        b.place(until_pass);
        b.set(c.tmp, kv(0));
        b.set(c.tmp2, kv(0));
        uint32_t wait = b.label();
        b.read(c.tmp, rr(turn));  // the second read of turn in this presentation
        b.branch_true(eq(lv(c.tmp), kv(j)), wait);
        b.set(c.tmp, kv(0));
        b.jump(crit_lbl);
        b.place(wait);
        b.set(c.tmp, kv(0));
        await_eq(c, rr(flag_j), 0);
      } else {
        // single read of turn decides both the until and the if
        uint32_t turn_is_j = b.label(), not_j = b.label();
        b.read(c.tmp, rr(turn));
        b.branch_true(eq(lv(c.tmp), kv(j)), turn_is_j);
        b.read(c.tmp2, rr(flag_j));
        b.branch_true(eq(lv(c.tmp2), kv(0)), not_j);
        b.set(c.tmp, kv(0));
        b.set(c.tmp2, kv(0));
        b.jump(repeat);
        b.place(turn_is_j);
        b.set(c.tmp, kv(0));
        b.set(c.tmp2, kv(0));
        await_eq(c, rr(flag_j), 0);
        b.jump(crit_lbl);
        b.place(not_j);
        b.set(c.tmp, kv(0));
        b.set(c.tmp2, kv(0));
      }
    }
    b.place(crit_lbl);
    b.crit();
    aw_turn_exit(c, 2, Value(i), alt);
    b.write(rr(flag_i), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Anderson (Algs 4/5; asymmetric two-thread code) ------------------------

inline AlgorithmSpec anderson() {
  AlgorithmSpec s{"anderson", "base", "Anderson", 2, {}, {}};
  s.registers = {boolean_register("p0", true), boolean_register("p1", true),
                 boolean_register("q0", true), boolean_register("q1", true),
                 boolean_register("t0", true), boolean_register("t1", true)};
  const uint32_t p[2] = {0, 1}, q[2] = {2, 3}, t[2] = {4, 5};
  for (ThreadId i = 0; i < 2; ++i) {
    uint32_t j = 1 - i;
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    b.write(rr(p[i]), kv(0));
    b.write(rr(q[i]), kv(0));
    uint32_t tx = b.boolean();
    b.read(tx, rr(t[j]));
    if (i == 1) b.set(tx, not_(lv(tx)));
    b.write(rr(t[i]), lv(tx));
    uint32_t then_br = b.label(), join = b.label();
    b.branch_true(eq(lv(tx), kv(1)), then_br);
    b.set(tx, kv(0));
    // x = false branch
    b.write(rr(i == 0 ? q[i] : p[i]), kv(1));
    await_eq(c, rr(q[j]), 1);
    b.jump(join);
    b.place(then_br);
    b.set(tx, kv(0));
    // x = true branch
    b.write(rr(i == 0 ? p[i] : q[i]), kv(1));
    await_eq(c, rr(p[j]), 1);
    b.place(join);
    b.crit();
    b.write(rr(p[i]), kv(1));
    b.write(rr(q[i]), kv(1));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Burns-Lynch (Alg 8) ----------------------------------------------------

inline AlgorithmSpec burns_lynch(uint32_t n) {
  AlgorithmSpec s{"burns_lynch", "base", "Burns-Lynch", n, {}, {}};
  for (uint32_t t = 0; t < n; ++t)
    s.registers.push_back(boolean_register("flag" + std::to_string(t)));
  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    uint32_t repeat = b.here();
    b.write(rr(i), kv(0));
    for (uint32_t j = 0; j < i; ++j) await_eq(c, rr(j), 0);
    b.write(rr(i), kv(1));
    {
      uint32_t back = b.label(), go = b.label();
      for (uint32_t j = 0; j < i; ++j) {
        b.read(c.tmp, rr(j));
        b.branch_true(ne(lv(c.tmp), kv(0)), back);
        b.set(c.tmp, kv(0));
      }
      b.jump(go);
      b.place(back);
      b.set(c.tmp, kv(0));
      b.jump(repeat);
      b.place(go);
    }
    for (uint32_t j = i + 1; j < n; ++j) await_eq(c, rr(j), 0);
    b.crit();
    b.write(rr(i), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Lamport 1-bit (Alg 9) --------------------------------------------------

inline void lamport_1bit_entry(Ctx& c, const std::vector<uint32_t>& flag, ThreadId i,
                               uint32_t n) {
  uint32_t line1 = c.b.here();
  c.b.write(rr(flag[i]), kv(1));
  for (uint32_t j = 0; j < i; ++j) {
    uint32_t next = c.b.label();
    c.b.read(c.tmp, rr(flag[j]));
    c.b.branch_true(eq(lv(c.tmp), kv(0)), next);
    c.b.set(c.tmp, kv(0));
    c.b.write(rr(flag[i]), kv(0));
    await_eq(c, rr(flag[j]), 0);
    c.b.jump(line1);
    c.b.place(next);
    c.b.set(c.tmp, kv(0));
  }
  for (uint32_t j = i + 1; j < n; ++j) await_eq(c, rr(flag[j]), 0);
}

inline AlgorithmSpec lamport_1bit(uint32_t n) {
  AlgorithmSpec s{"lamport_1bit", "base", "Lamport 1-bit", n, {}, {}};
  std::vector<uint32_t> flag(n);
  for (uint32_t t = 0; t < n; ++t)
    flag[t] = t, s.registers.push_back(boolean_register("flag" + std::to_string(t)));
  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    lamport_1bit_entry(c, flag, i, n);
    b.crit();
    b.write(rr(flag[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Dijkstra (Alg 11) ------------------------------------------------------

inline AlgorithmSpec dijkstra(uint32_t n) {
  AlgorithmSpec s{"dijkstra", "base", "Dijkstra", n, {}, {}};
  std::vector<uint32_t> breg(n), creg(n);
  for (uint32_t t = 0; t < n; ++t)
    breg[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("b" + std::to_string(t), true));
  for (uint32_t t = 0; t < n; ++t)
    creg[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("c" + std::to_string(t), true));
  uint32_t kreg = uint32_t(s.registers.size());
  s.registers.push_back(range_register("k", 0, Value(n - 1), 0));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    uint32_t tk = b.local(n), tb = b.boolean(), tc = b.boolean();
    b.write(rr(breg[i]), kv(0));
    uint32_t line2 = b.here();
    uint32_t else_br = b.label();
    b.read(tk, rr(kreg));
    b.branch_true(eq(lv(tk), kv(Value(i))), else_br);
    b.write(rr(creg[i]), kv(1));
    {
      uint32_t skip = b.label();
      b.read(tb, RegRef::indexed(breg, lv(tk)));  // b[k], k from the line-2 read
      b.branch_true(eq(lv(tb), kv(0)), skip);
      b.set(tk, kv(0));
      b.set(tb, kv(0));
      b.write(rr(kreg), kv(Value(i)));
      b.jump(line2);
      b.place(skip);
      b.set(tk, kv(0));
      b.set(tb, kv(0));
      b.jump(line2);
    }
    b.place(else_br);
    b.set(tk, kv(0));
    b.write(rr(creg[i]), kv(0));
    {
      uint32_t back = b.label(), go = b.label();
      for (uint32_t j = 0; j < n; ++j) {
        if (j == i) continue;
        b.read(tc, rr(creg[j]));
        b.branch_true(eq(lv(tc), kv(0)), back);
        b.set(tc, kv(0));
      }
      b.jump(go);
      b.place(back);
      b.set(tc, kv(0));
      b.jump(line2);
      b.place(go);
    }
    b.crit();
    b.write(rr(creg[i]), kv(1));
    b.write(rr(breg[i]), kv(1));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Kessels (Alg 12) -------------------------------------------------------

inline AlgorithmSpec kessels() {
  AlgorithmSpec s{"kessels", "base", "Kessels", 2, {}, {}};
  s.registers = {boolean_register("q0"), boolean_register("q1"),
                 range_register("r0", 0, 1, 0), range_register("r1", 0, 1, 0)};
  const uint32_t q[2] = {0, 1}, r[2] = {2, 3};
  for (ThreadId i = 0; i < 2; ++i) {
    Value j = Value(1 - i);
    ProgramBuilder b(i);
    uint32_t ta = b.local(2), tb = b.local(2);
    // thread i writes q[j], r[j] and reads q[i], r[i]
    b.write(rr(q[1 - i]), kv(1));
    b.read(ta, rr(r[i]));
    b.write(rr(r[1 - i]), mod(add(lv(ta), kv(j)), 2));
    b.set(ta, kv(0));
    {
      uint32_t loop = b.here(), pass = b.label();
      b.read(ta, rr(q[i]));
      b.branch_true(eq(lv(ta), kv(0)), pass);
      b.read(ta, rr(r[1 - i]));
      b.read(tb, rr(r[i]));
      b.branch_true(ne(lv(ta), mod(add(lv(tb), kv(j)), 2)), pass);
      b.set(ta, kv(0));
      b.set(tb, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(ta, kv(0));
      b.set(tb, kv(0));
    }
    b.crit();
    b.write(rr(q[1 - i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Knuth (Alg 13) ---------------------------------------------------------

inline AlgorithmSpec knuth(uint32_t n) {
  AlgorithmSpec s{"knuth", "base", "Knuth", n, {}, {}};
  std::vector<uint32_t> ctl(n);
  for (uint32_t t = 0; t < n; ++t)
    ctl[t] = t, s.registers.push_back(
                    range_register("control" + std::to_string(t), 0, 2, 0));
  uint32_t kreg = n;
  s.registers.push_back(range_register("k", 0, Value(n - 1), 0));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    uint32_t tk = b.local(n), tj = b.local(n), tc = b.local(3);
    uint32_t line0 = b.here();
    b.write(rr(ctl[i]), kv(1));
    uint32_t line1 = b.here();
    uint32_t l2 = b.label(), back1 = b.label(), loop1_done = b.label();
    b.read(tk, rr(kreg));
    b.set(tj, lv(tk));
    b.set(tk, kv(0));
    {
      uint32_t loop1 = b.here();
      uint32_t l2a = b.label();
      b.branch_true(eq(lv(tj), kv(Value(i))), l2a);
      b.read(tc, RegRef::indexed(ctl, lv(tj)));
      b.branch_true(ne(lv(tc), kv(0)), back1);
      b.set(tc, kv(0));
      b.branch_true(eq(lv(tj), kv(0)), loop1_done);
      b.set(tj, sub(lv(tj), kv(1)));
      b.jump(loop1);
      b.place(l2a);
      b.set(tj, kv(0));
      b.jump(l2);
    }
    b.place(back1);
    b.set(tc, kv(0));
    b.set(tj, kv(0));
    b.jump(line1);
    b.place(loop1_done);
    b.set(tj, kv(0));
    // second scan: j from N-1 downto 0, necessarily reaching j = i
    for (int j = int(n) - 1; j >= 0; --j) {
      if (uint32_t(j) == i) {
        b.jump(l2);
        break;
      }
      uint32_t next = b.label();
      b.read(tc, rr(ctl[j]));
      b.branch_true(eq(lv(tc), kv(0)), next);
      b.set(tc, kv(0));
      b.jump(line1);
      b.place(next);
      b.set(tc, kv(0));
    }
    b.place(l2);
    b.write(rr(ctl[i]), kv(2));
    for (int j = int(n) - 1; j >= 0; --j) {
      if (uint32_t(j) == i) continue;
      uint32_t next = b.label();
      b.read(tc, rr(ctl[j]));
      b.branch_true(ne(lv(tc), kv(2)), next);
      b.set(tc, kv(0));
      b.jump(line0);
      b.place(next);
      b.set(tc, kv(0));
    }
    b.write(rr(kreg), kv(Value(i)));
    b.crit();
    b.write(rr(kreg), kv(i == 0 ? Value(n - 1) : Value(i - 1)));
    b.write(rr(ctl[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Lamport 3-bit (Alg 14) -------------------------------------------------

inline AlgorithmSpec lamport_3bit(uint32_t n) {
  AlgorithmSpec s{"lamport_3bit", "base", "Lamport 3-bit", n, {}, {}};
  std::vector<uint32_t> xr(n), yr(n), zr(n);
  for (uint32_t t = 0; t < n; ++t)
    xr[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("x" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    yr[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("y" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    zr[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("z" + std::to_string(t)));

  // f = gamma(min{ h in domain(gamma) | CG(zeta, h) }), over the bitmask
  // encodings of gamma and zeta (by register index).
  auto f_of = [n](Value g, Value z) {
    std::vector<int> js;
    for (uint32_t j = 0; j < n; ++j)
      if (g >> j & 1) js.push_back(int(j));
    if (js.empty()) return Value(0);
    int m = int(js.size());
    auto v = [&](int h) { return z >> js[h - 1] & 1; };  // 1-based
    for (int h = 1; h <= m; ++h) {
      int cgv = h > 1 ? !v(h - 1) : v(m);
      if (v(h) == cgv) return Value(js[h - 1]);
    }
    return Value(js[0]);
  };

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    uint32_t ty = b.boolean(), tb = b.boolean();
    uint32_t tg = b.local(1u << n), tz = b.local(1u << n);
    uint32_t tf = b.local(n), tj = b.local(n);
    b.write(rr(yr[i]), kv(1));
    uint32_t l1 = b.here();
    b.write(rr(xr[i]), kv(1));
    uint32_t l2 = b.here();
    b.set(tg, kv(0));
    b.set(tz, kv(0));
    for (uint32_t j = 0; j < n; ++j) {  // gamma <- ORD{ j | y[j] }
      b.read(ty, rr(yr[j]));
      b.set(tg, binop(lv(tg), lv(ty), [j](Value g, Value y) { return g | (y << j); }));
      b.set(ty, kv(0));
    }
    for (uint32_t j = 0; j < n; ++j) {  // zeta <- SAVE_z over range(gamma)
      uint32_t skip = b.label();
      b.branch_true(eq(bit(lv(tg), kv(Value(j))), kv(0)), skip);
      b.read(tb, rr(zr[j]));
      b.set(tz, binop(lv(tz), lv(tb), [j](Value z, Value v) { return z | (v << j); }));
      b.set(tb, kv(0));
      b.place(skip);
    }
    b.set(tf, binop(lv(tg), lv(tz), f_of));
    b.set(tg, kv(0));
    b.set(tz, kv(0));
    {  // for j from f cyclically to i: if y[j] { if x[i] then x[i] <- false; goto l2 }
      b.set(tj, lv(tf));
      uint32_t loop = b.here();
      uint32_t done = b.label(), advance = b.label(), hit = b.label();
      b.branch_true(eq(lv(tj), kv(Value(i))), done);
      b.read(ty, RegRef::indexed(yr, lv(tj)));
      b.branch_true(ne(lv(ty), kv(0)), hit);
      b.place(advance);
      b.set(ty, kv(0));
      b.set(tj, mod(add(lv(tj), kv(1)), Value(n)));
      b.jump(loop);
      b.place(hit);
      b.set(ty, kv(0));
      {
        uint32_t nowrite = b.label();
        b.read(tb, rr(xr[i]));
        b.branch_true(eq(lv(tb), kv(0)), nowrite);
        b.set(tb, kv(0));
        b.write(rr(xr[i]), kv(0));
        b.set(tj, kv(0));
        b.set(tf, kv(0));
        b.jump(l2);
        b.place(nowrite);
        b.set(tb, kv(0));
        b.set(tj, kv(0));
        b.set(tf, kv(0));
        b.jump(l2);
      }
      b.place(done);
      b.set(tj, kv(0));
    }
    {  // if x[i] = false goto l1
      uint32_t xok = b.label();
      b.read(tb, rr(xr[i]));
      b.branch_true(ne(lv(tb), kv(0)), xok);
      b.set(tb, kv(0));
      b.set(tf, kv(0));
      b.jump(l1);
      b.place(xok);
      b.set(tb, kv(0));
    }
    {  // for j from i+1 cyclically to f: if x[j] goto l2
      b.set(tj, kv(Value((i + 1) % n)));
      uint32_t loop = b.here();
      uint32_t done = b.label(), back = b.label();
      b.branch_true(eq(lv(tj), lv(tf)), done);
      b.read(tb, RegRef::indexed(xr, lv(tj)));
      b.branch_true(ne(lv(tb), kv(0)), back);
      b.set(tb, kv(0));
      b.set(tj, mod(add(lv(tj), kv(1)), Value(n)));
      b.jump(loop);
      b.place(back);
      b.set(tb, kv(0));
      b.set(tj, kv(0));
      b.set(tf, kv(0));
      b.jump(l2);
      b.place(done);
      b.set(tj, kv(0));
      b.set(tf, kv(0));
    }
    b.crit();
    {  // z[i] <- not z[i]
      uint32_t zt = b.label(), zd = b.label();
      b.read(tb, rr(zr[i]));
      b.branch_true(ne(lv(tb), kv(0)), zt);
      b.set(tb, kv(0));
      b.write(rr(zr[i]), kv(1));
      b.jump(zd);
      b.place(zt);
      b.set(tb, kv(0));
      b.write(rr(zr[i]), kv(0));
      b.place(zd);
    }
    b.write(rr(xr[i]), kv(0));
    b.write(rr(yr[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Szymanski 3-bit linear wait (Sec 6.4) ----------------------------------

inline AlgorithmSpec szymanski_3bit(const std::string& variant, uint32_t n) {
  bool alt = variant == "alt";  // s[j] read before w[j] on line 18
  AlgorithmSpec s{"szymanski_3bit", variant,
                  alt ? "Szymanski 3-bit lin. wait (alt.)" : "Szymanski 3-bit lin. wait",
                  n, {}, {}};
  std::vector<uint32_t> ar(n), wr(n), sr(n);
  for (uint32_t t = 0; t < n; ++t)
    ar[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("a" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    wr[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("w" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    sr[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("s" + std::to_string(t)));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    uint32_t tj = b.local(n + 1);
    b.write(rr(ar[i]), kv(1));
    for (uint32_t j = 0; j < n; ++j) await_eq(c, rr(sr[j]), 0);
    b.write(rr(wr[i]), kv(1));
    b.write(rr(ar[i]), kv(0));
    uint32_t lwhile = b.here();
    uint32_t lexit = b.label();
    b.read(c.tmp, rr(sr[i]));
    b.branch_true(ne(lv(c.tmp), kv(0)), lexit);
    b.set(c.tmp, kv(0));
    uint32_t l16 = b.label(), l19 = b.label();
    {  // line 6-7: scan a[0..N-1] for a true entry
      b.set(tj, kv(0));
      uint32_t loop = b.here(), stop = b.label(), l8 = b.label();
      b.branch_true(eq(lv(tj), kv(Value(n))), l8);
      b.read(c.tmp, RegRef::indexed(ar, lv(tj)));
      b.branch_true(ne(lv(c.tmp), kv(0)), stop);
      b.set(c.tmp, kv(0));
      b.set(tj, add(lv(tj), kv(1)));
      b.jump(loop);
      b.place(stop);
      b.set(c.tmp, kv(0));
      b.jump(l16);
      b.place(l8);
    }
    {  // line 8-15: j = N
      b.write(rr(sr[i]), kv(1));
      b.set(tj, kv(0));
      uint32_t loop = b.here(), stop = b.label(), allidle = b.label();
      b.branch_true(eq(lv(tj), kv(Value(n))), allidle);
      b.read(c.tmp, RegRef::indexed(ar, lv(tj)));
      b.branch_true(ne(lv(c.tmp), kv(0)), stop);
      b.set(c.tmp, kv(0));
      b.set(tj, add(lv(tj), kv(1)));
      b.jump(loop);
      b.place(stop);  // j < N: retract
      b.set(c.tmp, kv(0));
      b.write(rr(sr[i]), kv(0));
      b.jump(l16);
      b.place(allidle);  // j = N: doorway closed
      b.write(rr(wr[i]), kv(0));
      for (uint32_t j = 0; j < n; ++j) await_eq(c, rr(wr[j]), 0);
      b.jump(l19);  // j = N, so lines 16-18 are skipped
    }
    b.place(l16);
    {  // line 17-18: scan for j with not (w[j] or not s[j])
      b.set(tj, kv(0));
      uint32_t loop = b.here(), adv = b.label();
      b.branch_true(eq(lv(tj), kv(Value(n))), l19);
      if (!alt) {
        b.read(c.tmp, RegRef::indexed(wr, lv(tj)));
        b.branch_true(ne(lv(c.tmp), kv(0)), adv);
        b.read(c.tmp2, RegRef::indexed(sr, lv(tj)));
        b.branch_true(eq(lv(c.tmp2), kv(0)), adv);
      } else {
        b.read(c.tmp2, RegRef::indexed(sr, lv(tj)));
        b.branch_true(eq(lv(c.tmp2), kv(0)), adv);
        b.read(c.tmp, RegRef::indexed(wr, lv(tj)));
        b.branch_true(ne(lv(c.tmp), kv(0)), adv);
      }
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
      b.jump(l19);
      b.place(adv);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
      b.set(tj, add(lv(tj), kv(1)));
      b.jump(loop);
    }
    b.place(l19);
    {  // if j != i and j < N: s[i] <- true; w[i] <- false
      uint32_t skip = b.label();
      b.branch_true(eq(lv(tj), kv(Value(i))), skip);
      b.branch_true(eq(lv(tj), kv(Value(n))), skip);
      b.write(rr(sr[i]), kv(1));
      b.write(rr(wr[i]), kv(0));
      b.place(skip);
      b.set(tj, kv(0));
      b.jump(lwhile);
    }
    b.place(lexit);
    b.set(c.tmp, kv(0));
    for (uint32_t j = 0; j < i; ++j) await_eq(c, rr(sr[j]), 0);
    b.crit();
    b.write(rr(sr[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- Szymanski flag, integer and Boolean versions (Algs 15/16) ---------------

inline AlgorithmSpec szymanski_flag_int(uint32_t n) {
  AlgorithmSpec s{"szymanski_flag_int", "base", "Szymanski flag (int.)", n, {}, {}};
  std::vector<uint32_t> fl(n);
  for (uint32_t t = 0; t < n; ++t)
    fl[t] = t, s.registers.push_back(range_register("flag" + std::to_string(t), 0, 4, 0));
  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    uint32_t tf = b.local(5);
    b.write(rr(fl[i]), kv(1));
    for (uint32_t j = 0; j < n; ++j) {  // await flag[j] < 3, per j
      uint32_t loop = b.here(), pass = b.label();
      b.read(tf, rr(fl[j]));
      b.branch_true(lt(lv(tf), kv(3)), pass);
      b.set(tf, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(tf, kv(0));
    }
    b.write(rr(fl[i]), kv(3));
    uint32_t l7 = b.label(), exists = b.label();
    for (uint32_t j = 0; j < n; ++j) {  // if exists j: flag[j] = 1
      uint32_t next = b.label();
      b.read(tf, rr(fl[j]));
      b.branch_true(ne(lv(tf), kv(1)), next);
      b.set(tf, kv(0));
      b.jump(exists);
      b.place(next);
      b.set(tf, kv(0));
    }
    b.jump(l7);
    b.place(exists);
    b.write(rr(fl[i]), kv(2));
    {  // await exists j: flag[j] = 4
      uint32_t round = b.here(), pass = b.label();
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t next = b.label();
        b.read(tf, rr(fl[j]));
        b.branch_true(ne(lv(tf), kv(4)), next);
        b.set(tf, kv(0));
        b.jump(pass);
        b.place(next);
        b.set(tf, kv(0));
      }
      b.jump(round);
      b.place(pass);
    }
    b.place(l7);
    b.write(rr(fl[i]), kv(4));
    for (uint32_t j = 0; j < i; ++j) {  // await flag[j] < 2
      uint32_t loop = b.here(), pass = b.label();
      b.read(tf, rr(fl[j]));
      b.branch_true(lt(lv(tf), kv(2)), pass);
      b.set(tf, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(tf, kv(0));
    }
    b.crit();
    for (uint32_t j = i + 1; j < n; ++j) {  // await flag[j] < 2 or flag[j] > 3
      uint32_t loop = b.here(), pass = b.label();
      b.read(tf, rr(fl[j]));
      b.branch_true(lt(lv(tf), kv(2)), pass);
      b.branch_true(lt(kv(3), lv(tf)), pass);
      b.set(tf, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(tf, kv(0));
    }
    b.write(rr(fl[i]), kv(0));
    s.programs.push_back(b.finish());
  }
  return s;
}

inline AlgorithmSpec szymanski_flag_bit(const std::string& variant, uint32_t n) {
  bool alt = variant == "alt";  // exit order door_out - intent - door_in
  AlgorithmSpec s{"szymanski_flag_bit", variant,
                  alt ? "Szymanski flag (bit, alt.)" : "Szymanski flag (bit)", n, {}, {}};
  std::vector<uint32_t> in(n), di(n), dout(n);
  for (uint32_t t = 0; t < n; ++t)
    in[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("intent" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    di[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("door_in" + std::to_string(t)));
  for (uint32_t t = 0; t < n; ++t)
    dout[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register("door_out" + std::to_string(t)));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    b.write(rr(in[i]), kv(1));
    for (uint32_t j = 0; j < n; ++j) {  // await intent[j]=false or door_in[j]=false
      uint32_t loop = b.here(), pass = b.label();
      b.read(c.tmp, rr(in[j]));
      b.branch_true(eq(lv(c.tmp), kv(0)), pass);
      b.read(c.tmp2, rr(di[j]));
      b.branch_true(eq(lv(c.tmp2), kv(0)), pass);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
    }
    b.write(rr(di[i]), kv(1));
    uint32_t l7 = b.label(), exists = b.label();
    for (uint32_t j = 0; j < n; ++j) {  // if exists j: intent[j] and not door_in[j]
      uint32_t next = b.label();
      b.read(c.tmp, rr(in[j]));
      b.branch_true(eq(lv(c.tmp), kv(0)), next);
      b.read(c.tmp2, rr(di[j]));
      b.branch_true(ne(lv(c.tmp2), kv(0)), next);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
      b.jump(exists);
      b.place(next);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
    }
    b.jump(l7);
    b.place(exists);
    b.write(rr(in[i]), kv(0));
    {  // await exists j: door_out[j]
      uint32_t round = b.here(), pass = b.label();
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t next = b.label();
        b.read(c.tmp, rr(dout[j]));
        b.branch_true(eq(lv(c.tmp), kv(0)), next);
        b.set(c.tmp, kv(0));
        b.jump(pass);
        b.place(next);
        b.set(c.tmp, kv(0));
      }
      b.jump(round);
      b.place(pass);
    }
    b.place(l7);
    {  // if intent[i] = false: intent[i] <- true
      uint32_t skip = b.label();
      b.read(c.tmp, rr(in[i]));
      b.branch_true(ne(lv(c.tmp), kv(0)), skip);
      b.set(c.tmp, kv(0));
      b.write(rr(in[i]), kv(1));
      uint32_t after = b.label();
      b.jump(after);
      b.place(skip);
      b.set(c.tmp, kv(0));
      b.place(after);
    }
    b.write(rr(dout[i]), kv(1));
    for (uint32_t j = 0; j < i; ++j) await_eq(c, rr(di[j]), 0);
    b.crit();
    for (uint32_t j = i + 1; j < n; ++j) {  // await door_in[j]=false or door_out[j]
      uint32_t loop = b.here(), pass = b.label();
      b.read(c.tmp, rr(di[j]));
      b.branch_true(eq(lv(c.tmp), kv(0)), pass);
      b.read(c.tmp2, rr(dout[j]));
      b.branch_true(ne(lv(c.tmp2), kv(0)), pass);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(c.tmp, kv(0));
      b.set(c.tmp2, kv(0));
    }
    if (!alt) {
      b.write(rr(in[i]), kv(0));
      b.write(rr(di[i]), kv(0));
      b.write(rr(dout[i]), kv(0));
    } else {
      b.write(rr(dout[i]), kv(0));
      b.write(rr(in[i]), kv(0));
      b.write(rr(di[i]), kv(0));
    }
    s.programs.push_back(b.finish());
  }
  return s;
}

// ---- DF-to-SF wrapper (Alg 10) -----------------------------------------------

inline AlgorithmSpec dftosf(const std::string& inner, uint32_t n) {
  bool lamport_inner = inner == "lamport1bit";
  if (!lamport_inner && inner != "dekker_rw_safe")
    throw std::invalid_argument("unknown dftosf inner algorithm: " + inner);
  if (!lamport_inner && n != 2)
    throw std::invalid_argument("dftosf over Dekker is two-thread only");

  AlgorithmSpec s{"dftosf", inner,
                  lamport_inner ? "Lamport 1-bit (DFtoSF)" : "Dekker RW-safe (DFtoSF)",
                  n, {}, {}};
  // inner registers first (keeping their own names), then the wrapper's
  std::vector<uint32_t> xflag(n);
  uint32_t dturn = 0;
  if (lamport_inner) {
    for (uint32_t t = 0; t < n; ++t)
      xflag[t] = t, s.registers.push_back(boolean_register("x" + std::to_string(t)));
  } else {
    s.registers = {boolean_register("flag0"), boolean_register("flag1"),
                   range_register("turn", 0, 1, 0)};
    xflag = {0, 1};
    dturn = 2;
  }
  std::string wf = lamport_inner ? "flag" : "sf_flag";
  std::vector<uint32_t> wflag(n);
  for (uint32_t t = 0; t < n; ++t)
    wflag[t] = uint32_t(s.registers.size()),
    s.registers.push_back(boolean_register(wf + std::to_string(t)));
  uint32_t wturn = uint32_t(s.registers.size());
  s.registers.push_back(
      range_register(lamport_inner ? "turn" : "sf_turn", 0, Value(n - 1), 0));

  for (ThreadId i = 0; i < n; ++i) {
    ProgramBuilder b(i);
    Ctx c{b, b.local(2), b.local(2)};
    uint32_t tt = b.local(n), tf = b.boolean();
    // wrapper entry: repeat tmp <- turn until tmp = i or flag[tmp] = false
    b.write(rr(wflag[i]), kv(1));
    {
      uint32_t loop = b.here(), pass = b.label();
      b.read(tt, rr(wturn));
      b.branch_true(eq(lv(tt), kv(Value(i))), pass);
      b.read(tf, RegRef::indexed(wflag, lv(tt)));
      b.branch_true(eq(lv(tf), kv(0)), pass);
      b.set(tt, kv(0));
      b.set(tf, kv(0));
      b.jump(loop);
      b.place(pass);
      b.set(tt, kv(0));
      b.set(tf, kv(0));
    }
    // entry protocol of the deadlock-free algorithm
    if (lamport_inner)
      lamport_1bit_entry(c, xflag, i, n);
    else
      dekker_entry(c, xflag[i], xflag[1 - i], dturn, Value(i), Value(1 - i), true);
    b.crit();
    // wrapper exit: flag[i] <- false; turn handover if the holder is idle
    b.write(rr(wflag[i]), kv(0));
    {
      uint32_t skip = b.label();
      b.read(tt, rr(wturn));
      b.read(tf, RegRef::indexed(wflag, lv(tt)));
      b.branch_true(ne(lv(tf), kv(0)), skip);
      b.write(rr(wturn), mod(add(lv(tt), kv(1)), Value(n)));
      b.place(skip);
      b.set(tt, kv(0));
      b.set(tf, kv(0));
    }
    // exit protocol of the deadlock-free algorithm
    if (lamport_inner)
      b.write(rr(xflag[i]), kv(0));
    else
      dekker_exit(c, xflag[i], dturn, Value(1 - i), true);
    s.programs.push_back(b.finish());
  }
  return s;
}

}  // namespace catalog_detail

struct CatalogRow {
  std::string name;
  std::string variant;
  std::string display_name;
  uint32_t table_threads;   // thread count used in the results table
  bool fixed_two_threads;   // algorithm only defined for N = 2
};

inline const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows = {
      {"anderson", "base", "Anderson", 2, true},
      {"aravind_blru", "base", "Aravind BLRU", 3, false},
      {"aravind_blru", "alt", "Aravind BLRU (alt.)", 3, false},
      {"attiya_welch", "orig", "Attiya-Welch (orig.)", 2, true},
      {"attiya_welch", "orig_alt", "Attiya-Welch (orig., alt.)", 2, true},
      {"attiya_welch", "var", "Attiya-Welch (var.)", 2, true},
      {"attiya_welch", "var_alt", "Attiya-Welch (var., alt.)", 2, true},
      {"burns_lynch", "base", "Burns-Lynch", 3, false},
      {"dekker", "base", "Dekker", 2, true},
      {"dekker", "alt", "Dekker (alt.)", 2, true},
      {"dekker", "rw_safe", "Dekker RW-safe", 2, true},
      {"dftosf", "dekker_rw_safe", "Dekker RW-safe (DFtoSF)", 2, true},
      {"dijkstra", "base", "Dijkstra", 3, false},
      {"kessels", "base", "Kessels", 2, true},
      {"knuth", "base", "Knuth", 3, false},
      {"lamport_1bit", "base", "Lamport 1-bit", 3, false},
      {"dftosf", "lamport1bit", "Lamport 1-bit (DFtoSF)", 3, false},
      {"lamport_3bit", "base", "Lamport 3-bit", 3, false},
      {"peterson", "base", "Peterson", 2, true},
      {"szymanski_flag_int", "base", "Szymanski flag (int.)", 3, false},
      {"szymanski_flag_bit", "base", "Szymanski flag (bit)", 3, false},
      {"szymanski_flag_bit", "alt", "Szymanski flag (bit, alt.)", 3, false},
      {"szymanski_3bit", "base", "Szymanski 3-bit lin. wait", 3, false},
      {"szymanski_3bit", "alt", "Szymanski 3-bit lin. wait (alt.)", 2, false},
  };
  return rows;
}

/// Builds the named algorithm/variant for N threads. Register kinds default
/// to atomic; apply with_kind() for the other memory models.
inline AlgorithmSpec algorithm_catalog(const std::string& name,
                                       const std::string& variant, uint32_t n) {
  using namespace catalog_detail;
  bool known_row = false;
  for (const auto& r : catalog_rows())
    if (r.name == name && r.variant == variant) {
      known_row = true;
      if (r.fixed_two_threads && n != 2)
        throw std::invalid_argument(r.display_name + " is only defined for 2 threads");
    }
  if (!known_row)
    throw std::invalid_argument("unknown algorithm/variant: " + name + "/" + variant);
  if (n < 2 || n > kMaxRegThreads)
    throw std::invalid_argument("unsupported thread count");

  if (name == "peterson") return peterson();
  if (name == "dekker") return dekker(variant);
  if (name == "aravind_blru") return aravind_blru(variant, n);
  if (name == "attiya_welch") return attiya_welch(variant);
  if (name == "anderson") return anderson();
  if (name == "burns_lynch") return burns_lynch(n);
  if (name == "lamport_1bit") return lamport_1bit(n);
  if (name == "dijkstra") return dijkstra(n);
  if (name == "kessels") return kessels();
  if (name == "knuth") return knuth(n);
  if (name == "lamport_3bit") return lamport_3bit(n);
  if (name == "szymanski_3bit") return szymanski_3bit(variant, n);
  if (name == "szymanski_flag_int") return szymanski_flag_int(n);
  if (name == "szymanski_flag_bit") return szymanski_flag_bit(variant, n);
  if (name == "dftosf") return dftosf(variant, n);
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace justcheck
