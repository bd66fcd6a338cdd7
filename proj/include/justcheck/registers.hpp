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

#include <array>
#include <cstring>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "justcheck/action.hpp"
#include "justcheck/compose.hpp"
#include "justcheck/lts.hpp"

namespace justcheck {

constexpr uint32_t kMaxRegThreads = 6;
constexpr size_t kMaxRegDomain = 16;

enum class RegisterKind : uint8_t {
  Safe,
  Regular,
  Atomic,
  BlockingA,  // blocking reads and writes
  BlockingI,  // blocking with concurrent reads
  BlockingS,  // blocking writes, non-blocking reads
};

inline const char* kind_name(RegisterKind k) {
  switch (k) {
    case RegisterKind::Safe: return "safe";
    case RegisterKind::Regular: return "regular";
    case RegisterKind::Atomic: return "atomic";
    case RegisterKind::BlockingA: return "blocking_a";
    case RegisterKind::BlockingI: return "blocking_i";
    case RegisterKind::BlockingS: return "blocking_s";
  }
  return "?";
}

inline bool is_blocking(RegisterKind k) {
  return k == RegisterKind::BlockingA || k == RegisterKind::BlockingI ||
         k == RegisterKind::BlockingS;
}

struct RegisterConfig {
  std::string name;
  std::vector<Value> domain;          // finite, ordered, duplicate-free
  std::optional<Value> initial;       // defaults to the lowest (first) value
  RegisterKind kind = RegisterKind::Atomic;

  Value initial_value() const { return initial ? *initial : domain.front(); }

  size_t index_of(Value v) const {
    for (size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == v) return i;
    throw std::invalid_argument("value " + std::to_string(v) +
                                " not in domain of register " + name);
  }

  void validate() const {
    if (domain.empty()) throw std::invalid_argument("register domain empty: " + name);
    if (domain.size() > kMaxRegDomain)
      throw std::invalid_argument("register domain too large: " + name);
    for (size_t i = 0; i < domain.size(); ++i)
      for (size_t j = i + 1; j < domain.size(); ++j)
        if (domain[i] == domain[j])
          throw std::invalid_argument("duplicate domain value in register " + name);
    index_of(initial_value());
  }
};

inline RegisterConfig boolean_register(std::string name, bool init = false) {
  return RegisterConfig{std::move(name), {0, 1}, Value(init ? 1 : 0)};
}

inline RegisterConfig range_register(std::string name, Value lo, Value hi, Value init) {
  RegisterConfig c{std::move(name), {}, init};
  for (Value v = lo; v <= hi; ++v) c.domain.push_back(v);
  return c;
}

class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The status object: the finite memory of one register, with the access
/// functions stor/rds/wrts/pend/rec/ovrl/posv. rds/wrts/pend/ovrl are thread
/// sets (bitmasks); posv holds per-thread sets of domain values (as masks
/// over domain indices).
struct RegisterStatus {
  RegisterKind kind = RegisterKind::Atomic;
  uint32_t nthreads = 0;
  std::vector<Value> domain;
  Value stor = 0;
  uint32_t rds = 0, wrts = 0, pend = 0, ovrl = 0;
  std::array<Value, kMaxRegThreads> rec{};
  std::array<uint32_t, kMaxRegThreads> posv{};

  bool in_rds(ThreadId t) const { return rds >> t & 1; }
  bool in_wrts(ThreadId t) const { return wrts >> t & 1; }
  bool in_pend(ThreadId t) const { return pend >> t & 1; }
  bool ovrl_of(ThreadId t) const { return ovrl >> t & 1; }

  size_t index_of(Value v) const {
    for (size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == v) return i;
    throw std::invalid_argument("value not in register domain");
  }
  bool posv_contains(ThreadId t, Value v) const {
    return posv[t] >> index_of(v) & 1;
  }
  std::vector<Value> posv_values(ThreadId t) const {
    std::vector<Value> r;
    for (size_t i = 0; i < domain.size(); ++i)
      if (posv[t] >> i & 1) r.push_back(domain[i]);
    return r;
  }

  friend bool operator==(const RegisterStatus& a, const RegisterStatus& b) {
    return a.kind == b.kind && a.nthreads == b.nthreads && a.domain == b.domain &&
           a.stor == b.stor && a.rds == b.rds && a.wrts == b.wrts &&
           a.pend == b.pend && a.ovrl == b.ovrl && a.rec == b.rec && a.posv == b.posv;
  }
};

inline RegisterStatus initial_status(const RegisterConfig& cfg, uint32_t nthreads) {
  cfg.validate();
  if (nthreads > kMaxRegThreads) throw std::invalid_argument("too many threads");
  RegisterStatus s;
  s.kind = cfg.kind;
  s.nthreads = nthreads;
  s.domain = cfg.domain;
  s.stor = cfg.initial_value();
  s.rec.fill(cfg.initial_value());
  return s;
}

/// Applies the update function of action `a` to status `s`, after checking the
/// owning kind's guard. For a finish_write whose written value is not
/// determined by the status (a safe-register write that overlapped another
/// write), the value may be supplied via `written`; it defaults to rec(t) for
/// safe registers and stor for regular/atomic ones.
inline RegisterStatus update_status(const RegisterStatus& s, Action a,
                                    std::optional<Value> written = std::nullopt) {
  ThreadId t = a.thread();
  if (t >= s.nthreads) throw GuardViolation("thread id outside model");
  const bool ordered_kind = !(s.kind == RegisterKind::Safe);
  RegisterStatus n = s;

  auto require = [](bool ok, const char* guard) {
    if (!ok) throw GuardViolation(std::string("guard violated: ") + guard);
  };

  switch (a.kind()) {
    case ActionKind::StartRead: {
      require(!s.in_rds(t) && !s.in_wrts(t), "t not in rds(s) u wrts(s)");
      switch (s.kind) {
        case RegisterKind::BlockingA:
          require((s.rds | s.wrts) == 0, "(rds(s) u wrts(s)) = {}");
          break;
        case RegisterKind::BlockingI:
        case RegisterKind::BlockingS:
          require(s.wrts == 0, "wrts(s) = {}");
          break;
        default: break;
      }
      n.rds |= 1u << t;
      n.pend |= 1u << t;
      n.ovrl = (n.ovrl & ~(1u << t)) | (s.wrts != 0 ? 1u << t : 0);
      uint32_t mask = 1u << s.index_of(s.stor);
      for (ThreadId u = 0; u < s.nthreads; ++u)
        if (s.in_wrts(u)) mask |= 1u << s.index_of(s.rec[u]);
      n.posv[t] = mask;
      break;
    }
    case ActionKind::FinishRead: {
      require(s.in_rds(t), "t in rds(s)");
      switch (s.kind) {
        case RegisterKind::Safe:
          require(s.ovrl_of(t) || a.value() == s.stor,
                  "ovrl(s,t) or d = stor(s)");
          break;
        case RegisterKind::Regular:
          require(s.posv_contains(t, a.value()), "d in posv(s,t)");
          break;
        default:  // atomic and blocking variants
          require(!s.in_pend(t), "t not in pend(s)");
          require(a.value() == s.rec[t], "d = rec(s,t)");
          break;
      }
      n.rds &= ~(1u << t);
      break;
    }
    case ActionKind::StartWrite: {
      require(!s.in_rds(t) && !s.in_wrts(t), "t not in rds(s) u wrts(s)");
      switch (s.kind) {
        case RegisterKind::BlockingA:
        case RegisterKind::BlockingI:
          require((s.rds | s.wrts) == 0, "(rds(s) u wrts(s)) = {}");
          break;
        case RegisterKind::BlockingS:
          require(s.wrts == 0, "wrts(s) = {}");
          break;
        default: break;
      }
      Value d = a.value();
      size_t di = s.index_of(d);
      n.wrts |= 1u << t;
      n.pend |= 1u << t;
      n.rec[t] = d;
      n.ovrl = (s.wrts != 0 ? s.ovrl | (1u << t) : s.ovrl & ~(1u << t));
      for (ThreadId u = 0; u < s.nthreads; ++u) {
        if (u == t) continue;
        n.ovrl |= 1u << u;
        n.posv[u] |= 1u << di;
      }
      break;
    }
    case ActionKind::FinishWrite: {
      require(s.in_wrts(t), "t in wrts(s)");
      if (ordered_kind) require(!s.in_pend(t), "t not in pend(s)");
      Value d = written ? *written
                        : (s.kind == RegisterKind::Safe ? s.rec[t] : s.stor);
      s.index_of(d);
      n.stor = d;
      n.wrts &= ~(1u << t);
      break;
    }
    case ActionKind::OrderRead: {
      require(ordered_kind && s.kind != RegisterKind::Regular,
              "order_read only in the atomic model");
      require(s.in_rds(t) && s.in_pend(t), "t in rds(s) and t in pend(s)");
      n.pend &= ~(1u << t);
      n.rec[t] = s.stor;
      break;
    }
    case ActionKind::OrderWrite: {
      require(ordered_kind, "order_write not in the safe model");
      require(s.in_wrts(t) && s.in_pend(t), "t in wrts(s) and t in pend(s)");
      n.pend &= ~(1u << t);
      n.stor = s.rec[t];
      break;
    }
    default:
      throw GuardViolation("not a register action");
  }
  return n;
}

namespace detail {

/// Normalised register state used by the lazy component: per-thread operation
/// code plus one value slot, the stored value, and (safe kind) the single
/// non-overlapped pending write value. Information that App B's status object
/// keeps for idle threads is reset to defaults, which shrinks the state space
/// without changing behaviour (it is rebuilt whenever the thread starts an
/// operation).
struct PackedReg {
  uint16_t val[kMaxRegThreads];
  uint8_t code[kMaxRegThreads];
  uint8_t stor;
  uint8_t aux;

  PackedReg() { std::memset(this, 0, sizeof(PackedReg)); }
  friend bool operator==(const PackedReg& a, const PackedReg& b) {
    return std::memcmp(&a, &b, sizeof(PackedReg)) == 0;
  }
};

struct PackedRegHash {
  size_t operator()(const PackedReg& p) const noexcept {
    return detail::hash_words(reinterpret_cast<const uint32_t*>(&p),
                              sizeof(PackedReg) / 4);
  }
};

// per-thread operation codes
enum : uint8_t {
  kIdle = 0,
  // safe
  kSafeRead = 1,
  kSafeReadOvl = 2,
  kSafeWrite = 3,
  kSafeWriteOvl = 4,
  // regular
  kRegReading = 1,   // val = posv mask
  kRegWritePend = 2, // val = intended value index
  kRegWriteOrd = 3,  // val = intended value index
  // atomic and blocking variants
  kAtoReadPend = 1,
  kAtoReadOrd = 2,   // val = captured value index
  kAtoWritePend = 3, // val = intended value index
  kAtoWriteOrd = 4,
};

}  // namespace detail

/// Lazy LTS of one register, per the process equation of its kind. States are
/// materialised as exploration reaches them.
class RegisterComponent : public Component {
 public:
  RegisterComponent(RegisterId id, RegisterConfig cfg, uint32_t nthreads)
      : id_(id), cfg_(std::move(cfg)), nthreads_(nthreads) {
    cfg_.validate();
    if (nthreads_ > kMaxRegThreads)
      throw std::invalid_argument("too many threads for register model");
    detail::PackedReg init;
    init.stor = static_cast<uint8_t>(cfg_.index_of(cfg_.initial_value()));
    intern(init);
  }

  RegisterId id() const { return id_; }
  const RegisterConfig& config() const { return cfg_; }
  size_t num_states() const { return states_.size(); }

  StateId initial_state() override { return 0; }

  bool in_alphabet(Action a) const override {
    return a.has_register() && a.reg() == id_;
  }

  const std::vector<std::pair<Action, StateId>>& successors(StateId s) override {
    if (s >= succ_.size() || !computed_[s]) compute(s);
    return succ_[s];
  }

  /// Decoded status view of a component state (normalised fields).
  RegisterStatus status_of(StateId sid) const {
    const detail::PackedReg& p = states_[sid];
    RegisterStatus st;
    st.kind = cfg_.kind;
    st.nthreads = nthreads_;
    st.domain = cfg_.domain;
    st.stor = cfg_.domain[p.stor];
    st.rec.fill(cfg_.initial_value());
    bool safe = cfg_.kind == RegisterKind::Safe;
    bool regular = cfg_.kind == RegisterKind::Regular;
    for (ThreadId t = 0; t < nthreads_; ++t) {
      uint8_t c = p.code[t];
      if (c == detail::kIdle) continue;
      if (safe) {
        if (c == detail::kSafeRead || c == detail::kSafeReadOvl) st.rds |= 1u << t;
        else st.wrts |= 1u << t;
        if (c == detail::kSafeReadOvl || c == detail::kSafeWriteOvl) st.ovrl |= 1u << t;
        if (c == detail::kSafeWrite && p.aux != 0) st.rec[t] = cfg_.domain[p.aux - 1];
      } else if (regular) {
        if (c == detail::kRegReading) {
          st.rds |= 1u << t;
          st.posv[t] = p.val[t];
        } else {
          st.wrts |= 1u << t;
          st.rec[t] = cfg_.domain[p.val[t]];
          if (c == detail::kRegWritePend) st.pend |= 1u << t;
        }
      } else {
        switch (c) {
          case detail::kAtoReadPend:
            st.rds |= 1u << t;
            st.pend |= 1u << t;
            break;
          case detail::kAtoReadOrd:
            st.rds |= 1u << t;
            st.rec[t] = cfg_.domain[p.val[t]];
            break;
          case detail::kAtoWritePend:
            st.wrts |= 1u << t;
            st.pend |= 1u << t;
            st.rec[t] = cfg_.domain[p.val[t]];
            break;
          case detail::kAtoWriteOrd:
            st.wrts |= 1u << t;
            break;
        }
      }
    }
    return st;
  }

 private:
  StateId intern(const detail::PackedReg& p) {
    auto [it, inserted] = index_.emplace(p, static_cast<StateId>(states_.size()));
    if (inserted) {
      states_.push_back(p);
      succ_.emplace_back();
      computed_.push_back(false);
    }
    return it->second;
  }

  void push(std::vector<std::pair<Action, StateId>>& out, Action a,
            const detail::PackedReg& n) {
    out.emplace_back(a, intern(n));
  }

  void compute(StateId sid) {
    detail::PackedReg p = states_[sid];
    std::vector<std::pair<Action, StateId>> out;
    switch (cfg_.kind) {
      case RegisterKind::Safe: succ_safe(p, out); break;
      case RegisterKind::Regular: succ_regular(p, out); break;
      default: succ_atomic(p, out); break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    succ_[sid] = std::move(out);
    computed_[sid] = true;
  }

  bool any_writer(const detail::PackedReg& p) const {
    for (ThreadId t = 0; t < nthreads_; ++t) {
      uint8_t c = p.code[t];
      if (cfg_.kind == RegisterKind::Safe
              ? (c == detail::kSafeWrite || c == detail::kSafeWriteOvl)
              : cfg_.kind == RegisterKind::Regular
                    ? (c == detail::kRegWritePend || c == detail::kRegWriteOrd)
                    : (c == detail::kAtoWritePend || c == detail::kAtoWriteOrd))
        return true;
    }
    return false;
  }

  bool all_idle(const detail::PackedReg& p) const {
    for (ThreadId t = 0; t < nthreads_; ++t)
      if (p.code[t] != detail::kIdle) return false;
    return true;
  }

  void succ_safe(const detail::PackedReg& p,
                 std::vector<std::pair<Action, StateId>>& out) {
    using namespace detail;
    const auto& dom = cfg_.domain;
    bool writer = any_writer(p);
    for (ThreadId t = 0; t < nthreads_; ++t) {
      uint8_t c = p.code[t];
      if (c == kIdle) {
        {
          PackedReg n = p;
          n.code[t] = writer ? kSafeReadOvl : kSafeRead;
          push(out, Action::start_read(t, id_), n);
        }
        for (size_t di = 0; di < dom.size(); ++di) {
          PackedReg n = p;
          n.code[t] = writer ? kSafeWriteOvl : kSafeWrite;
          // the new write overlaps every other active operation
          for (ThreadId u = 0; u < nthreads_; ++u) {
            if (u == t) continue;
            if (n.code[u] == kSafeRead) n.code[u] = kSafeReadOvl;
            if (n.code[u] == kSafeWrite) {
              n.code[u] = kSafeWriteOvl;
              n.aux = 0;
            }
          }
          n.aux = writer ? 0 : static_cast<uint8_t>(di + 1);
          push(out, Action::start_write(t, id_, dom[di]), n);
        }
      } else if (c == kSafeRead) {
        PackedReg n = p;
        n.code[t] = kIdle;
        push(out, Action::finish_read(t, id_, dom[p.stor]), n);
      } else if (c == kSafeReadOvl) {
        for (Value d : dom) {
          PackedReg n = p;
          n.code[t] = kIdle;
          push(out, Action::finish_read(t, id_, d), n);
        }
      } else if (c == kSafeWrite) {
        PackedReg n = p;
        n.code[t] = kIdle;
        n.stor = static_cast<uint8_t>(p.aux - 1);
        n.aux = 0;
        push(out, Action::finish_write(t, id_), n);
      } else {  // kSafeWriteOvl: an arbitrary domain value gets stored
        for (size_t di = 0; di < dom.size(); ++di) {
          PackedReg n = p;
          n.code[t] = kIdle;
          n.stor = static_cast<uint8_t>(di);
          push(out, Action::finish_write(t, id_), n);
        }
      }
    }
  }

  void succ_regular(const detail::PackedReg& p,
                    std::vector<std::pair<Action, StateId>>& out) {
    using namespace detail;
    const auto& dom = cfg_.domain;
    for (ThreadId t = 0; t < nthreads_; ++t) {
      uint8_t c = p.code[t];
      if (c == kIdle) {
        {
          PackedReg n = p;
          n.code[t] = kRegReading;
          uint16_t mask = uint16_t(1u << p.stor);
          for (ThreadId u = 0; u < nthreads_; ++u)
            if (p.code[u] == kRegWritePend || p.code[u] == kRegWriteOrd)
              mask |= uint16_t(1u << p.val[u]);
          n.val[t] = mask;
          push(out, Action::start_read(t, id_), n);
        }
        for (size_t di = 0; di < dom.size(); ++di) {
          PackedReg n = p;
          n.code[t] = kRegWritePend;
          n.val[t] = static_cast<uint16_t>(di);
          for (ThreadId u = 0; u < nthreads_; ++u)
            if (p.code[u] == kRegReading) n.val[u] |= uint16_t(1u << di);
          push(out, Action::start_write(t, id_, dom[di]), n);
        }
      } else if (c == kRegReading) {
        for (size_t di = 0; di < dom.size(); ++di) {
          if (!(p.val[t] >> di & 1)) continue;
          PackedReg n = p;
          n.code[t] = kIdle;
          n.val[t] = 0;
          push(out, Action::finish_read(t, id_, dom[di]), n);
        }
      } else if (c == kRegWritePend) {
        PackedReg n = p;
        n.code[t] = kRegWriteOrd;
        n.stor = static_cast<uint8_t>(p.val[t]);
        push(out, Action::order_write(t, id_), n);
      } else {  // kRegWriteOrd
        PackedReg n = p;
        n.code[t] = kIdle;
        n.val[t] = 0;
        push(out, Action::finish_write(t, id_), n);
      }
    }
  }

  void succ_atomic(const detail::PackedReg& p,
                   std::vector<std::pair<Action, StateId>>& out) {
    using namespace detail;
    const auto& dom = cfg_.domain;
    bool writer = any_writer(p);
    bool idle_all = all_idle(p);
    for (ThreadId t = 0; t < nthreads_; ++t) {
      uint8_t c = p.code[t];
      if (c == kIdle) {
        bool read_ok, write_ok;
        switch (cfg_.kind) {
          case RegisterKind::BlockingA:
            read_ok = write_ok = idle_all;
            break;
          case RegisterKind::BlockingI:
            read_ok = !writer;
            write_ok = idle_all;
            break;
          case RegisterKind::BlockingS:
            read_ok = !writer;
            write_ok = !writer;  // t itself is idle here, so one op per thread holds
            break;
          default:
            read_ok = write_ok = true;
            break;
        }
        if (read_ok) {
          PackedReg n = p;
          n.code[t] = kAtoReadPend;
          push(out, Action::start_read(t, id_), n);
        }
        if (write_ok) {
          for (size_t di = 0; di < dom.size(); ++di) {
            PackedReg n = p;
            n.code[t] = kAtoWritePend;
            n.val[t] = static_cast<uint16_t>(di);
            push(out, Action::start_write(t, id_, dom[di]), n);
          }
        }
      } else if (c == kAtoReadPend) {
        PackedReg n = p;
        n.code[t] = kAtoReadOrd;
        n.val[t] = p.stor;
        push(out, Action::order_read(t, id_), n);
      } else if (c == kAtoReadOrd) {
        PackedReg n = p;
        n.code[t] = kIdle;
        n.val[t] = 0;
        push(out, Action::finish_read(t, id_, dom[p.val[t]]), n);
      } else if (c == kAtoWritePend) {
        PackedReg n = p;
        n.code[t] = kAtoWriteOrd;
        n.stor = static_cast<uint8_t>(p.val[t]);
        n.val[t] = 0;
        push(out, Action::order_write(t, id_), n);
      } else {  // kAtoWriteOrd
        PackedReg n = p;
        n.code[t] = kIdle;
        push(out, Action::finish_write(t, id_), n);
      }
    }
  }

  RegisterId id_;
  RegisterConfig cfg_;
  uint32_t nthreads_;
  std::deque<detail::PackedReg> states_;
  std::deque<std::vector<std::pair<Action, StateId>>> succ_;
  std::deque<bool> computed_;
  std::unordered_map<detail::PackedReg, StateId, detail::PackedRegHash> index_;
};

namespace detail {

inline Lts materialize_register(RegisterComponent& rc, uint32_t nthreads) {
  Lts l;
  l.add_state();
  for (StateId s = 0; s < l.num_states; ++s) {
    for (const auto& [a, t] : rc.successors(s)) {
      while (t >= l.num_states) l.add_state();
      l.add_transition(s, a, t);
    }
  }
  // declared alphabet per the process figures, independent of reachability
  const auto& cfg = rc.config();
  for (ThreadId t = 0; t < nthreads; ++t) {
    l.declare_action(Action::start_read(t, rc.id()));
    l.declare_action(Action::finish_write(t, rc.id()));
    for (Value d : cfg.domain) {
      l.declare_action(Action::finish_read(t, rc.id(), d));
      l.declare_action(Action::start_write(t, rc.id(), d));
    }
    if (cfg.kind != RegisterKind::Safe) l.declare_action(Action::order_write(t, rc.id()));
    if (cfg.kind != RegisterKind::Safe && cfg.kind != RegisterKind::Regular)
      l.declare_action(Action::order_read(t, rc.id()));
  }
  return l;
}

}  // namespace detail

/// Explicit LTS of a safe/regular/atomic register (App B figures).
inline Lts register_lts(const RegisterConfig& cfg, uint32_t nthreads,
                        RegisterId id = 0) {
  if (is_blocking(cfg.kind))
    throw std::invalid_argument("register_lts: use blocking_variant_lts");
  RegisterComponent rc(id, cfg, nthreads);
  return detail::materialize_register(rc, nthreads);
}

/// Explicit LTS of an atomic register with the strengthened start guards of
/// the three blocking memory models.
inline Lts blocking_variant_lts(const RegisterConfig& cfg, uint32_t nthreads,
                                RegisterId id = 0) {
  if (!is_blocking(cfg.kind))
    throw std::invalid_argument("blocking_variant_lts: kind is not a blocking variant");
  RegisterComponent rc(id, cfg, nthreads);
  return detail::materialize_register(rc, nthreads);
}

}  // namespace justcheck
