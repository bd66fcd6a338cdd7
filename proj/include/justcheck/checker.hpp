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

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "justcheck/interference.hpp"
#include "justcheck/model.hpp"

namespace justcheck {

enum class PropertyKind { MutualExclusion, DeadlockFreedom, StarvationFreedom };

inline const char* property_name(PropertyKind p) {
  switch (p) {
    case PropertyKind::MutualExclusion: return "mutex";
    case PropertyKind::DeadlockFreedom: return "deadlock";
    case PropertyKind::StarvationFreedom: return "starvation";
  }
  return "?";
}

struct VerdictStats {
  uint64_t states = 0;
  uint64_t transitions = 0;
  uint64_t fixpoint_iterations = 0;
  int64_t wall_ms = 0;
};

/// Violating-path evidence. For liveness the path is the trigger prefix plus
/// a repeated cycle; a toy model whose just completion is finite (only
/// blockable actions left enabled) has an empty cycle.
struct LivenessWitness {
  ThreadId thread = 0;               // trigger thread t
  std::vector<Transition> prefix;    // from the initial state
  std::vector<Transition> cycle;     // repeated forever; may be empty (see above)
  size_t trigger_pos = 0;            // index of the noncrit(t) step in prefix
  size_t entry_pos = 0;              // state position where the crit-free core starts
};

struct Verdict {
  PropertyKind property = PropertyKind::MutualExclusion;
  bool holds = false;
  std::optional<std::vector<Transition>> safety_witness;
  std::optional<LivenessWitness> liveness_witness;
  VerdictStats stats;
};

namespace detail {

struct Bits {
  size_t n = 0;
  std::vector<uint64_t> w;

  Bits() = default;
  explicit Bits(size_t n_, bool fill = false)
      : n(n_), w((n_ + 63) / 64, fill ? ~0ull : 0ull) {
    if (fill && n % 64) w.back() = (1ull << (n % 64)) - 1;
  }
  bool get(size_t i) const { return w[i >> 6] >> (i & 63) & 1; }
  void set(size_t i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(size_t i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }
};

}  // namespace detail

using ResponseSet = std::function<bool(Action)>;

inline ResponseSet crit_all() {
  return [](Action a) { return a.kind() == ActionKind::Crit; };
}
inline ResponseSet crit_of(ThreadId t) {
  return [t](Action a) { return a.kind() == ActionKind::Crit && a.thread() == t; };
}

/// Result of the greatest-fixpoint core of the App G liveness formulas: the
/// largest set X of states such that every enabled non-blockable action has a
/// response-free discharge path ending in an interfering, non-response
/// transition back into X. Equivalently: the states admitting a just
/// completion on which no response action ever occurs.
struct NuCore {
  detail::Bits X;
  std::vector<InterfererClass> classes;   // sorted
  std::vector<uint32_t> class_offsets;    // per state, into class_ids
  std::vector<uint16_t> class_ids;        // enabled non-blockable classes
  uint64_t iterations = 0;

  std::span<const uint16_t> state_classes(StateId s) const {
    return {class_ids.data() + class_offsets[s], class_ids.data() + class_offsets[s + 1]};
  }
};

inline NuCore nu_core(
    const Model& m, const ResponseSet& response, ConcurrencyMode mode,
    std::optional<detail::Bits> initial = std::nullopt,
    std::chrono::steady_clock::time_point deadline =
        std::chrono::steady_clock::time_point::max()) {
  const size_t n = m.num_states();
  const auto& edges = m.product().edges;
  NuCore nu;

  // Enabled-class table, batched by interferer-class descriptor.
  std::set<InterfererClass> cset;
  for (const auto& e : edges)
    if (!blockable(e.label)) cset.insert(interferer_class(mode, e.label));
  nu.classes.assign(cset.begin(), cset.end());
  std::map<InterfererClass, uint16_t> cid;
  for (size_t i = 0; i < nu.classes.size(); ++i)
    cid[nu.classes[i]] = static_cast<uint16_t>(i);

  nu.class_offsets.assign(n + 1, 0);
  std::vector<uint16_t> tmp;
  nu.class_ids.reserve(edges.size() / 4 + 1);
  for (StateId s = 0; s < n; ++s) {
    tmp.clear();
    for (const auto& e : m.out_edges(s))
      if (!blockable(e.label)) tmp.push_back(cid.at(interferer_class(mode, e.label)));
    std::sort(tmp.begin(), tmp.end());
    tmp.erase(std::unique(tmp.begin(), tmp.end()), tmp.end());
    nu.class_ids.insert(nu.class_ids.end(), tmp.begin(), tmp.end());
    nu.class_offsets[s + 1] = static_cast<uint32_t>(nu.class_ids.size());
  }

  nu.X = initial ? std::move(*initial) : detail::Bits(n, true);
  detail::Bits good(n);
  std::vector<uint32_t> work;
  bool changed = true;
  while (changed) {
    changed = false;
    ++nu.iterations;
    if (std::chrono::steady_clock::now() > deadline)
      throw CapExceeded(CapExceeded::What::Time, "fixpoint time budget exceeded");
    for (uint16_t k = 0; k < nu.classes.size(); ++k) {
      const InterfererClass& K = nu.classes[k];
      // Backward reachability over response-free edges from the states with a
      // qualifying discharge transition into X.
      std::fill(good.w.begin(), good.w.end(), 0);
      work.clear();
      for (const auto& e : edges) {
        if (response(e.label) || !K.matches(e.label) || !nu.X.get(e.dst)) continue;
        if (!good.get(e.src)) {
          good.set(e.src);
          work.push_back(e.src);
        }
      }
      while (!work.empty()) {
        StateId u = work.back();
        work.pop_back();
        for (uint32_t ei : m.in_edges(u)) {
          const Transition& e = edges[ei];
          if (response(e.label) || good.get(e.src)) continue;
          good.set(e.src);
          work.push_back(e.src);
        }
      }
      // Prune states that enable this class but cannot discharge it.
      for (StateId s = 0; s < n; ++s) {
        if (!nu.X.get(s) || good.get(s)) continue;
        for (uint16_t ck : nu.state_classes(s)) {
          if (ck == k) {
            nu.X.reset(s);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return nu;
}

namespace detail {

/// Shortest response-free discharge for class K from u: interior transitions
/// avoid the response set, the final transition's label is in K minus the
/// response set and lands in X.
inline std::vector<Transition> discharge_segment(const Model& m, const NuCore& nu,
                                                 StateId u, const InterfererClass& K,
                                                 const ResponseSet& response) {
  std::map<StateId, uint32_t> parent;  // state -> incoming edge index
  std::vector<StateId> queue{u};
  parent[u] = 0xFFFFFFFF;
  const auto& edges = m.product().edges;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    StateId x = queue[qi];
    for (uint64_t ei = m.product().edge_offsets[x]; ei < m.product().edge_offsets[x + 1];
         ++ei) {
      const Transition& e = edges[ei];
      if (response(e.label)) continue;
      if (K.matches(e.label) && nu.X.get(e.dst)) {
        std::vector<Transition> seg{e};
        StateId at = x;
        while (parent.at(at) != 0xFFFFFFFF) {
          seg.push_back(edges[parent.at(at)]);
          at = edges[parent.at(at)].src;
        }
        std::reverse(seg.begin(), seg.end());
        return seg;
      }
    }
    for (uint64_t ei = m.product().edge_offsets[x]; ei < m.product().edge_offsets[x + 1];
         ++ei) {
      const Transition& e = edges[ei];
      if (response(e.label) || parent.count(e.dst)) continue;
      parent[e.dst] = static_cast<uint32_t>(ei);
      queue.push_back(e.dst);
    }
  }
  throw std::logic_error("discharge segment missing: fixpoint bug");
}

}  // namespace detail

/// Builds the repeated part of a liveness witness from an entry state of the
/// fixpoint set: obligations of the enabled action classes are discharged
/// round-robin until a (state, round-robin position) pair repeats, which
/// closes the cycle. Returns {extension, cycle}; an empty cycle means the
/// just completion is finite (a state with only blockable actions enabled).
inline std::pair<std::vector<Transition>, std::vector<Transition>>
extract_lasso_cycle(const Model& m, const NuCore& nu, StateId entry,
                    const ResponseSet& response) {
  if (!nu.X.get(entry)) throw std::invalid_argument("entry not in fixpoint set");
  std::vector<Transition> steps;
  std::map<std::pair<StateId, size_t>, size_t> seen;
  StateId cur = entry;
  size_t p = 0;
  const size_t nc = nu.classes.size();
  if (nc == 0) return {steps, {}};
  while (true) {
    auto key = std::make_pair(cur, p);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second == steps.size()) return {std::move(steps), {}};  // finite
      std::vector<Transition> ext(steps.begin(), steps.begin() + it->second);
      std::vector<Transition> cyc(steps.begin() + it->second, steps.end());
      return {std::move(ext), std::move(cyc)};
    }
    seen[key] = steps.size();
    bool enabled = false;
    for (uint16_t ck : nu.state_classes(cur))
      if (ck == p) {
        enabled = true;
        break;
      }
    if (enabled) {
      auto seg = detail::discharge_segment(m, nu, cur, nu.classes[p], response);
      cur = seg.back().dst;
      steps.insert(steps.end(), seg.begin(), seg.end());
    }
    p = (p + 1) % nc;
  }
}

/// Mutual exclusion: no reachable state enables crit(t) and crit(t') for two
/// distinct threads. The witness is a shortest path to a violating state.
inline Verdict check_mutual_exclusion(const Model& m) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.property = PropertyKind::MutualExclusion;
  v.holds = true;
  for (StateId s = 0; s < m.num_states(); ++s) {
    int seen_thread = -1;
    bool bad = false;
    for (const auto& e : m.out_edges(s)) {
      if (e.label.kind() != ActionKind::Crit) continue;
      if (seen_thread >= 0 && seen_thread != int(e.label.thread())) {
        bad = true;
        break;
      }
      seen_thread = int(e.label.thread());
    }
    if (bad) {
      v.holds = false;
      std::vector<Transition> path;
      for (uint32_t ei : m.product().path_from_initial(s))
        path.push_back(m.product().edges[ei]);
      v.safety_witness = std::move(path);
      break;
    }
  }
  v.stats.states = m.num_states();
  v.stats.transitions = m.num_edges();
  v.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return v;
}

inline Verdict check_liveness(
    const Model& m, PropertyKind property, ConcurrencyMode mode,
    std::chrono::steady_clock::time_point deadline =
        std::chrono::steady_clock::time_point::max()) {
  if (property == PropertyKind::MutualExclusion)
    throw std::invalid_argument("check_liveness: not a liveness property");
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.property = property;
  v.holds = true;
  v.stats.states = m.num_states();
  v.stats.transitions = m.num_edges();
  const auto& edges = m.product().edges;

  auto finish = [&]() {
    v.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return v;
  };

  auto build_witness = [&](ThreadId t, uint32_t trigger_edge,
                           const std::vector<Transition>& avoid_path, StateId entry,
                           const NuCore& nu, const ResponseSet& response) {
    LivenessWitness w;
    w.thread = t;
    for (uint32_t ei : m.product().path_from_initial(edges[trigger_edge].src))
      w.prefix.push_back(edges[ei]);
    w.trigger_pos = w.prefix.size();
    w.prefix.push_back(edges[trigger_edge]);
    w.prefix.insert(w.prefix.end(), avoid_path.begin(), avoid_path.end());
    w.entry_pos = w.prefix.size();
    auto [ext, cyc] = extract_lasso_cycle(m, nu, entry, response);
    w.prefix.insert(w.prefix.end(), ext.begin(), ext.end());
    w.cycle = std::move(cyc);
    return w;
  };

  if (property == PropertyKind::DeadlockFreedom) {
    ResponseSet response = crit_all();
    NuCore nu = nu_core(m, response, mode, std::nullopt, deadline);
    v.stats.fixpoint_iterations = nu.iterations;
    if (!nu.X.any()) return finish();
    for (ThreadId t = 0; t < m.num_threads(); ++t) {
      Action crit_t = Action::crit(t);
      // states reaching X while avoiding crit(t)
      detail::Bits reach = nu.X;
      std::vector<StateId> work;
      for (StateId s = 0; s < m.num_states(); ++s)
        if (reach.get(s)) work.push_back(s);
      while (!work.empty()) {
        StateId u = work.back();
        work.pop_back();
        for (uint32_t ei : m.in_edges(u)) {
          const Transition& e = edges[ei];
          if (e.label == crit_t || reach.get(e.src)) continue;
          reach.set(e.src);
          work.push_back(e.src);
        }
      }
      for (uint32_t ei = 0; ei < edges.size(); ++ei) {
        const Transition& e = edges[ei];
        if (e.label != Action::noncrit(t) || !reach.get(e.dst)) continue;
        v.holds = false;
        // forward path from the trigger target into X, avoiding crit(t)
        std::vector<Transition> avoid;
        if (!nu.X.get(e.dst)) {
          std::map<StateId, uint32_t> parent{{e.dst, 0xFFFFFFFFu}};
          std::vector<StateId> q{e.dst};
          StateId hit = e.dst;
          for (size_t qi = 0; qi < q.size(); ++qi) {
            StateId x = q[qi];
            if (nu.X.get(x)) {
              hit = x;
              break;
            }
            for (uint64_t j = m.product().edge_offsets[x];
                 j < m.product().edge_offsets[x + 1]; ++j) {
              const Transition& f = edges[j];
              if (f.label == crit_t || parent.count(f.dst) || !reach.get(f.dst))
                continue;
              parent[f.dst] = static_cast<uint32_t>(j);
              q.push_back(f.dst);
            }
          }
          for (StateId at = hit; parent.at(at) != 0xFFFFFFFFu;
               at = edges[parent.at(at)].src)
            avoid.push_back(edges[parent.at(at)]);
          std::reverse(avoid.begin(), avoid.end());
        }
        StateId entry = avoid.empty() ? e.dst : avoid.back().dst;
        v.liveness_witness = build_witness(t, ei, avoid, entry, nu, response);
        return finish();
      }
    }
    return finish();
  }

  // Starvation freedom: one fixpoint per thread, response = {crit(t)}.
  for (ThreadId t = 0; t < m.num_threads(); ++t) {
    ResponseSet response = crit_of(t);
    NuCore nu = nu_core(m, response, mode, std::nullopt, deadline);
    v.stats.fixpoint_iterations += nu.iterations;
    if (!nu.X.any()) continue;
    for (uint32_t ei = 0; ei < edges.size(); ++ei) {
      const Transition& e = edges[ei];
      if (e.label != Action::noncrit(t) || !nu.X.get(e.dst)) continue;
      v.holds = false;
      v.liveness_witness = build_witness(t, ei, {}, e.dst, nu, response);
      return finish();
    }
  }
  return finish();
}

// ---- lasso justness --------------------------------------------------------

namespace detail {

inline void check_replay(const Model& m, const Lasso& l) {
  if (!l.well_formed()) throw std::invalid_argument("lasso is not well-formed");
  auto ok = [&](const Transition& t) {
    for (const auto& e : m.out_edges(t.src))
      if (e.label == t.label && e.dst == t.dst) return true;
    return false;
  };
  for (const auto& t : l.prefix)
    if (!ok(t)) throw std::invalid_argument("lasso does not replay in the model");
  for (const auto& t : l.cycle)
    if (!ok(t)) throw std::invalid_argument("lasso does not replay in the model");
}

}  // namespace detail

/// Justness of the infinite path prefix . cycle^omega, decided via the
/// explicit characterisation: compute the actions thread-enabled by the path
/// (threads silent on the cycle, component-level enabledness at their final
/// state) and the labels occurring infinitely often (the cycle labels), then
/// apply the per-mode occurrence conditions.
inline bool is_just_lasso(const Model& m, const Lasso& l, ConcurrencyMode mode) {
  if (!m.has_thread_components())
    throw std::invalid_argument("is_just_lasso needs a composed thread-register model");
  detail::check_replay(m, l);

  std::vector<bool> acts(m.num_threads(), false);
  std::set<RegisterId> start_on, sw_on;
  for (const auto& t : l.cycle) {
    acts[t.label.thread()] = true;
    if (t.label.is_start()) start_on.insert(t.label.reg());
    if (t.label.is_start_write()) sw_on.insert(t.label.reg());
  }

  StateId at_cycle = l.cycle.front().src;
  for (ThreadId t = 0; t < m.num_threads(); ++t) {
    if (acts[t]) continue;
    uint32_t comp = m.thread_state(at_cycle, t);
    for (const auto& [a, succ] : m.thread_lts(t).out[comp]) {
      (void)succ;
      if (blockable(a)) continue;
      // a is thread-enabled by the path
      if (mode == ConcurrencyMode::T) return false;
      if (!a.is_start()) return false;
      RegisterId r = a.reg();
      switch (mode) {
        case ConcurrencyMode::S:
          if (!sw_on.count(r)) return false;
          break;
        case ConcurrencyMode::I:
          if (a.is_start_write() && !start_on.count(r)) return false;
          if (a.is_start_read() && !sw_on.count(r)) return false;
          break;
        case ConcurrencyMode::A:
          if (!start_on.count(r)) return false;
          break;
        default:
          break;
      }
    }
  }
  return true;
}

/// Direct decision of Def-2.2 justness on a lasso: every suffix position is
/// inspected; an enabled non-blockable action must be followed, within the
/// suffix, by an occurrence of an interfering label. Independent of the
/// characterisation above; used as its test oracle.
inline bool just_lasso_direct(const Model& m, const Lasso& l, ConcurrencyMode mode) {
  detail::check_replay(m, l);

  std::set<Action> cycle_labels;
  for (const auto& t : l.cycle) cycle_labels.insert(t.label);

  auto covered = [&](Action a, const std::set<Action>& labels) {
    for (Action b : labels)
      if (interferes(mode, a, b)) return true;
    return false;
  };
  auto state_ok = [&](StateId s, const std::set<Action>& labels) {
    for (const auto& e : m.out_edges(s)) {
      if (blockable(e.label)) continue;
      if (!covered(e.label, labels)) return false;
    }
    return true;
  };

  // prefix positions, with suffix label sets accumulated from the back
  std::vector<std::set<Action>> suffix(l.prefix.size() + 1);
  suffix[l.prefix.size()] = cycle_labels;
  for (size_t i = l.prefix.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i].insert(l.prefix[i].label);
  }
  for (size_t i = 0; i < l.prefix.size(); ++i)
    if (!state_ok(l.prefix[i].src, suffix[i])) return false;
  // cycle positions all see every cycle label
  for (const auto& t : l.cycle)
    if (!state_ok(t.src, cycle_labels)) return false;
  return true;
}

// ---- brute force oracle -----------------------------------------------------

/// States from which a just, response-free completion exists (possibly a
/// finite one). Exhaustive: SCC decomposition of the response-free subgraph
/// with iterative pruning of states whose enabled non-blockable actions are
/// not interfered by any label of their component, plus the states where only
/// blockable actions remain enabled; closed backwards over response-free
/// edges.
inline detail::Bits just_completion_states(const Model& m, const ResponseSet& response,
                                           ConcurrencyMode mode) {
  const size_t n = m.num_states();
  const auto& edges = m.product().edges;

  std::vector<char> alive(n, 1);
  std::vector<int> comp(n);
  detail::Bits good(n);

  // Tarjan over the response-free subgraph restricted to alive states.
  auto sccs = [&]() {
    std::vector<int> idx(n, -1), low(n, 0), on(n, 0);
    std::vector<StateId> stk;
    std::fill(comp.begin(), comp.end(), -1);
    int next = 0, ncomp = 0;
    struct Frame {
      StateId v;
      uint64_t ei;
    };
    std::vector<Frame> call;
    for (StateId root = 0; root < n; ++root) {
      if (!alive[root] || idx[root] != -1) continue;
      call.push_back({root, m.product().edge_offsets[root]});
      idx[root] = low[root] = next++;
      stk.push_back(root);
      on[root] = 1;
      while (!call.empty()) {
        auto& f = call.back();
        if (f.ei < m.product().edge_offsets[f.v + 1]) {
          const Transition& e = edges[f.ei++];
          if (response(e.label) || !alive[e.dst]) continue;
          if (idx[e.dst] == -1) {
            idx[e.dst] = low[e.dst] = next++;
            stk.push_back(e.dst);
            on[e.dst] = 1;
            call.push_back({e.dst, m.product().edge_offsets[e.dst]});
          } else if (on[e.dst]) {
            low[f.v] = std::min(low[f.v], idx[e.dst]);
          }
        } else {
          StateId v = f.v;
          call.pop_back();
          if (!call.empty())
            low[call.back().v] = std::min(low[call.back().v], low[v]);
          if (low[v] == idx[v]) {
            while (true) {
              StateId u = stk.back();
              stk.pop_back();
              on[u] = 0;
              comp[u] = ncomp;
              if (u == v) break;
            }
            ++ncomp;
          }
        }
      }
    }
    return ncomp;
  };

  bool removed = true;
  while (removed) {
    removed = false;
    int ncomp = sccs();
    std::vector<std::set<Action>> labels(ncomp);
    std::vector<char> has_edge(ncomp, 0);
    for (const auto& e : edges) {
      if (response(e.label) || !alive[e.src] || !alive[e.dst]) continue;
      if (comp[e.src] == comp[e.dst]) {
        labels[comp[e.src]].insert(e.label);
        has_edge[comp[e.src]] = 1;
      }
    }
    std::fill(good.w.begin(), good.w.end(), 0);
    for (StateId s = 0; s < n; ++s) {
      if (!alive[s] || !has_edge[comp[s]]) continue;
      bool ok = true;
      for (const auto& e : m.out_edges(s)) {
        if (blockable(e.label)) continue;
        bool cov = false;
        for (Action b : labels[comp[s]])
          if (interferes(mode, e.label, b)) {
            cov = true;
            break;
          }
        if (!cov) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        alive[s] = 0;
        removed = true;
      } else {
        good.set(s);
      }
    }
  }

  // finite completions: only blockable actions (or nothing) enabled
  for (StateId s = 0; s < n; ++s) {
    bool quiet = true;
    for (const auto& e : m.out_edges(s))
      if (!blockable(e.label)) {
        quiet = false;
        break;
      }
    if (quiet) good.set(s);
  }

  // backward closure over response-free edges
  std::vector<StateId> work;
  for (StateId s = 0; s < n; ++s)
    if (good.get(s)) work.push_back(s);
  while (!work.empty()) {
    StateId u = work.back();
    work.pop_back();
    for (uint32_t ei : m.in_edges(u)) {
      const Transition& e = edges[ei];
      if (response(e.label) || good.get(e.src)) continue;
      good.set(e.src);
      work.push_back(e.src);
    }
  }
  return good;
}

/// Independent liveness oracle by exhaustive search over the reachable graph;
/// rejects models larger than `bound` states. Used by the test suites.
inline Verdict brute_force_liveness(const Model& m, PropertyKind property,
                                    ConcurrencyMode mode, size_t bound = 200) {
  if (m.num_states() > bound)
    throw std::invalid_argument("brute_force_liveness: model too large");
  Verdict v;
  v.property = property;
  v.holds = true;
  v.stats.states = m.num_states();
  v.stats.transitions = m.num_edges();
  const auto& edges = m.product().edges;

  if (property == PropertyKind::DeadlockFreedom) {
    detail::Bits J = just_completion_states(m, crit_all(), mode);
    for (ThreadId t = 0; t < m.num_threads() && v.holds; ++t) {
      Action crit_t = Action::crit(t);
      detail::Bits reach = J;
      std::vector<StateId> work;
      for (StateId s = 0; s < m.num_states(); ++s)
        if (reach.get(s)) work.push_back(s);
      while (!work.empty()) {
        StateId u = work.back();
        work.pop_back();
        for (uint32_t ei : m.in_edges(u)) {
          const Transition& e = edges[ei];
          if (e.label == crit_t || reach.get(e.src)) continue;
          reach.set(e.src);
          work.push_back(e.src);
        }
      }
      for (const auto& e : edges)
        if (e.label == Action::noncrit(t) && reach.get(e.dst)) {
          v.holds = false;
          break;
        }
    }
    return v;
  }
  if (property == PropertyKind::StarvationFreedom) {
    for (ThreadId t = 0; t < m.num_threads() && v.holds; ++t) {
      detail::Bits J = just_completion_states(m, crit_of(t), mode);
      for (const auto& e : edges)
        if (e.label == Action::noncrit(t) && J.get(e.dst)) {
          v.holds = false;
          break;
        }
    }
    return v;
  }
  return check_mutual_exclusion(m);
}

// ---- witness validation and rendering --------------------------------------

/// Replays a liveness witness and checks the full soundness contract: valid
/// transitions, the trigger at its recorded position, no crit(t) between
/// trigger and core entry, no response action from the core entry onwards,
/// and justness of the lasso under the queried mode.
inline bool validate_liveness_witness(const Model& m, const LivenessWitness& w,
                                      PropertyKind property, ConcurrencyMode mode) {
  if (property == PropertyKind::MutualExclusion) return false;
  Lasso l;
  l.start = 0;
  l.prefix = w.prefix;
  l.cycle = w.cycle;
  if (w.trigger_pos >= w.prefix.size()) return false;
  if (w.prefix[w.trigger_pos].label != Action::noncrit(w.thread)) return false;
  if (w.entry_pos < w.trigger_pos + 1 || w.entry_pos > w.prefix.size()) return false;

  ResponseSet response = property == PropertyKind::DeadlockFreedom
                             ? crit_all()
                             : crit_of(w.thread);
  // between trigger and entry: no crit(w.thread)
  for (size_t i = w.trigger_pos + 1; i < w.entry_pos; ++i)
    if (w.prefix[i].label == Action::crit(w.thread)) return false;
  // from entry onwards: no response at all
  for (size_t i = w.entry_pos; i < w.prefix.size(); ++i)
    if (response(w.prefix[i].label)) return false;
  for (const auto& t : w.cycle)
    if (response(t.label)) return false;

  if (w.cycle.empty()) {
    // finite completion: replay and require only blockable actions at the end
    StateId at = 0;
    for (const auto& t : w.prefix) {
      if (t.src != at) return false;
      bool found = false;
      for (const auto& e : m.out_edges(t.src))
        if (e.label == t.label && e.dst == t.dst) found = true;
      if (!found) return false;
      at = t.dst;
    }
    for (const auto& e : m.out_edges(at))
      if (!blockable(e.label)) return false;
    return true;
  }
  try {
    return is_just_lasso(m, l, mode);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// Text form: numbered steps `k: <label>`, the repeated part delimited by
/// `--- cycle ---`.
inline std::string format_witness_path(const Model& m,
                                       const std::vector<Transition>& prefix,
                                       const std::vector<Transition>& cycle = {}) {
  std::ostringstream os;
  size_t k = 0;
  auto names = m.reg_namer();
  for (const auto& t : prefix) os << k++ << ": " << render(t.label, names) << "\n";
  if (!cycle.empty()) {
    os << "--- cycle ---\n";
    for (const auto& t : cycle) os << k++ << ": " << render(t.label, names) << "\n";
  }
  return os.str();
}

}  // namespace justcheck
