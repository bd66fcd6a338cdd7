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
#include <cstdint>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "justcheck/action.hpp"
#include "justcheck/lts.hpp"

namespace justcheck {

struct ExploreCaps {
  uint64_t max_states = 50'000'000;
  uint64_t max_transitions = 100'000'000;  // default transition cap
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
};

class CapExceeded : public std::runtime_error {
 public:
  enum class What { States, Transitions, Time };
  CapExceeded(What w, const std::string& msg) : std::runtime_error(msg), what(w) {}
  What what;
};

/// One component of a parallel composition. Successor lists must be sorted by
/// (label, target) and referentially stable once returned (lazy components
/// should cache them in node-stable storage); components may materialise
/// their state space as the product exploration reaches it.
class Component {
 public:
  virtual ~Component() = default;
  virtual StateId initial_state() = 0;
  virtual const std::vector<std::pair<Action, StateId>>& successors(StateId s) = 0;
  virtual bool in_alphabet(Action a) const = 0;
};

class LtsComponent : public Component {
 public:
  explicit LtsComponent(Lts lts) : lts_(std::move(lts)) {}
  StateId initial_state() override { return lts_.initial; }
  const std::vector<std::pair<Action, StateId>>& successors(StateId s) override {
    return lts_.out[s];
  }
  bool in_alphabet(Action a) const override { return lts_.in_alphabet(a); }
  const Lts& lts() const { return lts_; }

 private:
  Lts lts_;
};

namespace detail {

inline uint64_t hash_words(const uint32_t* p, size_t n) {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

/// Interns fixed-width uint32 vectors into a flat arena; open addressing.
class StateInterner {
 public:
  explicit StateInterner(size_t width) : width_(width) { rehash(1 << 12); }

  size_t size() const { return count_; }

  const uint32_t* state(StateId id) const { return arena_.data() + size_t(id) * width_; }

  // Returns (id, inserted).
  std::pair<StateId, bool> intern(const uint32_t* key) {
    if ((count_ + 1) * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
    uint64_t h = hash_words(key, width_);
    size_t mask = slots_.size() - 1;
    size_t i = h & mask;
    while (slots_[i] != kEmpty) {
      if (hashes_[i] == h &&
          std::memcmp(state(slots_[i]), key, width_ * sizeof(uint32_t)) == 0)
        return {slots_[i], false};
      i = (i + 1) & mask;
    }
    StateId id = static_cast<StateId>(count_++);
    arena_.insert(arena_.end(), key, key + width_);
    slots_[i] = id;
    hashes_[i] = h;
    return {id, true};
  }

 private:
  static constexpr StateId kEmpty = 0xFFFFFFFF;

  void rehash(size_t n) {
    std::vector<StateId> slots(n, kEmpty);
    std::vector<uint64_t> hashes(n, 0);
    size_t mask = n - 1;
    for (size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i] == kEmpty) continue;
      size_t j = hashes_[i] & mask;
      while (slots[j] != kEmpty) j = (j + 1) & mask;
      slots[j] = slots_[i];
      hashes[j] = hashes_[i];
    }
    slots_ = std::move(slots);
    hashes_ = std::move(hashes);
  }

  size_t width_;
  size_t count_ = 0;
  std::vector<uint32_t> arena_;
  std::vector<StateId> slots_;
  std::vector<uint64_t> hashes_;
};

}  // namespace detail

/// Reachable fragment of a CSP-style parallel composition: an action fires iff
/// every component whose alphabet contains it enables it, and moves exactly
/// those components. Product states are vectors of component-local states.
struct Product {
  size_t num_components = 0;
  size_t num_states = 0;
  std::vector<uint32_t> arena;          // num_states * num_components
  std::vector<Transition> edges;        // grouped by src, ascending
  std::vector<uint64_t> edge_offsets;   // num_states + 1
  std::vector<uint32_t> parent_edge;    // discovering edge per state (none: ~0u)

  uint32_t component_state(StateId s, size_t c) const {
    return arena[size_t(s) * num_components + c];
  }
  const uint32_t* state_vector(StateId s) const {
    return arena.data() + size_t(s) * num_components;
  }

  /// Path of edge indices from the initial state to s, via parent edges.
  std::vector<uint32_t> path_from_initial(StateId s) const {
    std::vector<uint32_t> rev;
    while (parent_edge[s] != 0xFFFFFFFF) {
      rev.push_back(parent_edge[s]);
      s = edges[parent_edge[s]].src;
    }
    return {rev.rbegin(), rev.rend()};
  }
};

inline Product build_product(const std::vector<Component*>& comps,
                             const ExploreCaps& caps = {}) {
  const size_t k = comps.size();
  if (k == 0) throw std::invalid_argument("build_product: no components");

  Product p;
  p.num_components = k;
  detail::StateInterner interner(k);

  std::vector<uint32_t> key(k);
  for (size_t i = 0; i < k; ++i) key[i] = comps[i]->initial_state();
  interner.intern(key.data());
  p.parent_edge.push_back(0xFFFFFFFF);
  p.edge_offsets.push_back(0);

  // Owner lists are looked up per label and memoised.
  std::unordered_map<uint32_t, std::vector<uint8_t>> owner_cache;
  auto owners_of = [&](Action a) -> const std::vector<uint8_t>& {
    auto it = owner_cache.find(a.bits());
    if (it != owner_cache.end()) return it->second;
    std::vector<uint8_t> os;
    for (size_t i = 0; i < k; ++i)
      if (comps[i]->in_alphabet(a)) os.push_back(static_cast<uint8_t>(i));
    return owner_cache.emplace(a.bits(), std::move(os)).first->second;
  };

  using SuccVec = std::vector<std::pair<Action, StateId>>;
  std::vector<std::pair<size_t, size_t>> ranges(k);  // successor sub-ranges per owner
  std::vector<const SuccVec*> osucc(k);
  std::vector<size_t> cursor(k);
  uint64_t expansions = 0;

  for (StateId s = 0; s < interner.size(); ++s) {
    if ((++expansions & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > caps.deadline)
      throw CapExceeded(CapExceeded::What::Time, "exploration time budget exceeded");

    std::memcpy(key.data(), interner.state(s), k * sizeof(uint32_t));
    const std::vector<uint32_t> local(key);

    for (size_t i = 0; i < k; ++i) {
      const auto& succ = comps[i]->successors(local[i]);
      for (size_t b = 0; b < succ.size();) {
        Action a = succ[b].first;
        size_t e = b;
        while (e < succ.size() && succ[e].first == a) ++e;
        const auto& owners = owners_of(a);
        if (owners.empty() || owners.front() != i) {
          b = e;
          continue;  // handled from the first owning component
        }
        bool enabled = true;
        for (size_t oi = 0; oi < owners.size(); ++oi) {
          size_t c = owners[oi];
          const auto& sc = c == i ? succ : comps[c]->successors(local[c]);
          auto lo = std::lower_bound(sc.begin(), sc.end(),
                                     std::make_pair(a, StateId(0)));
          auto hi = lo;
          while (hi != sc.end() && hi->first == a) ++hi;
          if (lo == hi) {
            enabled = false;
            break;
          }
          osucc[oi] = &sc;
          ranges[oi] = {size_t(lo - sc.begin()), size_t(hi - sc.begin())};
        }
        if (!enabled) {
          b = e;
          continue;
        }
        // Cartesian product of the owners' nondeterministic choices.
        for (size_t oi = 0; oi < owners.size(); ++oi) cursor[oi] = ranges[oi].first;
        for (bool more = true; more;) {
          std::memcpy(key.data(), local.data(), k * sizeof(uint32_t));
          for (size_t oi = 0; oi < owners.size(); ++oi)
            key[owners[oi]] = (*osucc[oi])[cursor[oi]].second;
          auto [dst, inserted] = interner.intern(key.data());
          if (inserted) {
            if (interner.size() > caps.max_states)
              throw CapExceeded(CapExceeded::What::States, "state cap exceeded");
            p.parent_edge.push_back(static_cast<uint32_t>(p.edges.size()));
          }
          p.edges.push_back({s, a, dst});
          if (p.edges.size() > caps.max_transitions)
            throw CapExceeded(CapExceeded::What::Transitions, "transition cap exceeded");
          size_t oi = owners.size();
          for (;;) {  // odometer advance
            if (oi == 0) {
              more = false;
              break;
            }
            --oi;
            if (++cursor[oi] < ranges[oi].second) break;
            cursor[oi] = ranges[oi].first;
          }
        }
        b = e;
      }
    }
    p.edge_offsets.push_back(p.edges.size());
  }

  p.num_states = interner.size();
  p.arena.resize(p.num_states * k);
  for (StateId s = 0; s < p.num_states; ++s)
    std::memcpy(p.arena.data() + size_t(s) * k, interner.state(s),
                k * sizeof(uint32_t));
  return p;
}

/// CSP parallel composition of explicit LTSs (synchronisation on all shared
/// actions, by declared alphabet). Only the reachable part is materialised;
/// product states keep their component vectors.
inline Lts compose_parallel(const std::vector<Lts>& components,
                            const ExploreCaps& caps = {}) {
  if (components.empty())
    throw std::invalid_argument("compose_parallel: need at least one component");
  std::vector<std::unique_ptr<LtsComponent>> owned;
  std::vector<Component*> comps;
  for (const auto& l : components) {
    owned.push_back(std::make_unique<LtsComponent>(l));
    comps.push_back(owned.back().get());
  }
  Product p = build_product(comps, caps);

  Lts r;
  r.num_states = static_cast<StateId>(p.num_states);
  r.initial = 0;
  r.out.resize(p.num_states);
  for (const auto& e : p.edges) r.out[e.src].emplace_back(e.label, e.dst);
  for (auto& v : r.out) std::sort(v.begin(), v.end());
  for (const auto& l : components)
    for (Action a : l.actions) r.declare_action(a);
  r.state_components.resize(p.num_states);
  for (StateId s = 0; s < p.num_states; ++s)
    r.state_components[s].assign(p.state_vector(s), p.state_vector(s) + comps.size());
  return r;
}

}  // namespace justcheck
