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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "justcheck/compose.hpp"
#include "justcheck/program.hpp"
#include "justcheck/registers.hpp"

namespace justcheck {

/// A composed thread-register model: components are the N thread LTSs
/// followed by the register LTSs, with the reachable product materialised.
/// Immutable after construction.
class Model {
 public:
  Model(std::vector<ThreadProgram> programs, std::vector<RegisterConfig> registers,
        const ExploreCaps& caps = {})
      : programs_(std::move(programs)), registers_(std::move(registers)) {
    nthreads_ = static_cast<uint32_t>(programs_.size());
    for (uint32_t t = 0; t < nthreads_; ++t) {
      if (programs_[t].thread != t)
        throw std::invalid_argument("programs must be ordered by thread id");
      thread_lts_.push_back(compile_thread(programs_[t], registers_));
    }
    std::vector<Component*> comps;
    for (uint32_t t = 0; t < nthreads_; ++t) {
      thread_comps_.push_back(std::make_unique<LtsComponent>(thread_lts_[t]));
      comps.push_back(thread_comps_.back().get());
    }
    for (uint32_t r = 0; r < registers_.size(); ++r) {
      register_comps_.push_back(
          std::make_unique<RegisterComponent>(r, registers_[r], nthreads_));
      comps.push_back(register_comps_.back().get());
    }
    product_ = build_product(comps, caps);
  }

  /// Wraps an explicit LTS as a single-component model (reachable part only).
  /// Fixpoint and oracle machinery work on such models; lasso justness needs
  /// real thread components and rejects them.
  static Model from_explicit(const Lts& lts, uint32_t nthreads) {
    Model m;
    m.nthreads_ = nthreads;
    std::vector<StateId> map(lts.num_states, 0xFFFFFFFF);
    std::vector<StateId> order{lts.initial};
    map[lts.initial] = 0;
    m.product_.num_components = 1;
    m.product_.parent_edge.push_back(0xFFFFFFFF);
    m.product_.edge_offsets.push_back(0);
    for (size_t q = 0; q < order.size(); ++q) {
      StateId s = order[q];
      for (const auto& [a, t] : lts.out[s]) {
        if (map[t] == 0xFFFFFFFF) {
          map[t] = static_cast<StateId>(order.size());
          order.push_back(t);
          m.product_.parent_edge.push_back(
              static_cast<uint32_t>(m.product_.edges.size()));
        }
        m.product_.edges.push_back({static_cast<StateId>(q), a, map[t]});
      }
      m.product_.edge_offsets.push_back(m.product_.edges.size());
    }
    m.product_.num_states = order.size();
    m.product_.arena.assign(order.begin(), order.end());
    return m;
  }

  uint32_t num_threads() const { return nthreads_; }
  bool has_thread_components() const { return thread_lts_.size() == nthreads_; }
  size_t num_states() const { return product_.num_states; }
  size_t num_edges() const { return product_.edges.size(); }
  const Product& product() const { return product_; }
  const std::vector<RegisterConfig>& registers() const { return registers_; }
  const Lts& thread_lts(ThreadId t) const { return thread_lts_[t]; }
  const RegisterComponent& register_component(uint32_t r) const {
    return *register_comps_[r];
  }

  std::string reg_name(RegisterId r) const {
    return r < registers_.size() ? registers_[r].name : "r" + std::to_string(r);
  }
  std::function<std::string(RegisterId)> reg_namer() const {
    return [this](RegisterId r) { return reg_name(r); };
  }

  std::span<const Transition> out_edges(StateId s) const {
    return {product_.edges.data() + product_.edge_offsets[s],
            product_.edges.data() + product_.edge_offsets[s + 1]};
  }

  uint32_t thread_state(StateId s, ThreadId t) const {
    return product_.component_state(s, t);
  }
  uint32_t register_state(StateId s, uint32_t r) const {
    return product_.component_state(s, nthreads_ + r);
  }

  bool state_enables(StateId s, Action a) const {
    for (const auto& e : out_edges(s))
      if (e.label == a) return true;
    return false;
  }

  /// Reverse adjacency: for each state, the indices of its incoming edges.
  const std::vector<uint32_t>& in_edge_index() const {
    ensure_reverse();
    return rev_edges_;
  }
  std::span<const uint32_t> in_edges(StateId s) const {
    ensure_reverse();
    return {rev_edges_.data() + rev_offsets_[s],
            rev_edges_.data() + rev_offsets_[s + 1]};
  }

  /// Explicit LTS view (small models / debugging).
  Lts to_lts() const {
    Lts l;
    l.num_states = static_cast<StateId>(product_.num_states);
    l.initial = 0;
    l.out.resize(l.num_states);
    for (const auto& e : product_.edges) l.out[e.src].emplace_back(e.label, e.dst);
    for (auto& v : l.out) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (const auto& tl : thread_lts_)
      for (Action a : tl.actions) l.declare_action(a);
    for (StateId s = 0; s < l.num_states; ++s)
      for (const auto& [a, d] : l.out[s]) {
        (void)d;
        l.declare_action(a);
      }
    l.state_components.resize(l.num_states);
    for (StateId s = 0; s < l.num_states; ++s)
      l.state_components[s].assign(
          product_.state_vector(s),
          product_.state_vector(s) + product_.num_components);
    return l;
  }

 private:
  Model() = default;

  void ensure_reverse() const {
    if (!rev_offsets_.empty()) return;
    size_t n = product_.num_states;
    rev_offsets_.assign(n + 1, 0);
    for (const auto& e : product_.edges) ++rev_offsets_[e.dst + 1];
    for (size_t i = 0; i < n; ++i) rev_offsets_[i + 1] += rev_offsets_[i];
    rev_edges_.resize(product_.edges.size());
    std::vector<uint64_t> cur(rev_offsets_.begin(), rev_offsets_.end() - 1);
    for (uint32_t ei = 0; ei < product_.edges.size(); ++ei)
      rev_edges_[cur[product_.edges[ei].dst]++] = ei;
  }

  uint32_t nthreads_ = 0;
  std::vector<ThreadProgram> programs_;
  std::vector<RegisterConfig> registers_;
  std::vector<Lts> thread_lts_;
  std::vector<std::unique_ptr<LtsComponent>> thread_comps_;
  std::vector<std::unique_ptr<RegisterComponent>> register_comps_;
  Product product_;
  mutable std::vector<uint64_t> rev_offsets_;
  mutable std::vector<uint32_t> rev_edges_;
};

}  // namespace justcheck
