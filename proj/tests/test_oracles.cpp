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

#include <catch2/catch_amalgamated.hpp>

#include "justcheck/checker.hpp"
#include "support/random_models.hpp"

using namespace justcheck;

namespace {

const std::vector<ConcurrencyMode> kModes{ConcurrencyMode::T, ConcurrencyMode::S,
                                          ConcurrencyMode::I, ConcurrencyMode::A};
const std::vector<RegisterKind> kKinds{RegisterKind::Safe, RegisterKind::Regular,
                                       RegisterKind::Atomic};

}  // namespace

TEST_CASE("check_liveness agrees with the brute-force oracle on random models") {
  std::mt19937_64 rng(0xA11CE5);
  for (int round = 0; round < 50; ++round) {
    auto m = testsupport::random_model(rng, kKinds[round % kKinds.size()]);
    for (ConcurrencyMode mode : kModes) {
      for (PropertyKind p :
           {PropertyKind::DeadlockFreedom, PropertyKind::StarvationFreedom}) {
        Verdict fast = check_liveness(*m, p, mode);
        Verdict slow = brute_force_liveness(*m, p, mode, 200);
        INFO("round " << round << " mode " << mode_name(mode) << " property "
                      << property_name(p) << " states " << m->num_states());
        REQUIRE(fast.holds == slow.holds);
      }
    }
  }
}

TEST_CASE("lasso justness: characterisation agrees with the direct definition") {
  std::mt19937_64 rng(0xBEEF01);
  int sampled = 0;
  while (sampled < 200) {
    auto m = testsupport::random_model(rng, kKinds[sampled % kKinds.size()]);
    for (int k = 0; k < 4 && sampled < 200; ++k, ++sampled) {
      Lasso l = testsupport::random_lasso(*m, rng);
      for (ConcurrencyMode mode : kModes) {
        INFO("sample " << sampled << " mode " << mode_name(mode));
        REQUIRE(is_just_lasso(*m, l, mode) == just_lasso_direct(*m, l, mode));
      }
    }
  }
}

TEST_CASE("violated random cells yield validated witnesses") {
  std::mt19937_64 rng(0xC0FFEE);
  int violated = 0;
  for (int round = 0; round < 30; ++round) {
    auto m = testsupport::random_model(rng, RegisterKind::Atomic);
    for (ConcurrencyMode mode : kModes) {
      for (PropertyKind p :
           {PropertyKind::DeadlockFreedom, PropertyKind::StarvationFreedom}) {
        Verdict v = check_liveness(*m, p, mode);
        if (v.holds) continue;
        ++violated;
        REQUIRE(v.liveness_witness.has_value());
        CHECK(validate_liveness_witness(*m, *v.liveness_witness, p, mode));
      }
    }
  }
  CHECK(violated > 0);
}
