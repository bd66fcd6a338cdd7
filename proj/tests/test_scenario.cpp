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

#include "justcheck/scenario.hpp"

using namespace justcheck;

TEST_CASE("overlap schedule outcomes per register kind") {
  SECTION("safe: both early reads see 0, late reads arbitrary (27 outcomes)") {
    auto out = run_appendix_a(RegisterKind::Safe);
    CHECK(out.size() == 27);
    for (const auto& t : out) {
      REQUIRE(t.size() == 5);
      CHECK(t[0] == 0);
      CHECK(t[1] == 0);
    }
  }
  SECTION("regular: late reads pick old or new value independently (8 outcomes)") {
    auto out = run_appendix_a(RegisterKind::Regular);
    CHECK(out.size() == 8);
    for (const auto& t : out) {
      CHECK(t[0] == 0);
      CHECK(t[1] == 0);
      for (size_t i = 2; i < 5; ++i) CHECK((t[i] == 0 || t[i] == 2));
    }
  }
  SECTION("atomic: five combinations, new-old inversion excluded") {
    auto out = run_appendix_a(RegisterKind::Atomic);
    std::set<std::vector<Value>> expect{
        {0, 0, 0, 0, 0}, {0, 0, 0, 0, 2}, {0, 0, 0, 2, 0}, {0, 0, 0, 2, 2},
        {0, 0, 2, 2, 2},
    };
    CHECK(out == expect);
  }
}

TEST_CASE("scripts violating one-operation-per-thread are rejected") {
  using K = ScenarioEvent::Kind;
  RegisterConfig cfg{"x", {0, 1}, 0, RegisterKind::Atomic};
  ScenarioScript bad{{K::StartRead, 0}, {K::StartWrite, 0, 1}};
  CHECK_THROWS(run_scenario(bad, cfg, 2));
  ScenarioScript bad2{{K::FinishRead, 0}};
  CHECK_THROWS(run_scenario(bad2, cfg, 2));
}
