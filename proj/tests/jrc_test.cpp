// Copyright 2026 The LAC Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lac/channel.hpp"
#include "lac/jrc.hpp"
#include "lac/topology.hpp"

using namespace lac;

TEST_CASE("two-receiver candidate sets") {
  CHECK(jrc::candidate_set(1, 0, 2) == std::vector<int>{1});
  CHECK(jrc::candidate_set(2, 2, 3) == std::vector<int>{2, 1, 0});
}

TEST_CASE("two-receiver reference encode") {
  jrc::Jrc2Params p{0, 2, 1, 1, 0};
  auto cw = jrc::jrc2_encode(p, 1, 2);
  CHECK(cw.x1 == 0);
  CHECK(cw.x2 == 1);
  CHECK(cw.x12 == 1);
  CHECK(jrc::jrc2_decode(cw.x1 + cw.x12, 2) == 1);
  CHECK(jrc::jrc2_decode(cw.x2 + cw.x12, 3) == 2);
  auto zero = jrc::jrc2_encode(p, 0, 0);
  CHECK((zero.x1 == 0 && zero.x2 == 0 && zero.x12 == 0));
}

TEST_CASE("two-receiver preconditions") {
  // split1 = 1 needs t2 >= 1.
  CHECK_THROWS_AS(jrc::jrc2_encode({1, 0, 1, 1, 0}, 0, 0), std::invalid_argument);
  // split1 + split2 > t12
  CHECK_THROWS_AS(jrc::jrc2_encode({2, 2, 1, 1, 1}, 0, 0), std::invalid_argument);
  // message outside the box
  CHECK_THROWS_AS(jrc::jrc2_encode({0, 2, 1, 1, 0}, 2, 0), std::invalid_argument);
}

TEST_CASE("two-receiver exhaustive sweep with proof conditions") {
  for (int t1 = 0; t1 <= 3; ++t1)
    for (int t2 = 0; t2 <= 3; ++t2)
      for (int t12 = 0; t12 <= 3; ++t12)
        for (int s1 = 0; s1 <= t12; ++s1)
          for (int s2 = 0; s1 + s2 <= t12; ++s2) {
            if (t1 < s2 || t2 < s1) continue;
            const int c1 = t1 + s1 + 1, c2 = t2 + s2 + 1;
            for (int b1 = 0; b1 < c1; ++b1)
              for (int b2 = 0; b2 < c2; ++b2) {
                auto cw = jrc::jrc2_encode({t1, t2, t12, s1, s2}, b1, b2);
                CHECK(cw.x12 <= t12);
                CHECK((0 <= cw.x1 && cw.x1 <= t1));
                CHECK((0 <= cw.x2 && cw.x2 <= t2));
                CHECK(jrc::jrc2_decode(cw.x1 + cw.x12, c1) == b1);
                CHECK(jrc::jrc2_decode(cw.x2 + cw.x12, c2) == b2);
              }
          }
}

TEST_CASE("n-receiver encode prefers exact sums and round-trips") {
  jrc::PairwiseProfile p(3);
  p.exclusive = {1, 2, 1};
  p.shared[0][1] = p.shared[1][0] = 2;
  p.shared[1][2] = p.shared[2][1] = 1;
  jrc::Allocation a(3);
  a.split[0][1] = 1;
  a.split[1][0] = 1;
  a.split[2][1] = 1;
  REQUIRE(jrc::allocation_valid(p, a));
  auto c = jrc::moduli(p, a);
  CHECK(c == std::vector<int>{3, 4, 3});
  auto t = jrc::make_topology(p);
  for (int b1 = 0; b1 < c[0]; ++b1)
    for (int b2 = 0; b2 < c[1]; ++b2)
      for (int b3 = 0; b3 < c[2]; ++b3) {
        auto cw = jrc::jrcn_encode(p, a, {b1, b2, b3});
        auto y = channel::transmit(t, jrc::realize_frame(t, cw));
        CHECK(jrc::jrcn_decode(y, c) == std::vector<int>{b1, b2, b3});
      }
  auto zero = jrc::jrcn_encode(p, a, {0, 0, 0});
  CHECK(zero.exclusive_levels == std::vector<int>{0, 0, 0});
  CHECK(zero.shared_levels[0][1] == 0);
  CHECK(zero.shared_levels[1][2] == 0);
}

TEST_CASE("valid allocations are not always encodable") {
  // t = (1,1,1), pairs t12=1, t13=1, t23=2, split t2_12=1, t1_13=1,
  // t2_23=1, t3_23=1.  Every per-pair constraint holds, yet message
  // (0,0,2) admits no wire levels: receiver 2 forces its pair levels to
  // an extreme, which receiver 3 cannot absorb.
  jrc::PairwiseProfile p(3);
  p.exclusive = {1, 1, 1};
  p.shared[0][1] = p.shared[1][0] = 1;
  p.shared[0][2] = p.shared[2][0] = 1;
  p.shared[1][2] = p.shared[2][1] = 2;
  jrc::Allocation a(3);
  a.split[1][0] = 1;
  a.split[0][2] = 1;
  a.split[1][2] = 1;
  a.split[2][1] = 1;
  CHECK(jrc::allocation_valid(p, a));
  CHECK(!jrc::allocation_supported(p, a));
  CHECK_THROWS_AS(jrc::jrcn_encode(p, a, {0, 0, 2}), std::runtime_error);
}

TEST_CASE("conversion and reference allocation") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/triple_overlap.json");
  jrc::PairAssignment assign{{0, 2}};
  auto conv = jrc::convert_to_pairwise(t, assign);
  CHECK(conv.shared[0][2] == 3);
  CHECK(conv.shared[0][1] == 2);
  CHECK(conv.shared[1][2] == 2);

  jrc::Allocation alloc(3);
  alloc.split[0][1] = 1;
  alloc.split[1][0] = 1;
  alloc.split[0][2] = 2;
  alloc.split[2][0] = 1;
  alloc.split[1][2] = 1;
  alloc.split[2][1] = 1;
  CHECK(jrc::allocation_valid(conv, alloc));
  auto r = jrc::rates(conv, alloc);
  CHECK(r[0] == doctest::Approx(std::log2(5.0)));
  CHECK(r[1] == doctest::Approx(2.0));
  CHECK(r[2] == doctest::Approx(std::log2(5.0)));

  // The converted allocation appears in the enumeration.
  bool found = false;
  for (const auto& cand : jrc::enumerate_allocations(conv))
    if (cand.split == alloc.split) found = true;
  CHECK(found);

  for (int hb = 0; hb <= 1; ++hb) {
    auto cw = jrc::general_encode(t, assign, alloc,
                                  {static_cast<std::uint8_t>(hb)}, {2, 3, 5});
    auto y = channel::transmit(t, jrc::realize_frame(t, cw));
    CHECK(y.levels == std::vector<int>{2, 3, 5});
  }
}

TEST_CASE("conversion rejects pairs outside the coverage set") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/triple_overlap.json");
  // Receivers 1 and 4 do not exist as a pair inside {1,2,3}.
  CHECK_THROWS_AS(jrc::convert_to_pairwise(t, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(jrc::convert_to_pairwise(t, {}), std::invalid_argument);
}

TEST_CASE("allocation enumeration on the single shared unit") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/three_tx_two_rx.json");
  auto p = jrc::pairwise_profile(t);
  CHECK(p.exclusive == std::vector<int>{0, 2});
  CHECK(p.shared[0][1] == 1);
  auto allocs = jrc::enumerate_allocations(p);
  // t1 = 0 forbids crediting the unit to receiver 2, leaving (0,0), (1,0).
  REQUIRE(allocs.size() == 2);
  CHECK((allocs[0].split[0][1] == 0 && allocs[0].split[1][0] == 0));
  CHECK((allocs[1].split[0][1] == 1 && allocs[1].split[1][0] == 0));
}

TEST_CASE("all-zero profile has exactly one allocation") {
  jrc::PairwiseProfile p(2);
  CHECK(jrc::enumerate_allocations(p).size() == 1);
}

TEST_CASE("greedy grants the unit to the smaller alphabet") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/three_tx_two_rx.json");
  auto p = jrc::pairwise_profile(t);
  auto g = jrc::greedy_max_sum(p);
  REQUIRE(g.steps.size() == 1);
  CHECK(g.steps[0].chosen == 0);
  auto r = jrc::rates(p, g.alloc);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(std::log2(3.0)));
}

TEST_CASE("greedy tie-break picks the lower receiver index") {
  jrc::PairwiseProfile p(2);
  p.exclusive = {1, 1};
  p.shared[0][1] = p.shared[1][0] = 1;
  auto g = jrc::greedy_max_sum(p);
  REQUIRE(g.steps.size() == 1);
  CHECK(g.steps[0].chosen == 0);
}

TEST_CASE("greedy on a profile without shared transmitters") {
  jrc::PairwiseProfile p(2);
  p.exclusive = {2, 1};
  auto g = jrc::greedy_max_sum(p);
  CHECK(g.steps.empty());
  CHECK(g.alloc.split[0][1] == 0);
}

TEST_CASE("synthetic topology realizes the profile") {
  jrc::PairwiseProfile p(2);
  p.exclusive = {1, 2};
  p.shared[0][1] = p.shared[1][0] = 1;
  auto t = jrc::make_topology(p);
  CHECK(t.transmitters() == 4);
  auto back = jrc::pairwise_profile(t);
  CHECK(back.exclusive == p.exclusive);
  CHECK(back.shared == p.shared);
}
