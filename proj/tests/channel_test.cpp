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

#include <stdexcept>

#include "lac/channel.hpp"
#include "lac/topology.hpp"

using namespace lac;

namespace {

std::vector<std::vector<int>> matrix_ints(const channel::ChannelMatrix& a) {
  std::vector<std::vector<int>> out;
  for (const auto& row : a.entries) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("frame index uses transmitter 1 as least significant bit") {
  auto f = channel::frame_from_index(3, 5);  // binary 101
  CHECK(f.bits == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(channel::frame_from_index(3, 0).bits == std::vector<std::uint8_t>{0, 0, 0});
}

TEST_CASE("additive reception") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto y = channel::transmit(t, channel::TransmitFrame{{1, 1}});
  CHECK(y.levels == std::vector<int>{1, 2});
  y = channel::transmit(t, channel::TransmitFrame{{0, 1}});
  CHECK(y.levels == std::vector<int>{0, 1});
}

TEST_CASE("two-transmitter matrices match the reference") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  CHECK(matrix_ints(channel::channel_matrix(t, 0)) ==
        std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  CHECK(matrix_ints(channel::channel_matrix(t, 1)) ==
        std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("three-transmitter matrices match the reference") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/three_tx_two_rx.json");
  CHECK(matrix_ints(channel::channel_matrix(t, 0)) ==
        std::vector<std::vector<int>>{
            {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}});
  CHECK(matrix_ints(channel::channel_matrix(t, 1)) ==
        std::vector<std::vector<int>>{{1, 0, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 1, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 1}});
}

TEST_CASE("matrix rows agree with transmit for every frame") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/triple_overlap.json");
  for (int rx = 0; rx < t.receivers(); ++rx) {
    auto a = channel::channel_matrix(t, rx);
    REQUIRE(static_cast<int>(a.entries.size()) == 1 << t.transmitters());
    for (std::uint64_t p = 0; p < a.entries.size(); ++p) {
      auto y = channel::transmit(t, channel::frame_from_index(t.transmitters(), p));
      for (int level = 0; level <= t.fan_in(rx); ++level)
        CHECK(a.entries[p][level] == (level == y.levels[rx] ? 1 : 0));
    }
  }
}

TEST_CASE("matrix enumeration bound") {
  std::vector<std::vector<int>> coverage(21, std::vector<int>{0});
  topo::Topology big(21, 1, std::move(coverage));
  CHECK_THROWS_AS(channel::channel_matrix(big, 0), std::invalid_argument);
}
