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

#ifndef LAC_CHANNEL_HPP_
#define LAC_CHANNEL_HPP_

#include <cstdint>
#include <vector>

#include "lac/topology.hpp"

namespace lac::channel {

/// One OOK symbol per transmitter for a single time slot.
struct TransmitFrame {
  std::vector<std::uint8_t> bits;  // length k, values 0/1
};

/// Per-receiver perceived intensity levels y_i.
struct ReceivedLevels {
  std::vector<int> levels;  // length m
};

/// Deterministic per-receiver channel matrix: 2^k rows (one per frame),
/// fan_in+1 columns (one per perceivable level).  Row p has its single 1
/// at the level the receiver perceives for frame p.  Frame-to-row order:
/// transmitter 1 is the least significant bit of the row index.
struct ChannelMatrix {
  int receiver = 0;  // 0-based
  std::vector<std::vector<std::uint8_t>> entries;
};

/// Noiseless additive intensity channel: y_i = sum of the bits of the
/// transmitters covering receiver i.
ReceivedLevels transmit(const topo::Topology& t, const TransmitFrame& f);

/// Frame with the given row-index encoding (transmitter 1 = LSB).
TransmitFrame frame_from_index(int k, std::uint64_t index);

/// Enumerates all 2^k frames; enforced k <= 20.
ChannelMatrix channel_matrix(const topo::Topology& t, int receiver);

}  // namespace lac::channel

#endif  // LAC_CHANNEL_HPP_
