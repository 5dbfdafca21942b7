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

#include "lac/channel.hpp"

#include <stdexcept>

namespace lac::channel {

ReceivedLevels transmit(const topo::Topology& t, const TransmitFrame& f) {
  if (static_cast<int>(f.bits.size()) != t.transmitters())
    throw std::invalid_argument("channel: frame length must equal transmitter count");
  ReceivedLevels y;
  y.levels.assign(t.receivers(), 0);
  for (int j = 0; j < t.transmitters(); ++j) {
    if (!f.bits[j]) continue;
    for (int rx : t.coverage(j)) ++y.levels[rx];
  }
  return y;
}

TransmitFrame frame_from_index(int k, std::uint64_t index) {
  TransmitFrame f;
  f.bits.resize(k);
  for (int j = 0; j < k; ++j) f.bits[j] = static_cast<std::uint8_t>((index >> j) & 1u);
  return f;
}

ChannelMatrix channel_matrix(const topo::Topology& t, int receiver) {
  if (receiver < 0 || receiver >= t.receivers())
    throw std::invalid_argument("channel: receiver index out of range");
  if (t.transmitters() > 20)
    throw std::invalid_argument("channel: matrix enumeration limited to k <= 20");
  const int k = t.transmitters();
  const int levels = t.fan_in(receiver) + 1;
  ChannelMatrix a;
  a.receiver = receiver;
  a.entries.assign(std::size_t{1} << k, std::vector<std::uint8_t>(levels, 0));
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p) {
    int level = 0;
    for (int j = 0; j < k; ++j)
      if (((p >> j) & 1u) && t.covers(j, receiver)) ++level;
    a.entries[p][level] = 1;
  }
  return a;
}

}  // namespace lac::channel
