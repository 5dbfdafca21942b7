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

#include "lac/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace lac::schemes {

RateTuple src_rate(const topo::Topology& t, int receiver) {
  if (receiver < 0 || receiver >= t.receivers())
    throw std::invalid_argument("src: receiver index out of range");
  const int n = t.fan_in(receiver);
  if (n == 0) throw std::invalid_argument("src: receiver covered by no transmitter");
  RateTuple tuple;
  tuple.rates.assign(t.receivers(), 0.0);
  tuple.rates[receiver] = std::log2(static_cast<double>(n) + 1.0);
  return tuple;
}

std::vector<std::uint8_t> src_fill(int level, int n) {
  if (level < 0 || level > n)
    throw std::invalid_argument("src: level out of range [0, n]");
  std::vector<std::uint8_t> bits(n, 0);
  for (int i = 0; i < level; ++i) bits[i] = 1;
  return bits;
}

channel::TransmitFrame src_encode(const topo::Topology& t, int receiver, int level) {
  const int n = t.fan_in(receiver);
  if (n == 0) throw std::invalid_argument("src: receiver covered by no transmitter");
  auto fill = src_fill(level, n);
  channel::TransmitFrame f;
  f.bits.assign(t.transmitters(), 0);
  int next = 0;
  for (int j = 0; j < t.transmitters(); ++j)
    if (t.covers(j, receiver)) f.bits[j] = fill[next++];
  return f;
}

int src_decode(const channel::ReceivedLevels& y, int receiver) {
  return y.levels[receiver];
}

std::optional<ErcCode> erc_code(const topo::Topology& t) {
  auto h = gf2::Matrix::from_topological(topological_matrix(t));
  auto columns = gf2::independent_columns(h);
  if (static_cast<int>(columns.size()) < t.receivers()) return std::nullopt;
  return ErcCode{columns, h.select_columns(columns)};
}

std::vector<int> erc_solve(const gf2::Matrix& h, const std::vector<int>& b) {
  return gf2::solve(h, b);
}

channel::TransmitFrame erc_encode(const topo::Topology& t, const ErcCode& code,
                                  const std::vector<int>& b) {
  auto x = erc_solve(code.h, b);
  channel::TransmitFrame f;
  f.bits.assign(t.transmitters(), 0);
  for (std::size_t i = 0; i < code.columns.size(); ++i)
    f.bits[code.columns[i]] = static_cast<std::uint8_t>(x[i]);
  return f;
}

std::vector<int> erc_decode(const channel::ReceivedLevels& y) {
  std::vector<int> b(y.levels.size());
  for (std::size_t i = 0; i < y.levels.size(); ++i) b[i] = y.levels[i] % 2;
  return b;
}

std::optional<RateTuple> erc_rate(const topo::Topology& t) {
  if (!erc_code(t)) return std::nullopt;
  RateTuple tuple;
  tuple.rates.assign(t.receivers(), 1.0);
  return tuple;
}

}  // namespace lac::schemes
