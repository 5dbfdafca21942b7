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

#ifndef LAC_SCHEMES_HPP_
#define LAC_SCHEMES_HPP_

#include <optional>
#include <vector>

#include "lac/channel.hpp"
#include "lac/gf2.hpp"
#include "lac/topology.hpp"

namespace lac::schemes {

/// One feasible point (r_1, ..., r_m), bits per time slot.
struct RateTuple {
  std::vector<double> rates;
};

// ---------------------------------------------------------------------------
// Single Rate Coding: all covering transmitters serve one receiver, which
// perceives fan_in+1 distinct sum levels.
// ---------------------------------------------------------------------------

/// log2(n+1) at the chosen receiver, 0 elsewhere.  Throws if the receiver
/// is covered by no transmitter.
RateTuple src_rate(const topo::Topology& t, int receiver);

/// Canonical level-to-bits fill: the lowest-indexed `level` of the n
/// covering transmitters send 1.  0 <= level <= n.
std::vector<std::uint8_t> src_fill(int level, int n);

/// Full-width frame for the topology; non-covering transmitters stay 0.
channel::TransmitFrame src_encode(const topo::Topology& t, int receiver, int level);

/// The received sum is the message.
int src_decode(const channel::ReceivedLevels& y, int receiver);

// ---------------------------------------------------------------------------
// Equal Rate Coding: pre-invert the coverage matrix over GF(2) so every
// receiver decodes its bit as the parity of its received level.
// ---------------------------------------------------------------------------

/// Transmitter selection backing an ERC codec: an m x m full-rank (over
/// GF(2)) column-submatrix of the topological matrix, chosen greedily by
/// lowest transmitter index.
struct ErcCode {
  std::vector<int> columns;  // selected transmitters, ascending
  gf2::Matrix h;             // m x m, full rank
};

/// nullopt when no full-rank column-submatrix exists (ERC inapplicable).
std::optional<ErcCode> erc_code(const topo::Topology& t);

/// x = H^{-1} b over GF(2).  Throws on singular h.
std::vector<int> erc_solve(const gf2::Matrix& h, const std::vector<int>& b);

/// Frame carrying H^{-1} b on the selected transmitters, 0 elsewhere.
channel::TransmitFrame erc_encode(const topo::Topology& t, const ErcCode& code,
                                  const std::vector<int>& b);

/// b̂_i = y_i mod 2.
std::vector<int> erc_decode(const channel::ReceivedLevels& y);

/// All-ones tuple when ERC applies, nullopt otherwise.
std::optional<RateTuple> erc_rate(const topo::Topology& t);

}  // namespace lac::schemes

#endif  // LAC_SCHEMES_HPP_
