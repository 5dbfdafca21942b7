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

#ifndef LAC_JRC_HPP_
#define LAC_JRC_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lac/channel.hpp"
#include "lac/topology.hpp"

namespace lac::jrc {

/// Exclusive and pairwise-shared transmitter counts of a topology
/// (higher-order groups excluded).
struct PairwiseProfile {
  std::vector<int> exclusive;            // t_i, size m
  std::vector<std::vector<int>> shared;  // t_ip, m x m symmetric, zero diagonal

  explicit PairwiseProfile(int m)
      : exclusive(m, 0), shared(m, std::vector<int>(m, 0)) {}
  int receivers() const { return static_cast<int>(exclusive.size()); }
};

/// The split of each pair's shared transmitters between its two
/// receivers: split[i][p] is the number credited to receiver i's
/// alphabet from pair {i, p}.
struct Allocation {
  std::vector<std::vector<int>> split;

  explicit Allocation(int m) : split(m, std::vector<int>(m, 0)) {}
  int receivers() const { return static_cast<int>(split.size()); }
};

bool allocation_valid(const PairwiseProfile& profile, const Allocation& alloc);
/// Throws std::invalid_argument naming the violated constraint.
void validate_allocation(const PairwiseProfile& profile, const Allocation& alloc);

/// c_i = t_i + sum_p split[i][p] + 1 (alphabet size at receiver i).
std::vector<int> moduli(const PairwiseProfile& profile, const Allocation& alloc);
/// log2 of the moduli.
std::vector<double> rates(const PairwiseProfile& profile, const Allocation& alloc);

/// Per-group wire levels for one slot.  Each level is realized on the
/// wire by a lowest-index-first fill within its transmitter group.
struct Codeword {
  std::vector<int> exclusive_levels;            // x_i in [0, t_i]
  std::vector<std::vector<int>> shared_levels;  // x_ip in [0, t_ip], symmetric
  std::vector<std::uint8_t> higher_bits;        // one bit per |S|>=3 transmitter
};

// ---------------------------------------------------------------------------
// Two receivers
// ---------------------------------------------------------------------------

struct Jrc2Params {
  int t1 = 0, t2 = 0, t12 = 0;
  int split1 = 0, split2 = 0;  // t^1_12, t^2_12
};

struct Jrc2Codeword {
  int x1 = 0, x2 = 0, x12 = 0;
};

/// {(b - i) mod c : i = 0..t} — the shared-level candidates that let the
/// exclusive transmitters absorb the remainder.
std::vector<int> candidate_set(int b, int t, int c);

/// Encodes (b1, b2) by picking the minimum element of the intersection of
/// the two candidate sets as the shared level.  Preconditions: t1 >=
/// split2, t2 >= split1, split1 + split2 <= t12, 0 <= b_i <= c_i - 1.
Jrc2Codeword jrc2_encode(const Jrc2Params& params, int b1, int b2);

/// b̂ = y mod c.
int jrc2_decode(int y, int c);

// ---------------------------------------------------------------------------
// n receivers, pairwise sharing
// ---------------------------------------------------------------------------

/// Finds wire levels with (x_i + sum_p x_ip) ≡ b_i (mod c_i) for every
/// receiver, preferring levels whose plain sums equal b_i exactly.
/// Deterministic (lexicographically smallest level vector per pass).
/// Throws std::invalid_argument on out-of-range b or invalid allocation,
/// std::runtime_error if the congruence system has no solution.
Codeword jrcn_encode(const PairwiseProfile& profile, const Allocation& alloc,
                     const std::vector<int>& b);

/// Componentwise y mod c.
std::vector<int> jrcn_decode(const channel::ReceivedLevels& y,
                             const std::vector<int>& c);

// ---------------------------------------------------------------------------
// General topologies (transmitters covering three or more receivers)
// ---------------------------------------------------------------------------

struct HigherTransmitter {
  int tx;                         // transmitter index in the topology
  std::vector<int> receiver_set;  // |S| >= 3, sorted
};

/// The |S| >= 3 transmitters in canonical group order.
std::vector<HigherTransmitter> higher_transmitters(const topo::Topology& t);

/// Counts from the |S| <= 2 groups only.
PairwiseProfile pairwise_profile(const topo::Topology& t);

/// One chosen pair (i, p), i < p, per higher-order transmitter, in
/// higher_transmitters() order.
using PairAssignment = std::vector<std::pair<int, int>>;

/// Adds each assigned higher-order transmitter to its pair's shared
/// count.  Throws if a pair is not contained in the transmitter's
/// receiver set or the assignment length is wrong.
PairwiseProfile convert_to_pairwise(const topo::Topology& t,
                                    const PairAssignment& assignment);

/// Encodes b on a general topology with the higher-order bits fixed.
/// Every receiver covered by a bit-1 higher-order transmitter has its
/// pairwise-layer target reduced by that interference; moduli come from
/// the converted profile.  Messages with b_i >= c_i are accepted up to
/// the receiver's absolute level range and decode modulo c_i.
Codeword general_encode(const topo::Topology& t, const PairAssignment& assignment,
                        const Allocation& alloc,
                        const std::vector<std::uint8_t>& higher_bits,
                        const std::vector<int>& b);

/// Chooses the higher-order bits itself: bit patterns are tried in order
/// of increasing population count (all-zero first) until one encodes.
Codeword general_encode_auto(const topo::Topology& t, const PairAssignment& assignment,
                             const Allocation& alloc, const std::vector<int>& b);

/// Lowest-index-first fill of every group with its codeword level.
channel::TransmitFrame realize_frame(const topo::Topology& t, const Codeword& cw);

/// All allocations satisfying both constraint families, canonically
/// ordered (pairs lexicographic, first pair slowest).  Throws when the
/// enumeration would exceed 10^6 entries.
std::vector<Allocation> enumerate_allocations(const PairwiseProfile& profile);

/// True iff every message in the box \prod [0, c_i) has a codeword.
/// Allocation validity does not imply this: from three receivers on,
/// some valid allocations leave isolated messages with no solution to
/// the congruence system, so achievability is decided by exact check.
/// Throws when the box exceeds 10^6 messages.
bool allocation_supported(const PairwiseProfile& profile, const Allocation& alloc);

/// One greedy decision; kept for step-dominance auditing.
struct GreedyStep {
  int i = 0, p = 0;      // the pair the unit belongs to
  int chosen = -1;       // receiver granted the unit, -1 = skipped
  bool feasible_i = false, feasible_p = false;
  int c_i = 0, c_p = 0;  // alphabet sizes before the step
};

struct GreedyResult {
  Allocation alloc;
  std::vector<GreedyStep> steps;
};

/// Grants each shared unit to whichever side currently has the smaller
/// alphabet (larger one-step log gain), lower receiver index on ties,
/// skipping units neither side may take.
GreedyResult greedy_max_sum(const PairwiseProfile& profile);

/// Synthetic topology realizing a pairwise profile: exclusive groups
/// first, then pair groups in canonical order.
topo::Topology make_topology(const PairwiseProfile& profile);

}  // namespace lac::jrc

#endif  // LAC_JRC_HPP_
