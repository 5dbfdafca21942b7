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

#ifndef LAC_TOPOLOGY_HPP_
#define LAC_TOPOLOGY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace lac::topo {

/// Deployment geometry reduced to pure set structure: which of the k
/// transmitters cover which of the m receivers.  Receiver indices are
/// 0-based internally; documents and CLI messages use 1-based labels.
///
/// Immutable after construction; safe to share across threads.
class Topology {
 public:
  // coverage[j] lists the receivers covered by transmitter j.
  // Throws std::invalid_argument on out-of-range indices, duplicates,
  // or non-positive dimensions.
  Topology(int num_transmitters, int num_receivers,
           std::vector<std::vector<int>> coverage);

  int transmitters() const { return k_; }
  int receivers() const { return m_; }
  const std::vector<int>& coverage(int tx) const { return coverage_[tx]; }
  bool covers(int tx, int rx) const;

  /// Number of transmitters covering receiver rx.
  int fan_in(int rx) const;

 private:
  int k_;
  int m_;
  std::vector<std::vector<int>> coverage_;  // each sorted ascending
};

/// Transmitters whose coverage set is exactly `receiver_set`.
/// Groups partition the transmitters with non-empty coverage.
struct TransmitterGroup {
  std::vector<int> receiver_set;         // non-empty, sorted
  std::vector<int> transmitter_indices;  // ascending
};

/// m x k binary coverage indicator: entry (i, j) = 1 iff transmitter j
/// covers receiver i.
struct TopologicalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::uint8_t>> entries;
};

/// Parses the JSON topology document:
///   {"transmitters":2,"receivers":2,"coverage":[[1,2],[2]]}
/// Receiver indices in the file are 1-based.
Topology parse_topology(const std::string& text);
Topology load_topology(const std::string& path);

/// Canonical serialization; parse(serialize(t)) == t.
std::string serialize_topology(const Topology& t);

TopologicalMatrix topological_matrix(const Topology& t);

/// One group per distinct non-empty coverage set, ordered by
/// (|receiver_set|, lexicographic receiver_set).
std::vector<TransmitterGroup> group_decomposition(const Topology& t);

}  // namespace lac::topo

#endif  // LAC_TOPOLOGY_HPP_
