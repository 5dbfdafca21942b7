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

#include "lac/topology.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lac::topo {

Topology::Topology(int num_transmitters, int num_receivers,
                   std::vector<std::vector<int>> coverage)
    : k_(num_transmitters), m_(num_receivers), coverage_(std::move(coverage)) {
  if (k_ < 1) throw std::invalid_argument("topology: transmitter count must be >= 1");
  if (m_ < 1) throw std::invalid_argument("topology: receiver count must be >= 1");
  if (static_cast<int>(coverage_.size()) != k_)
    throw std::invalid_argument("topology: coverage list length must equal transmitter count");
  for (auto& set : coverage_) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("topology: duplicate receiver in coverage set");
    for (int rx : set)
      if (rx < 0 || rx >= m_)
        throw std::invalid_argument("topology: receiver index out of range");
  }
}

bool Topology::covers(int tx, int rx) const {
  const auto& set = coverage_[tx];
  return std::binary_search(set.begin(), set.end(), rx);
}

int Topology::fan_in(int rx) const {
  int n = 0;
  for (int j = 0; j < k_; ++j)
    if (covers(j, rx)) ++n;
  return n;
}

Topology parse_topology(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("topology: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("transmitters") || !doc.contains("receivers") ||
      !doc.contains("coverage"))
    throw std::invalid_argument(
        "topology: document must contain transmitters, receivers, coverage");
  int k = doc.at("transmitters").get<int>();
  int m = doc.at("receivers").get<int>();
  if (!doc.at("coverage").is_array())
    throw std::invalid_argument("topology: coverage must be an array");
  std::vector<std::vector<int>> coverage;
  for (const auto& entry : doc.at("coverage")) {
    std::vector<int> set;
    for (const auto& rx : entry) {
      int r = rx.get<int>();
      if (r < 1 || r > m) {
        std::ostringstream msg;
        msg << "topology: receiver index " << r << " out of range [1, " << m << "]";
        throw std::invalid_argument(msg.str());
      }
      set.push_back(r - 1);
    }
    coverage.push_back(std::move(set));
  }
  return Topology(k, m, std::move(coverage));
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("topology: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

std::string serialize_topology(const Topology& t) {
  nlohmann::json doc;
  doc["transmitters"] = t.transmitters();
  doc["receivers"] = t.receivers();
  auto coverage = nlohmann::json::array();
  for (int j = 0; j < t.transmitters(); ++j) {
    auto set = nlohmann::json::array();
    for (int rx : t.coverage(j)) set.push_back(rx + 1);
    coverage.push_back(set);
  }
  doc["coverage"] = coverage;
  return doc.dump();
}

TopologicalMatrix topological_matrix(const Topology& t) {
  TopologicalMatrix h;
  h.rows = t.receivers();
  h.cols = t.transmitters();
  h.entries.assign(h.rows, std::vector<std::uint8_t>(h.cols, 0));
  for (int j = 0; j < h.cols; ++j)
    for (int rx : t.coverage(j)) h.entries[rx][j] = 1;
  return h;
}

std::vector<TransmitterGroup> group_decomposition(const Topology& t) {
  std::map<std::vector<int>, std::vector<int>> by_set;
  for (int j = 0; j < t.transmitters(); ++j) {
    const auto& set = t.coverage(j);
    if (!set.empty()) by_set[set].push_back(j);
  }
  std::vector<TransmitterGroup> groups;
  groups.reserve(by_set.size());
  for (auto& [set, txs] : by_set) groups.push_back({set, txs});
  std::stable_sort(groups.begin(), groups.end(),
                   [](const TransmitterGroup& a, const TransmitterGroup& b) {
                     if (a.receiver_set.size() != b.receiver_set.size())
                       return a.receiver_set.size() < b.receiver_set.size();
                     return a.receiver_set < b.receiver_set;
                   });
  return groups;
}

}  // namespace lac::topo
