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

#include "lac/jrc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lac::jrc {

namespace {

int positive_mod(int v, int c) { return ((v % c) + c) % c; }

/// The congruence system behind the n-receiver codec: find exclusive
/// levels x_i in [0, t_i] and pair levels x_ip in [0, bound_ip] with
/// x_i + sum_p x_ip ≡ target_i (mod c_i).  In exact mode the plain sum
/// must equal target_i (no wrap), which keeps walked-through examples
/// reproducible level for level.
struct LevelSystem {
  int m = 0;
  std::vector<int> excl_bound;
  std::vector<int> c;
  std::vector<std::pair<int, int>> pairs;  // i < p, bound > 0
  std::vector<int> pair_bound;
};

struct LevelSolution {
  std::vector<int> exclusive;
  std::vector<std::vector<int>> shared;  // symmetric
};

std::optional<LevelSolution> solve_levels(const LevelSystem& sys,
                                          const std::vector<int>& target,
                                          bool exact) {
  const int num_pairs = static_cast<int>(sys.pairs.size());
  // Receiver i is decidable once the last pair touching it is assigned.
  std::vector<int> last_pair(sys.m, -1);
  for (int v = 0; v < num_pairs; ++v) {
    last_pair[sys.pairs[v].first] = v;
    last_pair[sys.pairs[v].second] = v;
  }

  std::vector<int> level(num_pairs, 0);
  std::vector<int> pair_sum(sys.m, 0);
  std::vector<int> exclusive(sys.m, 0);

  // Resolves every receiver whose pair levels are complete after var v.
  auto settle = [&](int v) -> bool {
    for (int i = 0; i < sys.m; ++i) {
      if (last_pair[i] != v) continue;
      int x;
      if (exact) {
        x = target[i] - pair_sum[i];
      } else {
        x = positive_mod(target[i] - pair_sum[i], sys.c[i]);
      }
      if (x < 0 || x > sys.excl_bound[i]) return false;
      exclusive[i] = x;
    }
    return true;
  };

  // Depth-first over pair levels, smallest value first; the first hit is
  // the lexicographically smallest solution.
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == num_pairs) return true;
    const auto [i, p] = sys.pairs[v];
    for (int val = 0; val <= sys.pair_bound[v]; ++val) {
      level[v] = val;
      pair_sum[i] += val;
      pair_sum[p] += val;
      bool ok = !(exact && (pair_sum[i] > target[i] || pair_sum[p] > target[p]));
      if (ok) ok = settle(v);
      if (ok && self(self, v + 1)) return true;
      pair_sum[i] -= val;
      pair_sum[p] -= val;
    }
    return false;
  };

  // Receivers with no pairs settle immediately.
  if (!settle(-1)) return std::nullopt;
  if (!rec(rec, 0)) return std::nullopt;

  LevelSolution sol;
  sol.exclusive = exclusive;
  sol.shared.assign(sys.m, std::vector<int>(sys.m, 0));
  for (int v = 0; v < num_pairs; ++v) {
    const auto [i, p] = sys.pairs[v];
    sol.shared[i][p] = sol.shared[p][i] = level[v];
  }
  return sol;
}

LevelSystem system_from(const PairwiseProfile& bounds, const std::vector<int>& c) {
  LevelSystem sys;
  sys.m = bounds.receivers();
  sys.excl_bound = bounds.exclusive;
  sys.c = c;
  for (int i = 0; i < sys.m; ++i)
    for (int p = i + 1; p < sys.m; ++p)
      if (bounds.shared[i][p] > 0) {
        sys.pairs.emplace_back(i, p);
        sys.pair_bound.push_back(bounds.shared[i][p]);
      }
  return sys;
}

}  // namespace

bool allocation_valid(const PairwiseProfile& profile, const Allocation& alloc) {
  const int m = profile.receivers();
  if (alloc.receivers() != m) return false;
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < m; ++p) {
      if (i == p) {
        if (alloc.split[i][p] != 0) return false;
        continue;
      }
      const int t_ip = profile.shared[i][p];
      const int share = alloc.split[i][p];
      if (share < 0) return false;
      if (t_ip == 0 && share != 0) return false;
      if (share > profile.exclusive[p]) return false;  // t^i_ip <= t_p
      if (i < p && share + alloc.split[p][i] > t_ip) return false;
    }
  }
  return true;
}

void validate_allocation(const PairwiseProfile& profile, const Allocation& alloc) {
  if (!allocation_valid(profile, alloc))
    throw std::invalid_argument(
        "jrc: allocation violates the split budget or exclusive-count constraints");
}

std::vector<int> moduli(const PairwiseProfile& profile, const Allocation& alloc) {
  const int m = profile.receivers();
  std::vector<int> c(m, 1);
  for (int i = 0; i < m; ++i) {
    long long v = profile.exclusive[i] + 1;
    for (int p = 0; p < m; ++p) v += alloc.split[i][p];
    if (v > (1LL << 31))
      throw std::invalid_argument("jrc: alphabet size exceeds 2^31");
    c[i] = static_cast<int>(v);
  }
  return c;
}

std::vector<double> rates(const PairwiseProfile& profile, const Allocation& alloc) {
  auto c = moduli(profile, alloc);
  std::vector<double> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = std::log2(static_cast<double>(c[i]));
  return r;
}

std::vector<int> candidate_set(int b, int t, int c) {
  std::vector<int> set;
  set.reserve(t + 1);
  for (int i = 0; i <= t; ++i) set.push_back(positive_mod(b - i, c));
  return set;
}

Jrc2Codeword jrc2_encode(const Jrc2Params& params, int b1, int b2) {
  const auto& [t1, t2, t12, split1, split2] = params;
  if (split1 < 0 || split2 < 0 || split1 + split2 > t12)
    throw std::invalid_argument("jrc2: split exceeds the shared budget");
  if (t1 < split2 || t2 < split1)
    throw std::invalid_argument("jrc2: split violates the exclusive-count conditions");
  const int c1 = t1 + split1 + 1;
  const int c2 = t2 + split2 + 1;
  if (b1 < 0 || b1 >= c1 || b2 < 0 || b2 >= c2)
    throw std::invalid_argument("jrc2: message out of range");

  auto s1 = candidate_set(b1, t1, c1);
  auto s2 = candidate_set(b2, t2, c2);
  auto member = [](const std::vector<int>& s, int v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  int shared = -1;
  for (int v = 0; v < std::max(c1, c2); ++v) {
    if (member(s1, v) && member(s2, v)) {
      shared = v;
      break;
    }
  }
  if (shared < 0)
    throw std::runtime_error("jrc2: candidate sets do not intersect (internal defect)");
  if (shared > t12)
    throw std::runtime_error("jrc2: shared level exceeds the wire capacity (internal defect)");

  Jrc2Codeword cw;
  cw.x12 = shared;
  cw.x1 = positive_mod(b1 - shared, c1);
  cw.x2 = positive_mod(b2 - shared, c2);
  return cw;
}

int jrc2_decode(int y, int c) {
  if (c < 1) throw std::invalid_argument("jrc2: modulus must be >= 1");
  return y % c;
}

Codeword jrcn_encode(const PairwiseProfile& profile, const Allocation& alloc,
                     const std::vector<int>& b) {
  validate_allocation(profile, alloc);
  const auto c = moduli(profile, alloc);
  const int m = profile.receivers();
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("jrc: message length must equal receiver count");
  for (int i = 0; i < m; ++i)
    if (b[i] < 0 || b[i] >= c[i])
      throw std::invalid_argument("jrc: message component out of range");

  auto sys = system_from(profile, c);
  auto sol = solve_levels(sys, b, /*exact=*/true);
  if (!sol) sol = solve_levels(sys, b, /*exact=*/false);
  if (!sol)
    throw std::runtime_error("jrc: congruence system unsolvable (internal defect)");

  Codeword cw;
  cw.exclusive_levels = std::move(sol->exclusive);
  cw.shared_levels = std::move(sol->shared);
  return cw;
}

std::vector<int> jrcn_decode(const channel::ReceivedLevels& y,
                             const std::vector<int>& c) {
  std::vector<int> b(y.levels.size());
  for (std::size_t i = 0; i < y.levels.size(); ++i) {
    if (c[i] < 1) throw std::invalid_argument("jrc: modulus must be >= 1");
    b[i] = y.levels[i] % c[i];
  }
  return b;
}

std::vector<HigherTransmitter> higher_transmitters(const topo::Topology& t) {
  std::vector<HigherTransmitter> out;
  for (const auto& group : group_decomposition(t)) {
    if (group.receiver_set.size() < 3) continue;
    for (int tx : group.transmitter_indices)
      out.push_back({tx, group.receiver_set});
  }
  return out;
}

PairwiseProfile pairwise_profile(const topo::Topology& t) {
  PairwiseProfile profile(t.receivers());
  for (const auto& group : group_decomposition(t)) {
    const int count = static_cast<int>(group.transmitter_indices.size());
    if (group.receiver_set.size() == 1) {
      profile.exclusive[group.receiver_set[0]] += count;
    } else if (group.receiver_set.size() == 2) {
      const int i = group.receiver_set[0];
      const int p = group.receiver_set[1];
      profile.shared[i][p] += count;
      profile.shared[p][i] += count;
    }
  }
  return profile;
}

PairwiseProfile convert_to_pairwise(const topo::Topology& t,
                                    const PairAssignment& assignment) {
  auto higher = higher_transmitters(t);
  if (assignment.size() != higher.size())
    throw std::invalid_argument(
        "jrc: assignment must name one pair per higher-order transmitter");
  auto profile = pairwise_profile(t);
  for (std::size_t h = 0; h < higher.size(); ++h) {
    auto [i, p] = assignment[h];
    if (i > p) std::swap(i, p);
    const auto& set = higher[h].receiver_set;
    const bool contained = i != p &&
                           std::binary_search(set.begin(), set.end(), i) &&
                           std::binary_search(set.begin(), set.end(), p);
    if (!contained)
      throw std::invalid_argument(
          "jrc: assigned pair is not contained in the transmitter's receiver set");
    profile.shared[i][p] += 1;
    profile.shared[p][i] += 1;
  }
  return profile;
}

Codeword general_encode(const topo::Topology& t, const PairAssignment& assignment,
                        const Allocation& alloc,
                        const std::vector<std::uint8_t>& higher_bits,
                        const std::vector<int>& b) {
  auto higher = higher_transmitters(t);
  if (higher_bits.size() != higher.size())
    throw std::invalid_argument(
        "jrc: one bit required per higher-order transmitter");
  const auto converted = convert_to_pairwise(t, assignment);
  validate_allocation(converted, alloc);
  const auto c = moduli(converted, alloc);
  const int m = t.receivers();
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("jrc: message length must equal receiver count");
  for (int i = 0; i < m; ++i)
    if (b[i] < 0 || b[i] > t.fan_in(i))
      throw std::invalid_argument("jrc: message component outside the receiver's level range");

  // Interference every receiver sees from the fixed higher-order bits.
  std::vector<int> comp(m, 0);
  for (std::size_t h = 0; h < higher.size(); ++h)
    if (higher_bits[h])
      for (int rx : higher[h].receiver_set) ++comp[rx];

  const auto physical = pairwise_profile(t);
  auto sys = system_from(physical, c);

  std::optional<LevelSolution> sol;
  bool exact_possible = true;
  std::vector<int> exact_target(m), residue_target(m);
  for (int i = 0; i < m; ++i) {
    exact_target[i] = b[i] - comp[i];
    if (exact_target[i] < 0) exact_possible = false;
    residue_target[i] = positive_mod(b[i] - comp[i], c[i]);
  }
  if (exact_possible) sol = solve_levels(sys, exact_target, /*exact=*/true);
  if (!sol) sol = solve_levels(sys, residue_target, /*exact=*/false);
  if (!sol)
    throw std::invalid_argument(
        "jrc: message not encodable with the given higher-order bits");

  Codeword cw;
  cw.exclusive_levels = std::move(sol->exclusive);
  cw.shared_levels = std::move(sol->shared);
  cw.higher_bits = higher_bits;
  return cw;
}

Codeword general_encode_auto(const topo::Topology& t, const PairAssignment& assignment,
                             const Allocation& alloc, const std::vector<int>& b) {
  const auto higher = higher_transmitters(t);
  const int h = static_cast<int>(higher.size());
  if (h > 20) throw std::invalid_argument("jrc: too many higher-order transmitters");
  // All-zero pattern first, then by increasing number of active bits.
  std::vector<std::uint32_t> patterns;
  for (std::uint32_t p = 0; p < (1u << h); ++p) patterns.push_back(p);
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  std::string last_error = "jrc: no higher-order bit pattern encodes the message";
  for (std::uint32_t p : patterns) {
    std::vector<std::uint8_t> bits(h);
    for (int j = 0; j < h; ++j) bits[j] = static_cast<std::uint8_t>((p >> j) & 1u);
    try {
      return general_encode(t, assignment, alloc, bits, b);
    } catch (const std::invalid_argument& e) {
      last_error = e.what();
    }
  }
  throw std::invalid_argument(last_error);
}

channel::TransmitFrame realize_frame(const topo::Topology& t, const Codeword& cw) {
  channel::TransmitFrame f;
  f.bits.assign(t.transmitters(), 0);
  std::size_t next_higher = 0;
  for (const auto& group : group_decomposition(t)) {
    int level = 0;
    if (group.receiver_set.size() == 1) {
      level = cw.exclusive_levels[group.receiver_set[0]];
    } else if (group.receiver_set.size() == 2) {
      level = cw.shared_levels[group.receiver_set[0]][group.receiver_set[1]];
    } else {
      for (int tx : group.transmitter_indices) {
        if (next_higher >= cw.higher_bits.size())
          throw std::invalid_argument("jrc: codeword missing higher-order bits");
        f.bits[tx] = cw.higher_bits[next_higher++];
      }
      continue;
    }
    if (level < 0 || level > static_cast<int>(group.transmitter_indices.size()))
      throw std::invalid_argument("jrc: codeword level exceeds group size");
    for (int u = 0; u < level; ++u) f.bits[group.transmitter_indices[u]] = 1;
  }
  return f;
}

std::vector<Allocation> enumerate_allocations(const PairwiseProfile& profile) {
  const int m = profile.receivers();
  struct PairSplits {
    int i, p;
    std::vector<std::pair<int, int>> splits;
  };
  std::vector<PairSplits> pair_splits;
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    for (int p = i + 1; p < m; ++p) {
      const int t_ip = profile.shared[i][p];
      if (t_ip == 0) continue;
      PairSplits ps{i, p, {}};
      for (int a = 0; a <= std::min(t_ip, profile.exclusive[p]); ++a)
        for (int bshare = 0; bshare <= std::min(t_ip - a, profile.exclusive[i]); ++bshare)
          ps.splits.emplace_back(a, bshare);
      total *= static_cast<long long>(ps.splits.size());
      if (total > 1'000'000)
        throw std::invalid_argument("jrc: allocation enumeration bound exceeded");
      pair_splits.push_back(std::move(ps));
    }
  }

  std::vector<Allocation> out;
  Allocation current(m);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pair_splits.size()) {
      out.push_back(current);
      return;
    }
    const auto& ps = pair_splits[idx];
    for (const auto& [a, bshare] : ps.splits) {
      current.split[ps.i][ps.p] = a;
      current.split[ps.p][ps.i] = bshare;
      self(self, idx + 1);
    }
    current.split[ps.i][ps.p] = 0;
    current.split[ps.p][ps.i] = 0;
  };
  rec(rec, 0);
  return out;
}

bool allocation_supported(const PairwiseProfile& profile, const Allocation& alloc) {
  if (!allocation_valid(profile, alloc)) return false;
  const auto c = moduli(profile, alloc);
  long long box = 1;
  for (int ci : c) {
    box *= ci;
    if (box > 1'000'000)
      throw std::invalid_argument("jrc: support check bound exceeded");
  }
  const int m = profile.receivers();
  std::vector<int> b(m, 0);
  for (long long msg = 0; msg < box; ++msg) {
    long long v = msg;
    for (int i = 0; i < m; ++i) {
      b[i] = static_cast<int>(v % c[i]);
      v /= c[i];
    }
    try {
      jrcn_encode(profile, alloc, b);
    } catch (const std::runtime_error&) {
      return false;
    }
  }
  return true;
}

GreedyResult greedy_max_sum(const PairwiseProfile& profile) {
  const int m = profile.receivers();
  GreedyResult result{Allocation(m), {}};
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = profile.exclusive[i] + 1;

  for (int i = 0; i < m; ++i) {
    for (int p = i + 1; p < m; ++p) {
      for (int unit = 0; unit < profile.shared[i][p]; ++unit) {
        GreedyStep step;
        step.i = i;
        step.p = p;
        step.c_i = c[i];
        step.c_p = c[p];
        step.feasible_i = result.alloc.split[i][p] < profile.exclusive[p];
        step.feasible_p = result.alloc.split[p][i] < profile.exclusive[i];
        if (step.feasible_i && step.feasible_p)
          step.chosen = (c[p] < c[i]) ? p : i;  // smaller alphabet, ties to i
        else if (step.feasible_i)
          step.chosen = i;
        else if (step.feasible_p)
          step.chosen = p;
        if (step.chosen == i) {
          ++result.alloc.split[i][p];
          ++c[i];
        } else if (step.chosen == p) {
          ++result.alloc.split[p][i];
          ++c[p];
        }
        result.steps.push_back(step);
      }
    }
  }
  return result;
}

topo::Topology make_topology(const PairwiseProfile& profile) {
  const int m = profile.receivers();
  std::vector<std::vector<int>> coverage;
  for (int i = 0; i < m; ++i)
    for (int u = 0; u < profile.exclusive[i]; ++u) coverage.push_back({i});
  for (int i = 0; i < m; ++i)
    for (int p = i + 1; p < m; ++p)
      for (int u = 0; u < profile.shared[i][p]; ++u) coverage.push_back({i, p});
  if (coverage.empty()) coverage.push_back({});  // keep k >= 1
  const int k = static_cast<int>(coverage.size());
  return topo::Topology(k, m, std::move(coverage));
}

}  // namespace lac::jrc
