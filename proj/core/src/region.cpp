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

#include "lac/region.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lac/channel.hpp"
#include "lac/jrc.hpp"
#include "lac/schemes.hpp"

namespace lac::region {

namespace {

constexpr double kTol = 1e-9;

/// Phase-1 simplex feasibility: can `p` be written as a convex
/// combination of `points`?  Dimensions stay tiny (<= 4), so a dense
/// tableau with Bland's rule is plenty.
bool in_convex_hull(const std::vector<std::vector<double>>& points,
                    const std::vector<double>& p) {
  if (points.empty()) return false;
  const int d = static_cast<int>(p.size());
  const int rows = d + 1;  // coordinate rows plus the sum-to-one row
  const int n = static_cast<int>(points.size());
  const int cols = n + rows + 1;  // lambdas, artificials, rhs

  std::vector<std::vector<double>> tab(rows, std::vector<double>(cols, 0.0));
  for (int r = 0; r < rows; ++r) {
    double rhs = (r < d) ? p[r] : 1.0;
    for (int j = 0; j < n; ++j) tab[r][j] = (r < d) ? points[j][r] : 1.0;
    if (rhs < 0) {
      for (int j = 0; j < n; ++j) tab[r][j] = -tab[r][j];
      rhs = -rhs;
    }
    tab[r][n + r] = 1.0;
    tab[r][cols - 1] = rhs;
  }
  // Reduced-cost row for minimizing the artificial sum.
  std::vector<double> cost(cols, 0.0);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < rows; ++r) cost[j] += tab[r][j];
  double objective = 0.0;
  for (int r = 0; r < rows; ++r) objective += tab[r][cols - 1];
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = n + r;

  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + rows; ++j) {
      if (cost[j] > kTol) {
        enter = j;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (tab[r][enter] > kTol) {
        const double ratio = tab[r][cols - 1] / tab[r][enter];
        if (leave < 0 || ratio < best_ratio - kTol ||
            (ratio < best_ratio + kTol && basis[r] < basis[leave]))
          leave = r, best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen here
    const double pivot = tab[leave][enter];
    for (int j = 0; j < cols; ++j) tab[leave][j] /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double f = tab[r][enter];
      if (std::abs(f) < 1e-15) continue;
      for (int j = 0; j < cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    const double fc = cost[enter];
    for (int j = 0; j < cols; ++j) cost[j] -= fc * tab[leave][j];
    objective -= fc * tab[leave][cols - 1];
    basis[leave] = enter;
  }
  return objective < 1e-7;
}

bool same_point(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kTol) return false;
  return true;
}

bool dominated(const std::vector<double>& a, const std::vector<double>& b) {
  // a <= b componentwise and a != b
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + kTol) return false;
    if (a[i] < b[i] - kTol) strict = true;
  }
  return strict;
}

std::string format_rates(const std::vector<double>& r) {
  std::ostringstream out;
  out.precision(12);
  out << "(";
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
  out << ")";
  return out.str();
}

/// Dedup key with coordinates rounded well below the predicate tolerance.
std::vector<long long> rate_key(const std::vector<double>& r) {
  std::vector<long long> key(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    key[i] = std::llround(r[i] * 1e10);
  return key;
}

void append_unique(std::vector<TaggedTuple>& tuples,
                   std::set<std::vector<long long>>& seen, TaggedTuple tuple) {
  if (seen.insert(rate_key(tuple.rates)).second)
    tuples.push_back(std::move(tuple));
}

std::string split_tag(const jrc::Allocation& alloc, const jrc::PairwiseProfile& profile) {
  std::ostringstream out;
  out << "jrc";
  for (int i = 0; i < profile.receivers(); ++i)
    for (int p = i + 1; p < profile.receivers(); ++p)
      if (profile.shared[i][p] > 0)
        out << " t^" << i + 1 << "_" << i + 1 << p + 1 << "=" << alloc.split[i][p]
            << " t^" << p + 1 << "_" << i + 1 << p + 1 << "=" << alloc.split[p][i];
  return out.str();
}

/// Exhaustively checks that every message in the box encodes and decodes
/// through the channel.  Used for allocations that lean on converted
/// higher-order capacity, where achievability is not covered by the
/// pairwise result.  `budget` caps the number of message trials.
bool box_roundtrips(const topo::Topology& t, const jrc::PairAssignment& assignment,
                    const jrc::Allocation& alloc, const std::vector<int>& c,
                    long long& budget) {
  long long box = 1;
  for (int ci : c) {
    box *= ci;
    if (box > 1'000'000) return false;
  }
  if (box > budget) return false;
  budget -= box;
  const int m = t.receivers();
  std::vector<int> b(m, 0);
  for (long long msg = 0; msg < box; ++msg) {
    long long v = msg;
    for (int i = 0; i < m; ++i) {
      b[i] = static_cast<int>(v % c[i]);
      v /= c[i];
    }
    try {
      auto cw = jrc::general_encode_auto(t, assignment, alloc, b);
      auto y = channel::transmit(t, jrc::realize_frame(t, cw));
      if (jrc::jrcn_decode(y, c) != b) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

void collect_jrc_tuples(const topo::Topology& t, std::vector<TaggedTuple>& tuples,
                        std::set<std::vector<long long>>& seen) {
  const auto higher = jrc::higher_transmitters(t);
  const auto physical = jrc::pairwise_profile(t);

  if (higher.empty()) {
    for (const auto& alloc : jrc::enumerate_allocations(physical)) {
      if (!jrc::allocation_supported(physical, alloc)) continue;
      TaggedTuple tuple{jrc::rates(physical, alloc), split_tag(alloc, physical)};
      append_unique(tuples, seen, std::move(tuple));
    }
    return;
  }

  // Group the higher-order transmitters by coverage set; transmitters in
  // one group are interchangeable, so only per-pair counts matter.
  std::map<std::vector<int>, std::vector<int>> groups;  // set -> tx list
  for (const auto& h : higher) groups[h.receiver_set].push_back(h.tx);

  struct GroupChoice {
    std::vector<int> receiver_set;
    std::vector<std::pair<int, int>> pairs;
    int count = 0;
  };
  std::vector<GroupChoice> choices;
  for (const auto& [set, txs] : groups) {
    GroupChoice gc;
    gc.receiver_set = set;
    gc.count = static_cast<int>(txs.size());
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b)
        gc.pairs.emplace_back(set[a], set[b]);
    choices.push_back(std::move(gc));
  }

  long long budget = 200'000;  // per-topology verification cap

  // Odometer over per-group pair-count distributions.
  std::vector<std::vector<int>> dist(choices.size());
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == choices.size()) {
      // Materialize a representative assignment in canonical order.
      jrc::PairAssignment assignment;
      for (std::size_t gi = 0; gi < choices.size(); ++gi)
        for (std::size_t pi = 0; pi < choices[gi].pairs.size(); ++pi)
          for (int u = 0; u < dist[gi][pi]; ++u)
            assignment.push_back(choices[gi].pairs[pi]);
      const auto converted = jrc::convert_to_pairwise(t, assignment);
      for (const auto& alloc : jrc::enumerate_allocations(converted)) {
        // The rate claim stands only if the whole box encodes, higher
        // bits included, so always verify by enumeration.
        auto c = jrc::moduli(converted, alloc);
        if (!box_roundtrips(t, assignment, alloc, c, budget)) continue;
        TaggedTuple tuple{jrc::rates(converted, alloc), split_tag(alloc, converted)};
        append_unique(tuples, seen, std::move(tuple));
      }
      return;
    }
    const int pairs = static_cast<int>(choices[g].pairs.size());
    const int count = choices[g].count;
    dist[g].assign(pairs, 0);
    auto compose = [&](auto&& inner, int pi, int remaining) -> void {
      if (pi == pairs - 1) {
        dist[g][pi] = remaining;
        self(self, g + 1);
        return;
      }
      for (int u = 0; u <= remaining; ++u) {
        dist[g][pi] = u;
        inner(inner, pi + 1, remaining - u);
      }
    };
    compose(compose, 0, count);
  };
  rec(rec, 0);
}

}  // namespace

std::vector<TaggedTuple> collect_tuples(const topo::Topology& t) {
  std::vector<TaggedTuple> tuples;
  std::set<std::vector<long long>> seen;
  const int m = t.receivers();

  append_unique(tuples, seen, {std::vector<double>(m, 0.0), "origin"});
  for (int rx = 0; rx < m; ++rx) {
    if (t.fan_in(rx) == 0) continue;
    std::ostringstream tag;
    tag << "src r" << rx + 1;
    append_unique(tuples, seen, {schemes::src_rate(t, rx).rates, tag.str()});
  }
  if (auto erc = schemes::erc_rate(t))
    append_unique(tuples, seen, {erc->rates, "erc"});
  collect_jrc_tuples(t, tuples, seen);
  return tuples;
}

std::vector<TaggedTuple> collect_tuples(const std::vector<topo::Topology>& ts) {
  if (ts.empty()) throw std::invalid_argument("region: no topologies given");
  const int m = ts.front().receivers();
  std::vector<TaggedTuple> tuples;
  std::set<std::vector<long long>> seen;
  for (const auto& t : ts) {
    if (t.receivers() != m)
      throw std::invalid_argument("region: topologies must share the receiver count");
    for (auto& tuple : collect_tuples(t))
      append_unique(tuples, seen, std::move(tuple));
  }
  return tuples;
}

RateRegion convex_hull(const std::vector<TaggedTuple>& points) {
  if (points.empty()) throw std::invalid_argument("region: no points");
  const int d = static_cast<int>(points.front().rates.size());
  if (d < 1 || d > 4)
    throw std::invalid_argument("region: exact hull supports dimensions 1 to 4");
  for (const auto& p : points) {
    if (static_cast<int>(p.rates.size()) != d)
      throw std::invalid_argument("region: inconsistent point dimension");
    for (double v : p.rates)
      if (!std::isfinite(v) || v < -kTol)
        throw std::invalid_argument("region: rates must be finite and non-negative");
  }

  // Pareto-maximal originals carry the geometry; everything dominated
  // lies inside the box spanned by a dominator's projections.
  std::vector<TaggedTuple> maximal;
  for (const auto& p : points) {
    bool keep = true;
    for (const auto& q : points)
      if (dominated(p.rates, q.rates)) {
        keep = false;
        break;
      }
    if (keep) {
      bool dup = false;
      for (const auto& q : maximal)
        if (same_point(p.rates, q.rates)) {
          dup = true;
          break;
        }
      if (!dup) maximal.push_back(p);
    }
  }

  // Down-set closure: origin plus every coordinate-zeroing projection.
  std::vector<TaggedTuple> candidates = maximal;
  auto add_candidate = [&](TaggedTuple tuple) {
    for (const auto& q : candidates)
      if (same_point(tuple.rates, q.rates)) return;
    candidates.push_back(std::move(tuple));
  };
  add_candidate({std::vector<double>(d, 0.0), "origin"});
  for (const auto& p : maximal) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      auto proj = p.rates;
      for (int i = 0; i < d; ++i)
        if ((mask >> i) & 1u) proj[i] = 0.0;
      add_candidate({std::move(proj), p.provenance + " +silence"});
    }
  }

  RateRegion region;
  region.dimension = d;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<std::vector<double>> others;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (j != i) others.push_back(candidates[j].rates);
    if (!in_convex_hull(others, candidates[i].rates))
      region.vertices.push_back(candidates[i]);
  }
  std::sort(region.vertices.begin(), region.vertices.end(),
            [](const TaggedTuple& a, const TaggedTuple& b) { return a.rates < b.rates; });
  return region;
}

bool contains(const RateRegion& region, const std::vector<double>& point) {
  std::vector<std::vector<double>> vertices;
  for (const auto& v : region.vertices) vertices.push_back(v.rates);
  return in_convex_hull(vertices, point);
}

std::optional<TaggedTuple> sum_rate_violation(const RateRegion& region, int k) {
  for (const auto& v : region.vertices) {
    double sum = 0.0;
    for (double r : v.rates) sum += r;
    if (sum > static_cast<double>(k) + kTol) return v;
  }
  return std::nullopt;
}

std::string to_csv(const RateRegion& region) {
  std::ostringstream out;
  out.precision(12);
  for (int i = 0; i < region.dimension; ++i) out << (i ? "," : "") << "r" << i + 1;
  out << ",provenance\n";
  for (const auto& v : region.vertices) {
    for (int i = 0; i < region.dimension; ++i) out << (i ? "," : "") << v.rates[i];
    out << ",\"" << v.provenance << "\"\n";
  }
  return out.str();
}

namespace {

std::string polygon_svg(const std::vector<std::vector<double>>& verts2d,
                        double scale_max, double ox, double oy, double size,
                        const std::string& label) {
  // Order polygon vertices by angle around the centroid.
  std::vector<std::vector<double>> ordered = verts2d;
  double cx = 0, cy = 0;
  for (const auto& v : ordered) cx += v[0], cy += v[1];
  cx /= ordered.size();
  cy /= ordered.size();
  std::sort(ordered.begin(), ordered.end(),
            [&](const std::vector<double>& a, const std::vector<double>& b) {
              return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
            });
  const double plot = size - 40.0;
  auto px = [&](double x) { return ox + 30.0 + x / scale_max * plot; };
  auto py = [&](double y) { return oy + size - 30.0 - y / scale_max * plot; };
  std::ostringstream out;
  out << "<polygon points=\"";
  for (const auto& v : ordered) out << px(v[0]) << "," << py(v[1]) << " ";
  out << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";
  for (const auto& v : verts2d)
    out << "<circle cx=\"" << px(v[0]) << "\" cy=\"" << py(v[1])
        << "\" r=\"3\" fill=\"#08519c\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(scale_max)
      << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
      << "\" y2=\"" << py(scale_max) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << ox + size / 2 << "\" y=\"" << oy + size - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
  return out.str();
}

}  // namespace

std::string to_svg(const RateRegion& region) {
  double scale_max = 1.0;
  for (const auto& v : region.vertices)
    for (double r : v.rates) scale_max = std::max(scale_max, r);
  scale_max = std::ceil(scale_max * 2.0) / 2.0;

  std::ostringstream out;
  if (region.dimension == 2) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\">\n";
    std::vector<std::vector<double>> verts;
    for (const auto& v : region.vertices) verts.push_back(v.rates);
    out << polygon_svg(verts, scale_max, 0, 0, 400, "rate region (r1, r2)");
    out << "</svg>\n";
  } else if (region.dimension == 3) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"300\">\n";
    const int axes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const char* labels[3] = {"(r1, r2)", "(r1, r3)", "(r2, r3)"};
    for (int panel = 0; panel < 3; ++panel) {
      std::vector<TaggedTuple> projected;
      for (const auto& v : region.vertices)
        projected.push_back(
            {{v.rates[axes[panel][0]], v.rates[axes[panel][1]]}, v.provenance});
      auto face = convex_hull(projected);
      std::vector<std::vector<double>> verts;
      for (const auto& v : face.vertices) verts.push_back(v.rates);
      out << polygon_svg(verts, scale_max, panel * 300.0, 0, 300, labels[panel]);
    }
    out << "</svg>\n";
  } else {
    throw std::invalid_argument("region: SVG export supports dimensions 2 and 3");
  }
  return out.str();
}

}  // namespace lac::region
