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

#ifndef LAC_REGION_HPP_
#define LAC_REGION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lac/topology.hpp"

namespace lac::region {

/// A feasible rate point together with the scheme instance that produced it.
struct TaggedTuple {
  std::vector<double> rates;
  std::string provenance;
};

/// Convex hull (time-sharing closure) of the feasible tuples, downward
/// closed: the origin and every coordinate-zeroing projection of a tuple
/// are achievable by silencing transmitters part of the time.
struct RateRegion {
  int dimension = 0;
  std::vector<TaggedTuple> vertices;  // canonically ordered
};

/// Every feasible tuple of every applicable scheme: the origin, one SRC
/// tuple per covered receiver, the ERC tuple when applicable, and one JRC
/// tuple per valid allocation per pair-count assignment of higher-order
/// transmitters.  Allocations that draw on converted higher-order slots
/// are kept only if the full message box verifiably encodes.
std::vector<TaggedTuple> collect_tuples(const topo::Topology& t);

/// Merges tuple lists of several same-dimension topologies.
std::vector<TaggedTuple> collect_tuples(const std::vector<topo::Topology>& ts);

/// Exact hull for dimension <= 4, predicate tolerance 1e-9.
RateRegion convex_hull(const std::vector<TaggedTuple>& points);

/// True iff the point lies in the region (within tolerance).
bool contains(const RateRegion& region, const std::vector<double>& point);

/// nullopt when every vertex satisfies sum r_i <= k; otherwise the first
/// violating vertex.
std::optional<TaggedTuple> sum_rate_violation(const RateRegion& region, int k);

/// CSV: one vertex per row, rate columns then provenance.
std::string to_csv(const RateRegion& region);

/// Standalone SVG: polygon for dimension 2, three projection panels for
/// dimension 3.  Throws for other dimensions.
std::string to_svg(const RateRegion& region);

}  // namespace lac::region

#endif  // LAC_REGION_HPP_
