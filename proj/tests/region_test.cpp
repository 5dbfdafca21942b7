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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lac/region.hpp"
#include "lac/topology.hpp"

using namespace lac;

namespace {

bool has_vertex(const region::RateRegion& r, const std::vector<double>& point) {
  for (const auto& v : r.vertices) {
    bool eq = true;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (std::abs(v.rates[i] - point[i]) > 1e-9) eq = false;
    if (eq) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("single link region") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/single_link.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  REQUIRE(hull.vertices.size() == 2);
  CHECK(has_vertex(hull, {0.0}));
  CHECK(has_vertex(hull, {1.0}));
}

TEST_CASE("two-transmitter region vertices") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  REQUIRE(hull.vertices.size() == 4);
  CHECK(has_vertex(hull, {0.0, 0.0}));
  CHECK(has_vertex(hull, {1.0, 0.0}));
  CHECK(has_vertex(hull, {1.0, 1.0}));
  CHECK(has_vertex(hull, {0.0, std::log2(3.0)}));
}

TEST_CASE("hull is idempotent") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/triple_overlap.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  auto again = region::convex_hull(hull.vertices);
  REQUIRE(again.vertices.size() == hull.vertices.size());
  for (std::size_t i = 0; i < hull.vertices.size(); ++i)
    CHECK(again.vertices[i].rates == hull.vertices[i].rates);
}

TEST_CASE("membership") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  CHECK(region::contains(hull, {0.5, 0.5}));
  CHECK(region::contains(hull, {1.0, 1.0}));
  CHECK(region::contains(hull, {0.5, (1.0 + std::log2(3.0)) / 2.0}));
  CHECK(!region::contains(hull, {1.0, 1.1}));
  CHECK(!region::contains(hull, {0.0, 1.7}));
}

TEST_CASE("dominated tuples do not add vertices") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto tuples = region::collect_tuples(t);
  auto base = region::convex_hull(tuples);
  tuples.push_back({{0.4, 0.4}, "interior"});
  auto extended = region::convex_hull(tuples);
  REQUIRE(extended.vertices.size() == base.vertices.size());
  for (std::size_t i = 0; i < base.vertices.size(); ++i)
    CHECK(extended.vertices[i].rates == base.vertices[i].rates);
}

TEST_CASE("sum-rate bound check") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  CHECK(!region::sum_rate_violation(hull, t.transmitters()).has_value());
  auto bogus = region::convex_hull({{{2.5, 0.0}, "bogus"}});
  CHECK(region::sum_rate_violation(bogus, 2).has_value());
}

TEST_CASE("csv export") {
  auto t = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto hull = region::convex_hull(region::collect_tuples(t));
  auto csv = region::to_csv(hull);
  CHECK(csv.find("r1,r2,provenance") == 0);
  CHECK(csv.find("1,1") != std::string::npos);
  CHECK(csv.find("origin") != std::string::npos);
}

TEST_CASE("svg export") {
  auto t2 = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto svg2 = region::to_svg(region::convex_hull(region::collect_tuples(t2)));
  CHECK(svg2.find("<svg") == 0);
  CHECK(svg2.find("<polygon") != std::string::npos);

  auto t3 = topo::load_topology(LAC_FIXTURE_DIR "/triple_overlap.json");
  auto svg3 = region::to_svg(region::convex_hull(region::collect_tuples(t3)));
  CHECK(svg3.find("(r2, r3)") != std::string::npos);

  auto t1 = topo::load_topology(LAC_FIXTURE_DIR "/single_link.json");
  CHECK_THROWS_AS(region::to_svg(region::convex_hull(region::collect_tuples(t1))),
                  std::invalid_argument);
}

TEST_CASE("merged collection requires matching dimensions") {
  auto t2 = topo::load_topology(LAC_FIXTURE_DIR "/two_tx_two_rx.json");
  auto t1 = topo::load_topology(LAC_FIXTURE_DIR "/single_link.json");
  CHECK_THROWS_AS(region::collect_tuples(std::vector<topo::Topology>{t2, t1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(region::collect_tuples(std::vector<topo::Topology>{}),
                  std::invalid_argument);
}
