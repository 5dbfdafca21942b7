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

#include <stdexcept>

#include "lac/gf2.hpp"

using namespace lac::gf2;

namespace {

Matrix from_bits(int n, unsigned bits) {
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a.set(r, c, (bits >> (r * n + c)) & 1u);
  return a;
}

std::vector<int> multiply(const Matrix& a, const std::vector<int>& x) {
  std::vector<int> y(a.rows(), 0);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) y[r] ^= a.get(r, c) & x[c];
  return y;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(Matrix{{1, 0}, {1, 1}}) == 2);
  CHECK(rank(Matrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(Matrix{{0, 0}, {0, 0}}) == 0);
  CHECK(rank(Matrix{{1, 1, 0}, {0, 1, 1}}) == 2);
}

TEST_CASE("solve on the two-receiver coverage matrix") {
  Matrix h{{1, 0}, {1, 1}};
  CHECK(solve(h, {1, 0}) == std::vector<int>{1, 1});
  CHECK(solve(h, {0, 1}) == std::vector<int>{0, 1});
  CHECK(solve(h, {0, 0}) == std::vector<int>{0, 0});
}

TEST_CASE("solve rejects singular systems") {
  CHECK_THROWS_AS(solve(Matrix{{1, 1}, {1, 1}}, {1, 0}), std::invalid_argument);
}

TEST_CASE("independent columns prefer the lowest index") {
  // Columns 0 and 1 are equal; the greedy pick must take 0 then 2.
  Matrix a{{1, 1, 0}, {1, 1, 1}};
  CHECK(independent_columns(a) == std::vector<int>{0, 2});
  Matrix b{{1, 0, 1}, {0, 1, 1}};
  CHECK(independent_columns(b) == std::vector<int>{0, 1});
}

TEST_CASE("every full-rank matrix up to 4x4 solves every right-hand side") {
  for (int n = 1; n <= 4; ++n) {
    const unsigned total = 1u << (n * n);
    long long checked = 0;
    for (unsigned bits = 0; bits < total; ++bits) {
      auto a = from_bits(n, bits);
      if (rank(a) != n) continue;
      for (unsigned bv = 0; bv < (1u << n); ++bv) {
        std::vector<int> b(n);
        for (int i = 0; i < n; ++i) b[i] = (bv >> i) & 1u;
        auto x = solve(a, b);
        REQUIRE(multiply(a, x) == b);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}
