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

#ifndef LAC_GF2_HPP_
#define LAC_GF2_HPP_

#include <cstdint>
#include <vector>

#include "lac/topology.hpp"

namespace lac::gf2 {

/// Dense binary matrix, one machine word per row.  cols <= 64.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<int>> values);

  static Matrix from_topological(const topo::TopologicalMatrix& h);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int get(int r, int c) const { return (row_[r] >> c) & 1u; }
  void set(int r, int c, int v);
  std::uint64_t row_bits(int r) const { return row_[r]; }

  /// Keeps the listed columns, in the given order.
  Matrix select_columns(const std::vector<int>& cols) const;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint64_t> row_;
};

/// Rank over GF(2) by row elimination, pivot on lowest row index.
int rank(const Matrix& a);

/// Solves a x = b over GF(2) for square full-rank a.
/// Throws std::invalid_argument on dimension mismatch or singular a.
std::vector<int> solve(const Matrix& a, const std::vector<int>& b);

/// Greedy lowest-index-first choice of r linearly independent columns,
/// where r = rank(a).  Used to reduce a rectangular coverage matrix to a
/// square invertible one.
std::vector<int> independent_columns(const Matrix& a);

}  // namespace lac::gf2

#endif  // LAC_GF2_HPP_
