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

#include "lac/gf2.hpp"

#include <stdexcept>

namespace lac::gf2 {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
  if (rows < 1 || cols < 1 || cols > 64)
    throw std::invalid_argument("gf2: matrix dimensions must be in [1, 64]");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> values)
    : Matrix(static_cast<int>(values.size()),
             static_cast<int>(values.begin()->size())) {
  int r = 0;
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("gf2: ragged initializer");
    int c = 0;
    for (int v : row) set(r, c++, v);
    ++r;
  }
}

Matrix Matrix::from_topological(const topo::TopologicalMatrix& h) {
  Matrix a(h.rows, h.cols);
  for (int r = 0; r < h.rows; ++r)
    for (int c = 0; c < h.cols; ++c)
      if (h.entries[r][c]) a.set(r, c, 1);
  return a;
}

void Matrix::set(int r, int c, int v) {
  if (v & 1)
    row_[r] |= (std::uint64_t{1} << c);
  else
    row_[r] &= ~(std::uint64_t{1} << c);
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
  Matrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      out.set(r, c, get(r, cols[c]));
  return out;
}

int rank(const Matrix& a) {
  std::vector<std::uint64_t> rows(a.rows());
  for (int r = 0; r < a.rows(); ++r) rows[r] = a.row_bits(r);
  int rk = 0;
  for (int c = 0; c < a.cols() && rk < a.rows(); ++c) {
    int pivot = -1;
    for (int r = rk; r < a.rows(); ++r) {
      if ((rows[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rk], rows[pivot]);
    for (int r = 0; r < a.rows(); ++r)
      if (r != rk && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

std::vector<int> solve(const Matrix& a, const std::vector<int>& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("gf2: solve requires a square matrix");
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("gf2: right-hand side length mismatch");
  const int n = a.rows();
  // Augmented rows: matrix bits plus the b bit at position n.
  std::vector<std::uint64_t> rows(n);
  for (int r = 0; r < n; ++r)
    rows[r] = a.row_bits(r) | (static_cast<std::uint64_t>(b[r] & 1) << n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if ((rows[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("gf2: singular matrix");
    std::swap(rows[c], rows[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != c && ((rows[r] >> c) & 1u)) rows[r] ^= rows[c];
  }
  std::vector<int> x(n);
  for (int r = 0; r < n; ++r) x[r] = static_cast<int>((rows[r] >> n) & 1u);
  return x;
}

std::vector<int> independent_columns(const Matrix& a) {
  std::vector<int> chosen;
  std::vector<std::uint64_t> basis(64, 0);  // basis[i] has leading bit i
  for (int c = 0; c < a.cols(); ++c) {
    std::uint64_t col = 0;
    for (int r = 0; r < a.rows(); ++r)
      col |= static_cast<std::uint64_t>(a.get(r, c)) << r;
    std::uint64_t reduced = col;
    for (int bit = 63; bit >= 0 && reduced; --bit)
      if ((reduced >> bit) & 1u) reduced ^= basis[bit];
    if (reduced != 0) {
      int lead = 63;
      while (!((reduced >> lead) & 1u)) --lead;
      basis[lead] = reduced;
      chosen.push_back(c);
    }
  }
  return chosen;
}

}  // namespace lac::gf2
