// Copyright 2026 The cabprog Authors.
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

#pragma once

// Minimum-cost perfect assignment on a square matrix (Kuhn-Munkres with
// row/column potentials, O(n^3)).

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cabprog {

// Dense row-major square matrix.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * n_ + c];
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

// Returns col_of_row: row r is assigned column col_of_row[r]. Costs must be
// finite. Rows are inserted in index order and the column scan picks the
// lowest index among equal reduced costs, so ties resolve deterministically.
inline std::vector<std::size_t> solve_assignment(const CostMatrix& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; index 0 is the virtual column used to seed each phase.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> min_v(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = row_of_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        double reduced = cost(r0 - 1, c - 1) - u[r0] - v[c];
        if (reduced < min_v[c]) {
          min_v[c] = reduced;
          way[c] = col0;
        }
        if (min_v[c] < delta) {
          delta = min_v[c];
          col1 = c;
        }
      }
      if (col1 == 0) throw std::invalid_argument("non-finite assignment cost");
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[row_of_col[c]] += delta;
          v[c] -= delta;
        } else {
          min_v[c] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      std::size_t col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t c = 1; c <= n; ++c) col_of_row[row_of_col[c] - 1] = c - 1;
  return col_of_row;
}

}  // namespace cabprog
