// Copyright 2026 The hopfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopfkit/linsolve.hpp"

#include <algorithm>
#include <limits>

#include "hopfkit/errors.hpp"

namespace hopfkit {
namespace {

// Row-reduced echelon form over the first `cols` columns of an augmented
// sparse matrix. Columns >= cols are right-hand sides and never pivot.
struct Echelon {
  std::vector<SparseVec> rows;
  std::vector<std::uint64_t> pivot_cols;  // pivot column of rows[k]
};

Scalar entry(const SparseVec& row, std::uint64_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint64_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Scalar(0);
}

// row -= factor * pivot
SparseVec axpy(const SparseVec& row, const Scalar& factor, const SparseVec& pivot) {
  return add(row, scale(pivot, -factor));
}

Echelon reduce(std::vector<SparseVec> rows, std::uint64_t cols) {
  Echelon out;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<std::size_t, std::uint64_t>> pivots;  // (row, column)
  for (std::uint64_t c = 0; c < cols; ++c) {
    std::size_t best = rows.size();
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty() || rows[r].front().first != c) continue;
      if (rows[r].size() < best_len) {
        best = r;
        best_len = rows[r].size();
      }
    }
    if (best == rows.size()) continue;
    used[best] = true;
    Scalar inv = rows[best].front().second.inverse();
    rows[best] = scale(rows[best], inv);
    const SparseVec& pivot = rows[best];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      Scalar f = entry(rows[r], c);
      if (!f.is_zero()) rows[r] = axpy(rows[r], f, pivot);
    }
    pivots.emplace_back(best, c);
  }
  for (const auto& [r, c] : pivots) {
    out.rows.push_back(rows[r]);
    out.pivot_cols.push_back(c);
  }
  // Leftover rows carry only right-hand-side entries (or nothing).
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && !rows[r].empty()) {
      out.rows.push_back(rows[r]);
      out.pivot_cols.push_back(std::numeric_limits<std::uint64_t>::max());
    }
  }
  return out;
}

std::vector<SparseVec> row_form(const LinearMap& map) {
  std::vector<VecBuilder> builders(map.codomain_size());
  for (std::uint64_t j = 0; j < map.domain_size(); ++j) {
    for (const auto& [i, v] : map.column(j)) builders[i].add(j, v);
  }
  std::vector<SparseVec> rows;
  rows.reserve(builders.size());
  for (auto& b : builders) rows.push_back(std::move(b).build());
  return rows;
}

}  // namespace

std::vector<std::optional<LinearSolution>> solve_linear_many(const LinearMap& map,
                                                             const std::vector<SparseTensor>& rhs) {
  const std::uint64_t n = map.domain_size();
  for (const auto& b : rhs) {
    if (b.shape() != map.codomain()) throw ShapeError("right-hand side shape does not match codomain");
  }
  std::vector<SparseVec> rows = row_form(map);
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    for (const auto& [i, v] : rhs[k].entries()) {
      rows[i].emplace_back(n + k, v);  // appended past every real column: stays sorted
    }
  }
  Echelon e = reduce(std::move(rows), n);
  const std::size_t rank_value =
      std::count_if(e.pivot_cols.begin(), e.pivot_cols.end(),
                    [](auto c) { return c != std::numeric_limits<std::uint64_t>::max(); });

  std::vector<VecBuilder> values(rhs.size());
  std::vector<bool> consistent(rhs.size(), true);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const auto pc = e.pivot_cols[r];
    for (const auto& [c, v] : e.rows[r]) {
      if (c < n) continue;
      if (pc == std::numeric_limits<std::uint64_t>::max()) {
        consistent[c - n] = false;
      } else {
        values[c - n].add(pc, v);
      }
    }
  }
  std::vector<std::optional<LinearSolution>> out;
  out.reserve(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (!consistent[k]) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(LinearSolution{SparseTensor(map.domain(), std::move(values[k]).build()),
                                      rank_value == n});
    }
  }
  return out;
}

std::optional<LinearSolution> solve_linear(const LinearMap& map, const SparseTensor& rhs) {
  return solve_linear_many(map, {rhs}).front();
}

std::size_t rank(const LinearMap& map) {
  Echelon e = reduce(row_form(map), map.domain_size());
  return std::count_if(e.pivot_cols.begin(), e.pivot_cols.end(),
                       [](auto c) { return c != std::numeric_limits<std::uint64_t>::max(); });
}

std::optional<LinearMap> inverse(const LinearMap& map) {
  if (map.domain_size() != map.codomain_size()) return std::nullopt;
  std::vector<SparseTensor> basis;
  basis.reserve(map.codomain_size());
  for (std::uint64_t i = 0; i < map.codomain_size(); ++i) {
    basis.push_back(SparseTensor(map.codomain(), SparseVec{{i, Scalar(1)}}));
  }
  auto sols = solve_linear_many(map, basis);
  std::vector<SparseVec> cols;
  cols.reserve(sols.size());
  for (auto& s : sols) {
    if (!s || !s->unique) return std::nullopt;
    cols.push_back(s->value.entries());
  }
  return LinearMap(map.codomain(), map.domain(), std::move(cols));
}

}  // namespace hopfkit
