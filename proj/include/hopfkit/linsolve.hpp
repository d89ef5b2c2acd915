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

#pragma once

#include <optional>
#include <vector>

#include "hopfkit/tensor.hpp"

namespace hopfkit {

struct LinearSolution {
  SparseTensor value;
  /// False when the map has a nontrivial kernel; `value` is then the
  /// solution with every free variable set to zero.
  bool unique = true;
};

/// Exact solve of map(x) = rhs by sparse rational Gauss-Jordan elimination.
/// Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const LinearMap& map, const SparseTensor& rhs);

/// Solves map(x_k) = rhs_k for several right-hand sides with one
/// elimination. A nullopt entry marks an inconsistent right-hand side.
std::vector<std::optional<LinearSolution>> solve_linear_many(const LinearMap& map,
                                                             const std::vector<SparseTensor>& rhs);

std::size_t rank(const LinearMap& map);

/// Two-sided inverse of a bijective map, or nullopt when singular or when
/// domain and codomain sizes differ.
std::optional<LinearMap> inverse(const LinearMap& map);

}  // namespace hopfkit
