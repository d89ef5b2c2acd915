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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Shape = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

/// Sparse vector over flat (row-major) indices: sorted, zero-free.
using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

std::uint64_t shape_size(const Shape& shape);

/// Row-major flattening: the index of e_i (x) e_j is i * dim(second) + j.
std::uint64_t flatten(const Shape& shape, std::span<const std::size_t> index);
MultiIndex unflatten(const Shape& shape, std::uint64_t flat);

/// Collects (index, coefficient) contributions, summing duplicates.
class VecBuilder {
 public:
  void add(std::uint64_t index, const Scalar& value);
  void add_scaled(const SparseVec& vec, const Scalar& factor);
  SparseVec build() &&;

 private:
  std::vector<std::pair<std::uint64_t, Scalar>> pending_;
};

SparseVec scale(const SparseVec& vec, const Scalar& factor);
SparseVec add(const SparseVec& a, const SparseVec& b);

/// Element of a tensor power (or any multi-leg array) with exact entries.
/// Stored entries are never zero and are kept in row-major order, so two
/// tensors are equal iff their shapes and entry lists agree.
class SparseTensor {
 public:
  SparseTensor() = default;
  explicit SparseTensor(Shape shape) : shape_(std::move(shape)) {}
  SparseTensor(Shape shape, SparseVec entries);
  /// Sums duplicate indices; throws ShapeError on out-of-range indices.
  SparseTensor(Shape shape, const std::vector<std::pair<MultiIndex, Scalar>>& entries);

  static SparseTensor basis(Shape shape, const MultiIndex& index);
  /// Rank-0 tensor holding one scalar.
  static SparseTensor scalar(const Scalar& value);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  const SparseVec& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(const MultiIndex& index) const;
  Scalar at_flat(std::uint64_t flat) const;

  SparseTensor operator-() const;
  friend SparseTensor operator+(const SparseTensor& a, const SparseTensor& b);
  friend SparseTensor operator-(const SparseTensor& a, const SparseTensor& b);
  friend SparseTensor operator*(const Scalar& s, const SparseTensor& t);
  friend bool operator==(const SparseTensor& a, const SparseTensor& b);

  /// Outer product a (x) b, legs of a first.
  friend SparseTensor outer(const SparseTensor& a, const SparseTensor& b);

 private:
  Shape shape_;
  SparseVec entries_;
};

/// Contracts leg `first` of `a` with leg `second` of `b` for every pair.
/// Result legs: free legs of a in order, then free legs of b.
SparseTensor tensor_contract(const SparseTensor& a, const SparseTensor& b,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Moves leg k of `a` to position perm[k].
SparseTensor tensor_permute(const SparseTensor& a, std::span<const std::size_t> perm);

/// Linear map between tensor spaces, stored column-wise: column j is the
/// image of the j-th (row-major) domain basis element. As a tensor its
/// coefficient array has shape codomain x domain.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Shape domain, Shape codomain, std::vector<SparseVec> columns);

  static LinearMap identity(const Shape& shape);
  static LinearMap zero(const Shape& domain, const Shape& codomain);
  /// `coefficients` has shape codomain ++ domain; the first
  /// `codomain_rank` legs form the codomain.
  static LinearMap from_tensor(const SparseTensor& coefficients, std::size_t codomain_rank);
  /// Permutes tensor legs: leg k of the input lands at position perm[k].
  static LinearMap permutation(const Shape& domain, std::span<const std::size_t> perm);

  const Shape& domain() const { return domain_; }
  const Shape& codomain() const { return codomain_; }
  std::uint64_t domain_size() const { return columns_.size(); }
  std::uint64_t codomain_size() const { return shape_size(codomain_); }
  const SparseVec& column(std::uint64_t j) const { return columns_.at(j); }
  const std::vector<SparseVec>& columns() const { return columns_; }

  SparseTensor to_tensor() const;
  SparseTensor apply(const SparseTensor& x) const;
  SparseVec apply(const SparseVec& x) const;

  /// (*this) o inner.
  LinearMap after(const LinearMap& inner) const;
  LinearMap transpose() const;
  friend LinearMap tensor_product(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Scalar& s, const LinearMap& m);
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

  /// Maps every coefficient into `field`.
  LinearMap to_field(Field field) const;

 private:
  Shape domain_;
  Shape codomain_;
  std::vector<SparseVec> columns_;
};

SparseVec to_field(const SparseVec& vec, Field field);
SparseTensor to_field(const SparseTensor& t, Field field);

}  // namespace hopfkit
