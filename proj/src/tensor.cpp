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

#include "hopfkit/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hopfkit/errors.hpp"

namespace hopfkit {
namespace {

std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

std::uint64_t shape_size(const Shape& shape) {
  std::uint64_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

std::uint64_t flatten(const Shape& shape, std::span<const std::size_t> index) {
  if (index.size() != shape.size()) {
    throw ShapeError("index of rank " + std::to_string(index.size()) +
                     " for tensor of shape " + shape_str(shape));
  }
  std::uint64_t flat = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (index[k] >= shape[k]) {
      throw ShapeError("index " + std::to_string(index[k]) + " out of range on leg " +
                       std::to_string(k) + " of shape " + shape_str(shape));
    }
    flat = flat * shape[k] + index[k];
  }
  return flat;
}

MultiIndex unflatten(const Shape& shape, std::uint64_t flat) {
  MultiIndex index(shape.size());
  for (std::size_t k = shape.size(); k-- > 0;) {
    index[k] = flat % shape[k];
    flat /= shape[k];
  }
  return index;
}

void VecBuilder::add(std::uint64_t index, const Scalar& value) {
  if (!value.is_zero()) pending_.emplace_back(index, value);
}

void VecBuilder::add_scaled(const SparseVec& vec, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [i, v] : vec) pending_.emplace_back(i, v * factor);
}

SparseVec VecBuilder::build() && {
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, v] : pending_) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.emplace_back(i, std::move(v));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

SparseVec scale(const SparseVec& vec, const Scalar& factor) {
  SparseVec out;
  if (factor.is_zero()) return out;
  out.reserve(vec.size());
  for (const auto& [i, v] : vec) out.emplace_back(i, v * factor);
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec to_field(const SparseVec& vec, Field field) {
  VecBuilder b;
  for (const auto& [i, v] : vec) b.add(i, v.to_field(field));
  return std::move(b).build();
}

SparseTensor to_field(const SparseTensor& t, Field field) {
  return SparseTensor(t.shape(), to_field(t.entries(), field));
}

SparseTensor::SparseTensor(Shape shape, SparseVec entries) : shape_(std::move(shape)) {
  const auto size = shape_size(shape_);
  VecBuilder b;
  for (auto& [i, v] : entries) {
    if (i >= size) throw ShapeError("flat index out of range for shape " + shape_str(shape_));
    b.add(i, v);
  }
  entries_ = std::move(b).build();
}

SparseTensor::SparseTensor(Shape shape, const std::vector<std::pair<MultiIndex, Scalar>>& entries)
    : shape_(std::move(shape)) {
  VecBuilder b;
  for (const auto& [idx, v] : entries) b.add(flatten(shape_, idx), v);
  entries_ = std::move(b).build();
}

SparseTensor SparseTensor::basis(Shape shape, const MultiIndex& index) {
  SparseTensor t(std::move(shape));
  t.entries_.emplace_back(flatten(t.shape_, index), Scalar(1));
  return t;
}

SparseTensor SparseTensor::scalar(const Scalar& value) {
  SparseTensor t{Shape{}};
  if (!value.is_zero()) t.entries_.emplace_back(0, value);
  return t;
}

Scalar SparseTensor::at_flat(std::uint64_t flat) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), flat,
                             [](const auto& e, std::uint64_t f) { return e.first < f; });
  if (it != entries_.end() && it->first == flat) return it->second;
  return Scalar(0);
}

Scalar SparseTensor::at(const MultiIndex& index) const { return at_flat(flatten(shape_, index)); }

SparseTensor SparseTensor::operator-() const {
  SparseTensor t(shape_);
  t.entries_ = scale(entries_, Scalar(-1));
  return t;
}

SparseTensor operator+(const SparseTensor& a, const SparseTensor& b) {
  if (a.shape_ != b.shape_) {
    throw ShapeError("adding tensors of shapes " + shape_str(a.shape_) + " and " +
                     shape_str(b.shape_));
  }
  SparseTensor t(a.shape_);
  t.entries_ = add(a.entries_, b.entries_);
  return t;
}

SparseTensor operator-(const SparseTensor& a, const SparseTensor& b) { return a + (-b); }

SparseTensor operator*(const Scalar& s, const SparseTensor& t) {
  SparseTensor out(t.shape_);
  out.entries_ = scale(t.entries_, s);
  return out;
}

bool operator==(const SparseTensor& a, const SparseTensor& b) {
  return a.shape_ == b.shape_ && a.entries_ == b.entries_;
}

SparseTensor outer(const SparseTensor& a, const SparseTensor& b) {
  Shape shape = a.shape_;
  shape.insert(shape.end(), b.shape_.begin(), b.shape_.end());
  const auto bsize = shape_size(b.shape_);
  SparseTensor t(std::move(shape));
  t.entries_.reserve(a.nnz() * b.nnz());
  for (const auto& [i, x] : a.entries_) {
    for (const auto& [j, y] : b.entries_) t.entries_.emplace_back(i * bsize + j, x * y);
  }
  return t;
}

SparseTensor tensor_contract(const SparseTensor& a, const SparseTensor& b,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<bool> a_paired(a.rank(), false);
  std::vector<bool> b_paired(b.rank(), false);
  for (auto [la, lb] : pairs) {
    if (la >= a.rank() || lb >= b.rank()) throw ShapeError("contraction leg out of range");
    if (a_paired[la] || b_paired[lb]) throw ShapeError("contraction leg paired twice");
    if (a.shape()[la] != b.shape()[lb]) {
      throw ShapeError("contracting legs of dimension " + std::to_string(a.shape()[la]) +
                       " and " + std::to_string(b.shape()[lb]));
    }
    a_paired[la] = true;
    b_paired[lb] = true;
  }
  Shape a_free_shape;
  Shape b_free_shape;
  std::vector<std::size_t> a_free;
  std::vector<std::size_t> b_free;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (!a_paired[k]) {
      a_free.push_back(k);
      a_free_shape.push_back(a.shape()[k]);
    }
  }
  for (std::size_t k = 0; k < b.rank(); ++k) {
    if (!b_paired[k]) {
      b_free.push_back(k);
      b_free_shape.push_back(b.shape()[k]);
    }
  }
  Shape key_shape;
  for (auto [la, lb] : pairs) key_shape.push_back(a.shape()[la]);

  auto split = [&](const Shape& shape, std::uint64_t flat, bool is_a) {
    MultiIndex idx = unflatten(shape, flat);
    MultiIndex key;
    MultiIndex rest;
    for (auto [la, lb] : pairs) key.push_back(idx[is_a ? la : lb]);
    for (auto k : is_a ? a_free : b_free) rest.push_back(idx[k]);
    return std::pair{flatten(key_shape, key), flatten(is_a ? a_free_shape : b_free_shape, rest)};
  };

  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Scalar*>>> by_key;
  for (const auto& [flat, v] : b.entries()) {
    auto [key, rest] = split(b.shape(), flat, false);
    by_key[key].emplace_back(rest, &v);
  }
  const auto b_free_size = shape_size(b_free_shape);
  VecBuilder out;
  for (const auto& [flat, v] : a.entries()) {
    auto [key, rest] = split(a.shape(), flat, true);
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    for (const auto& [b_rest, bv] : it->second) out.add(rest * b_free_size + b_rest, v * *bv);
  }
  Shape shape = a_free_shape;
  shape.insert(shape.end(), b_free_shape.begin(), b_free_shape.end());
  return SparseTensor(std::move(shape), std::move(out).build());
}

SparseTensor tensor_permute(const SparseTensor& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.rank()) throw InputError("permutation length does not match tensor rank");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("leg permutation is not a bijection");
    seen[p] = true;
  }
  Shape shape(a.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) shape[perm[k]] = a.shape()[k];
  VecBuilder out;
  MultiIndex target(a.rank());
  for (const auto& [flat, v] : a.entries()) {
    MultiIndex idx = unflatten(a.shape(), flat);
    for (std::size_t k = 0; k < idx.size(); ++k) target[perm[k]] = idx[k];
    out.add(flatten(shape, target), v);
  }
  return SparseTensor(std::move(shape), std::move(out).build());
}

LinearMap::LinearMap(Shape domain, Shape codomain, std::vector<SparseVec> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(std::move(columns)) {
  if (columns_.size() != shape_size(domain_)) {
    throw ShapeError("linear map has " + std::to_string(columns_.size()) +
                     " columns for domain " + shape_str(domain_));
  }
  const auto rows = shape_size(codomain_);
  for (const auto& col : columns_) {
    for (const auto& [i, v] : col) {
      if (i >= rows) throw ShapeError("linear map entry outside codomain " + shape_str(codomain_));
    }
  }
}

LinearMap LinearMap::identity(const Shape& shape) {
  std::vector<SparseVec> cols(shape_size(shape));
  for (std::uint64_t j = 0; j < cols.size(); ++j) cols[j].emplace_back(j, Scalar(1));
  return LinearMap(shape, shape, std::move(cols));
}

LinearMap LinearMap::zero(const Shape& domain, const Shape& codomain) {
  return LinearMap(domain, codomain, std::vector<SparseVec>(shape_size(domain)));
}

LinearMap LinearMap::from_tensor(const SparseTensor& coefficients, std::size_t codomain_rank) {
  if (codomain_rank > coefficients.rank()) throw ShapeError("codomain rank exceeds tensor rank");
  Shape codomain(coefficients.shape().begin(), coefficients.shape().begin() + codomain_rank);
  Shape domain(coefficients.shape().begin() + codomain_rank, coefficients.shape().end());
  const auto dsize = shape_size(domain);
  std::vector<SparseVec> cols(dsize);
  for (const auto& [flat, v] : coefficients.entries()) {
    cols[flat % dsize].emplace_back(flat / dsize, v);
  }
  return LinearMap(std::move(domain), std::move(codomain), std::move(cols));
}

LinearMap LinearMap::permutation(const Shape& domain, std::span<const std::size_t> perm) {
  if (perm.size() != domain.size()) throw InputError("permutation length does not match shape");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("leg permutation is not a bijection");
    seen[p] = true;
  }
  Shape codomain(domain.size());
  for (std::size_t k = 0; k < domain.size(); ++k) codomain[perm[k]] = domain[k];
  std::vector<SparseVec> cols(shape_size(domain));
  MultiIndex target(domain.size());
  for (std::uint64_t j = 0; j < cols.size(); ++j) {
    MultiIndex idx = unflatten(domain, j);
    for (std::size_t k = 0; k < idx.size(); ++k) target[perm[k]] = idx[k];
    cols[j].emplace_back(flatten(codomain, target), Scalar(1));
  }
  return LinearMap(domain, std::move(codomain), std::move(cols));
}

SparseTensor LinearMap::to_tensor() const {
  Shape shape = codomain_;
  shape.insert(shape.end(), domain_.begin(), domain_.end());
  const auto dsize = columns_.size();
  VecBuilder b;
  for (std::uint64_t j = 0; j < dsize; ++j) {
    for (const auto& [i, v] : columns_[j]) b.add(i * dsize + j, v);
  }
  return SparseTensor(std::move(shape), std::move(b).build());
}

SparseVec LinearMap::apply(const SparseVec& x) const {
  VecBuilder b;
  for (const auto& [j, v] : x) b.add_scaled(columns_.at(j), v);
  return std::move(b).build();
}

SparseTensor LinearMap::apply(const SparseTensor& x) const {
  if (x.shape() != domain_) {
    throw ShapeError("applying map with domain " + shape_str(domain_) + " to tensor of shape " +
                     shape_str(x.shape()));
  }
  return SparseTensor(codomain_, apply(x.entries()));
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (inner.codomain_ != domain_) {
    throw ShapeError("composing map with domain " + shape_str(domain_) +
                     " after map with codomain " + shape_str(inner.codomain_));
  }
  std::vector<SparseVec> cols;
  cols.reserve(inner.columns_.size());
  for (const auto& col : inner.columns_) cols.push_back(apply(col));
  return LinearMap(inner.domain_, codomain_, std::move(cols));
}

LinearMap LinearMap::transpose() const {
  std::vector<VecBuilder> rows(codomain_size());
  for (std::uint64_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j]) rows[i].add(j, v);
  }
  std::vector<SparseVec> cols;
  cols.reserve(rows.size());
  for (auto& r : rows) cols.push_back(std::move(r).build());
  return LinearMap(codomain_, domain_, std::move(cols));
}

LinearMap tensor_product(const LinearMap& a, const LinearMap& b) {
  Shape domain = a.domain_;
  domain.insert(domain.end(), b.domain_.begin(), b.domain_.end());
  Shape codomain = a.codomain_;
  codomain.insert(codomain.end(), b.codomain_.begin(), b.codomain_.end());
  const auto b_rows = b.codomain_size();
  std::vector<SparseVec> cols;
  cols.reserve(a.columns_.size() * b.columns_.size());
  for (const auto& ca : a.columns_) {
    for (const auto& cb : b.columns_) {
      SparseVec col;
      col.reserve(ca.size() * cb.size());
      for (const auto& [i, x] : ca) {
        for (const auto& [k, y] : cb) col.emplace_back(i * b_rows + k, x * y);
      }
      cols.push_back(std::move(col));
    }
  }
  return LinearMap(std::move(domain), std::move(codomain), std::move(cols));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_) {
    throw ShapeError("adding linear maps of different shapes");
  }
  std::vector<SparseVec> cols;
  cols.reserve(a.columns_.size());
  for (std::size_t j = 0; j < a.columns_.size(); ++j) cols.push_back(add(a.columns_[j], b.columns_[j]));
  return LinearMap(a.domain_, a.codomain_, std::move(cols));
}

LinearMap operator*(const Scalar& s, const LinearMap& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.columns_.size());
  for (const auto& c : m.columns_) cols.push_back(scale(c, s));
  return LinearMap(m.domain_, m.codomain_, std::move(cols));
}

LinearMap LinearMap::to_field(Field field) const {
  std::vector<SparseVec> cols;
  cols.reserve(columns_.size());
  for (const auto& c : columns_) cols.push_back(hopfkit::to_field(c, field));
  return LinearMap(domain_, codomain_, std::move(cols));
}

}  // namespace hopfkit
