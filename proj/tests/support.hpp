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

// Hand-built fixtures and dense reference computations used as oracles.

#include <cstdint>
#include <random>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit::testing {

/// Z2 x Z2 as xor on {0,1,2,3}; element k has coordinates (k & 1, k >> 1).
inline std::vector<std::vector<std::size_t>> klein_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// S3 as permutations of {0,1,2}, listed in lexicographic order.
inline std::vector<std::vector<std::size_t>> s3_table() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int* p) {
    for (std::size_t k = 0; k < 6; ++k)
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
    return std::size_t{99};
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      int c[3];
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a o b
      t[a][b] = find(c);
    }
  }
  return t;
}

/// sum over characters phi, psi of (-1)^{t_phi s_psi} e_phi (x) e_psi, with
/// e_phi = 1/4 sum_k phi(k) k. Written out densely.
inline SparseTensor klein_bicharacter() {
  std::vector<std::pair<MultiIndex, Scalar>> entries;
  auto chi = [](int s, int t, std::size_t k) {
    const int i = static_cast<int>(k & 1), j = static_cast<int>(k >> 1);
    return ((s * i + t * j) % 2 == 0) ? 1 : -1;
  };
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Scalar c(0);
      for (int s1 = 0; s1 < 2; ++s1)
        for (int t1 = 0; t1 < 2; ++t1)
          for (int s2 = 0; s2 < 2; ++s2)
            for (int t2 = 0; t2 < 2; ++t2) {
              const int w = (t1 * s2) % 2 == 0 ? 1 : -1;
              c += Scalar(w * chi(s1, t1, a) * chi(s2, t2, b), 16);
            }
      if (!c.is_zero()) entries.push_back({{a, b}, c});
    }
  }
  return SparseTensor({4, 4}, entries);
}

/// 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) on the basis 1, g, x, gx.
inline SparseTensor h4_r0() {
  return SparseTensor({4, 4}, {{{0, 0}, Scalar(1, 2)},
                               {{0, 1}, Scalar(1, 2)},
                               {{1, 0}, Scalar(1, 2)},
                               {{1, 1}, Scalar(-1, 2)}});
}

/// Dense product in H^(x)2, looping over every coefficient.
inline SparseTensor dense_multiply2(const HopfAlgebra& h, const SparseTensor& a, const SparseTensor& b) {
  const std::size_t d = h.dim();
  std::vector<std::pair<MultiIndex, Scalar>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Scalar ca = a.at({i, j}), cb = b.at({k, l});
          if (ca.is_zero() || cb.is_zero()) continue;
          for (const auto& [p, v] : h.product(i, k))
            for (const auto& [q, w] : h.product(j, l)) out.push_back({{p, q}, ca * cb * v * w});
        }
  return SparseTensor({d, d}, out);
}

/// Right-nested iterated coproduct applied to a basis element, as a map to
/// H^(x)k (equal to the left-nested one by coassociativity).
inline SparseTensor right_nested_coproduct(const HopfAlgebra& h, std::size_t i, std::size_t k) {
  const std::size_t d = h.dim();
  if (k == 1) return SparseTensor::basis({d}, {i});
  Shape shape(k, d);
  std::vector<std::pair<MultiIndex, Scalar>> out;
  for (const auto& [flat, c] : h.coproduct(i)) {
    SparseTensor rest = right_nested_coproduct(h, flat % d, k - 1);
    for (const auto& [f2, c2] : rest.entries()) {
      MultiIndex idx = unflatten(rest.shape(), f2);
      idx.insert(idx.begin(), flat / d);
      out.push_back({idx, c * c2});
    }
  }
  return SparseTensor(shape, out);
}

/// Contraction by looping over every index of both operands.
inline SparseTensor dense_contract(const SparseTensor& a, const SparseTensor& b,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> a_paired(a.rank(), false), b_paired(b.rank(), false);
  for (auto [i, j] : pairs) a_paired[i] = b_paired[j] = true;
  Shape out_shape;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!a_paired[i]) out_shape.push_back(a.shape()[i]);
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (!b_paired[j]) out_shape.push_back(b.shape()[j]);
  std::vector<std::pair<MultiIndex, Scalar>> out;
  for (std::uint64_t fa = 0; fa < shape_size(a.shape()); ++fa) {
    const MultiIndex ia = unflatten(a.shape(), fa);
    for (std::uint64_t fb = 0; fb < shape_size(b.shape()); ++fb) {
      const MultiIndex ib = unflatten(b.shape(), fb);
      bool match = true;
      for (auto [i, j] : pairs) match = match && ia[i] == ib[j];
      if (!match) continue;
      MultiIndex idx;
      for (std::size_t i = 0; i < a.rank(); ++i)
        if (!a_paired[i]) idx.push_back(ia[i]);
      for (std::size_t j = 0; j < b.rank(); ++j)
        if (!b_paired[j]) idx.push_back(ib[j]);
      out.push_back({idx, a.at(ia) * b.at(ib)});
    }
  }
  return SparseTensor(out_shape, out);
}

/// Random sparse tensor with small rational entries.
inline SparseTensor random_tensor(std::mt19937_64& rng, const Shape& shape, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  VecBuilder b;
  for (std::uint64_t f = 0; f < shape_size(shape); ++f)
    if (keep(rng)) b.add(f, Scalar(num(rng), den(rng)));
  return SparseTensor(shape, std::move(b).build());
}

/// Determinant by cofactor expansion along the first row.
inline Scalar determinant(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  Scalar det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Scalar term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace hopfkit::testing
