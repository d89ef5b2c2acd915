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

#include <doctest.h>

#include <array>
#include <random>

#include "hopfkit/errors.hpp"
#include "hopfkit/linsolve.hpp"
#include "support.hpp"

using namespace hopfkit;

TEST_SUITE("scalar") {
  TEST_CASE("rational arithmetic") {
    CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
    CHECK(Scalar(2, -4) == Scalar(-1, 2));
    CHECK(Scalar(3, 4).inverse() == Scalar(4, 3));
    CHECK(Scalar::parse("-6/4").str() == "-3/2");
    CHECK(Scalar::parse("7").str() == "7");
    CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse("x"), InputError);
    CHECK_THROWS_AS(Scalar(0).inverse(), InputError);
  }

  TEST_CASE("prime fields") {
    const Field f7 = Field::prime_field(7);
    CHECK(Scalar::parse("1/2", f7) == Scalar::residue(4, 7));
    CHECK(Scalar::parse("-1", f7).str() == "6");
    CHECK((Scalar::residue(3, 7) * Scalar(5)).str() == "1");
    CHECK(Scalar::residue(3, 7) * Scalar(5) == Scalar(1));
    CHECK_THROWS_AS(Scalar::residue(1, 7) + Scalar::residue(1, 11), InputError);
    CHECK_THROWS_AS(Scalar(1, 7).to_field(f7), CapabilityError);
    CHECK_THROWS_AS(Field::prime_field(9), InputError);
    CHECK(Field::parse("fp:13").prime == 13);
    CHECK(Field::parse("q").is_rational());
    CHECK_THROWS_AS(Field::parse("r"), InputError);
    CHECK(is_prime(4611686018427387847ULL));  // largest prime below 2^62
    CHECK_FALSE(is_prime(4611686018427387849ULL));
  }
}

TEST_SUITE("tensor") {
  TEST_CASE("flattening is row-major") {
    const Shape s{2, 3, 4};
    CHECK(flatten(s, MultiIndex{1, 2, 3}) == 23);
    CHECK(unflatten(s, 23) == MultiIndex{1, 2, 3});
    CHECK_THROWS_AS(flatten(s, MultiIndex{0, 3, 0}), ShapeError);
  }

  TEST_CASE("sparse storage drops zeros") {
    SparseTensor a({2, 2}, {{{0, 1}, Scalar(1)}, {{0, 1}, Scalar(-1)}, {{1, 1}, Scalar(2)}});
    CHECK(a.nnz() == 1);
    CHECK((a - a).is_zero());
    CHECK(a.at({1, 1}) == Scalar(2));
  }

  TEST_CASE("contraction agrees with the dense oracle on random instances") {
    std::mt19937_64 rng(20260214);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 3), dim_dist(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      Shape sa(rank_dist(rng)), sb(rank_dist(rng));
      for (auto& d : sa) d = dim_dist(rng);
      for (auto& d : sb) d = dim_dist(rng);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::uniform_int_distribution<std::size_t> npairs(0, std::min(sa.size(), sb.size()));
      const std::size_t k = npairs(rng);
      std::vector<std::size_t> la(sa.size()), lb(sb.size());
      for (std::size_t i = 0; i < la.size(); ++i) la[i] = i;
      for (std::size_t i = 0; i < lb.size(); ++i) lb[i] = i;
      std::shuffle(la.begin(), la.end(), rng);
      std::shuffle(lb.begin(), lb.end(), rng);
      for (std::size_t p = 0; p < k; ++p) {
        sb[lb[p]] = sa[la[p]];
        pairs.emplace_back(la[p], lb[p]);
      }
      const auto a = testing::random_tensor(rng, sa);
      const auto b = testing::random_tensor(rng, sb);
      CHECK(tensor_contract(a, b, pairs) == testing::dense_contract(a, b, pairs));
    }
  }

  TEST_CASE("contraction errors") {
    const SparseTensor a({2, 3}), b({4});
    const std::array<std::pair<std::size_t, std::size_t>, 1> bad{{{0, 0}}};
    CHECK_THROWS_AS(tensor_contract(a, b, bad), ShapeError);
  }

  TEST_CASE("permutation") {
    const SparseTensor a({2, 3, 4}, {{{1, 2, 3}, Scalar(7)}});
    const std::array<std::size_t, 3> perm{2, 0, 1};
    CHECK(tensor_permute(a, perm) == SparseTensor({3, 4, 2}, {{{2, 3, 1}, Scalar(7)}}));
    const std::array<std::size_t, 3> not_bijective{0, 0, 1};
    CHECK_THROWS_AS(tensor_permute(a, not_bijective), InputError);
    const auto m = LinearMap::permutation({2, 3, 4}, perm);
    CHECK(m.apply(a) == tensor_permute(a, perm));
  }

  TEST_CASE("linear maps") {
    std::mt19937_64 rng(7);
    const auto ta = testing::random_tensor(rng, {3, 2}, 0.6);
    const auto tb = testing::random_tensor(rng, {2, 4}, 0.6);
    const auto a = LinearMap::from_tensor(ta, 1);
    const auto b = LinearMap::from_tensor(tb, 1);
    const std::array<std::pair<std::size_t, std::size_t>, 1> inner{{{1, 0}}};
    CHECK(a.after(b).to_tensor() == tensor_contract(ta, tb, inner));
    CHECK(a.transpose().transpose() == a);
    const auto x = testing::random_tensor(rng, {4, 3}, 0.8);
    // (b (x) a^T) applied legwise.
    const auto prod = tensor_product(b, a.transpose());
    std::vector<std::pair<MultiIndex, Scalar>> expected;
    for (const auto& [f, v] : x.entries()) {
      const MultiIndex i = unflatten(x.shape(), f);
      const auto bi = b.column(i[0]);
      const auto ai = a.transpose().column(i[1]);
      for (const auto& [p, u] : bi)
        for (const auto& [q, w] : ai) expected.push_back({{p, q}, v * u * w});
    }
    CHECK(prod.apply(x) == SparseTensor({2, 2}, expected));
    CHECK_THROWS_AS(a.after(a), ShapeError);
  }
}

TEST_SUITE("linsolve") {
  TEST_CASE("solutions match Cramer's rule") {
    std::mt19937_64 rng(99);
    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const auto t = testing::random_tensor(rng, {n, n}, 0.6);
      const auto rhs = testing::random_tensor(rng, {n}, 0.7);
      std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = t.at({i, j});
      const Scalar det = testing::determinant(m);
      const auto map = LinearMap::from_tensor(t, 1);
      auto sol = solve_linear(map, rhs);
      if (det.is_zero()) {
        CHECK(rank(map) < n);
        if (sol) CHECK_FALSE(sol->unique);
        if (sol) CHECK(map.apply(sol->value) == rhs);
        continue;
      }
      ++solved;
      REQUIRE(sol);
      CHECK(sol->unique);
      CHECK(rank(map) == n);
      for (std::size_t i = 0; i < n; ++i) {
        auto mi = m;
        for (std::size_t r = 0; r < n; ++r) mi[r][i] = rhs.at({r});
        CHECK(sol->value.at({i}) == testing::determinant(mi) / det);
      }
      auto inv = inverse(map);
      REQUIRE(inv);
      CHECK(inv->after(map) == LinearMap::identity({n}));
      CHECK(map.after(*inv) == LinearMap::identity({n}));
    }
    CHECK(solved > 20);
  }

  TEST_CASE("inconsistent and underdetermined systems") {
    // [[1, 1], [2, 2]]
    const SparseTensor t({2, 2}, {{{0, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}, {{1, 0}, Scalar(2)}, {{1, 1}, Scalar(2)}});
    const auto map = LinearMap::from_tensor(t, 1);
    CHECK_FALSE(solve_linear(map, SparseTensor({2}, SparseVec{{0, Scalar(1)}})));
    auto sol = solve_linear(map, SparseTensor({2}, SparseVec{{0, Scalar(1)}, {1, Scalar(2)}}));
    REQUIRE(sol);
    CHECK_FALSE(sol->unique);
    CHECK(rank(map) == 1);
    CHECK_FALSE(inverse(map));
  }
}
