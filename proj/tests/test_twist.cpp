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

#include "hopfkit/errors.hpp"
#include "hopfkit/twist.hpp"
#include "support.hpp"

using namespace hopfkit;

namespace {

std::vector<std::vector<Scalar>> klein_omega() {
  // Characters are indexed 2s + t with phi(1) = (-1)^s, phi(2) = (-1)^t.
  std::vector<std::vector<Scalar>> w(4, std::vector<Scalar>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) w[a][b] = ((a & 1) * (b >> 1)) % 2 == 0 ? Scalar(1) : Scalar(-1);
  return w;
}

Cocycle klein_cocycle() {
  auto v = bicharacter_cocycle(testing::klein_table(), klein_omega());
  REQUIRE(v.passed());
  return *v.cocycle;
}

SparseTensor tensor2(std::size_t d, std::vector<std::pair<MultiIndex, Scalar>> e) {
  return SparseTensor({d, d}, e);
}

}  // namespace

TEST_SUITE("twist") {
  TEST_CASE("embedding legs") {
    const auto h = sweedler_h4();
    const auto t = tensor2(4, {{{2, 3}, Scalar(5)}});
    const std::array<std::size_t, 2> pos{2, 0};
    CHECK(embed_legs(h, t, 3, pos) == SparseTensor({4, 4, 4}, {{{3, 0, 2}, Scalar(5)}}));
  }

  TEST_CASE("inverting tensor elements") {
    const auto z2 = group_algebra(testing::cyclic_table(2));
    CHECK(*invert_tensor_element(z2, unit_power(z2, 2)) == unit_power(z2, 2));
    const auto gg = tensor2(2, {{{1, 1}, Scalar(1)}});
    CHECK(*invert_tensor_element(z2, gg) == gg);
    // 1 (x) 1 + g (x) g squares to 2(1 (x) 1 + g (x) g): a multiple of an idempotent.
    CHECK_FALSE(invert_tensor_element(z2, unit_power(z2, 2) + gg));

    const auto chi = klein_cocycle();
    const auto k4 = chi.host;
    CHECK(testing::dense_multiply2(k4, chi.element, chi.inverse) == unit_power(k4, 2));
    CHECK(testing::dense_multiply2(k4, chi.inverse, chi.element) == unit_power(k4, 2));
    CHECK_THROWS_AS(invert_tensor_element(z2, SparseTensor::scalar(Scalar(2))), InputError);
  }

  TEST_CASE("cocycle verification") {
    const auto z2 = group_algebra(testing::cyclic_table(2));
    auto trivial = verify_cocycle(z2, unit_power(z2, 2));
    REQUIRE(trivial.passed());
    CHECK(trivial.cocycle->inverse == unit_power(z2, 2));

    const auto bad = unit_power(z2, 2) + tensor2(2, {{{1, 1}, Scalar(1)}});
    auto v = verify_cocycle(z2, bad);
    CHECK_FALSE(v.passed());
    CHECK(v.no_inverse);
    const auto& left = v.conditions[1];
    CHECK(left.name == "counit_left");
    CHECK_FALSE(left.passed);
    CHECK(left.lhs == SparseTensor({2}, SparseVec{{0, Scalar(1)}, {1, Scalar(1)}}));

    // Invertible and counital but not a cocycle: 1 (x) 1 plus a nilpotent x (x) x.
    const auto h4 = sweedler_h4();
    auto nc = verify_cocycle(h4, unit_power(h4, 2) + tensor2(4, {{{2, 2}, Scalar(1)}}));
    CHECK_FALSE(nc.no_inverse);
    REQUIRE(nc.failure());
    CHECK(nc.failure()->name == "cocycle_identity");
    CHECK(nc.failure()->witness);
    CHECK_THROWS_AS(verify_cocycle(h4, unit_power(h4, 3)), ShapeError);
  }

  TEST_CASE("bicharacter cocycles") {
    const auto chars = characters(testing::klein_table(), Field::rationals());
    CHECK(chars.generators == std::vector<std::size_t>{1, 2});
    const auto chi = klein_cocycle();
    CHECK(chi.element == testing::klein_bicharacter());

    std::vector<std::vector<Scalar>> ones(4, std::vector<Scalar>(4, Scalar(1)));
    auto trivial = bicharacter_cocycle(testing::klein_table(), ones);
    REQUIRE(trivial.passed());
    CHECK(trivial.cocycle->element == unit_power(trivial.cocycle->host, 2));

    auto not_bichar = ones;
    not_bichar[1][1] = Scalar(-1);
    CHECK_THROWS_AS(bicharacter_cocycle(testing::klein_table(), not_bichar), InputError);
    CHECK_THROWS_AS(characters(testing::s3_table(), Field::rationals()), InputError);
    CHECK_THROWS_AS(characters(testing::cyclic_table(3), Field::rationals()), CapabilityError);
  }

  TEST_CASE("cube roots of unity over F_7") {
    const Field f7 = Field::prime_field(7);
    const auto chars = characters(testing::cyclic_table(3), f7);
    REQUIRE(chars.roots.size() == 3);
    const Scalar z = chars.roots[1];
    CHECK((z * z * z).is_one());
    CHECK_FALSE(z.is_one());
    std::vector<std::vector<Scalar>> omega(3, std::vector<Scalar>(3));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) omega[a][b] = chars.roots[(a * b) % 3];
    auto v = bicharacter_cocycle(testing::cyclic_table(3), omega, f7);
    REQUIRE(v.passed());
    CHECK(v.cocycle->element != unit_power(v.cocycle->host, 2));
    CHECK(v.cocycle->element.entries().front().second.prime() == 7);
    CHECK(validate_hopf(twist_hopf(*v.cocycle)).passed());
  }

  TEST_CASE("twisting") {
    const auto h4 = sweedler_h4();
    auto trivial = verify_cocycle(h4, unit_power(h4, 2));
    CHECK(twist_hopf(*trivial.cocycle) == h4);

    const auto chi = klein_cocycle();
    const auto twisted = twist_hopf(chi);
    CHECK(validate_hopf(twisted).passed());
    // Commutative host: conjugation by chi leaves the coproduct alone.
    const std::array<std::size_t, 2> flip{1, 0};
    CHECK(twisted.comult() == LinearMap::permutation({4, 4}, flip).after(twisted.comult()));
    CHECK(twisted.comult() == chi.host.comult());

    // Untwisting returns the host exactly.
    auto back = verify_cocycle(twisted, chi.inverse);
    REQUIRE(back.passed());
    CHECK(twist_hopf(*back.cocycle) == chi.host);
  }

  TEST_CASE("twisting by an R-matrix gives the co-opposite coproduct") {
    const auto h4 = sweedler_h4();
    auto q = verify_quasitriangular(h4, testing::h4_r0());
    REQUIRE(q.passed());
    auto c = verify_cocycle(h4, q.structure->r);
    REQUIRE(c.passed());
    const auto twisted = twist_hopf(*c.cocycle);
    CHECK(validate_hopf(twisted).passed());
    const std::array<std::size_t, 2> flip{1, 0};
    CHECK(twisted.comult() == LinearMap::permutation({4, 4}, flip).after(h4.comult()));
    CHECK(twisted == structural_variant(h4, Variant::cop));

    auto back = verify_cocycle(twisted, c.cocycle->inverse);
    REQUIRE(back.passed());
    CHECK(twist_hopf(*back.cocycle) == h4);
  }

  TEST_CASE("quasitriangular structures") {
    const auto z2 = group_algebra(testing::cyclic_table(2));
    CHECK(verify_quasitriangular(z2, unit_power(z2, 2)).passed());
    auto bad = verify_quasitriangular(z2, tensor2(2, {{{1, 1}, Scalar(1)}}));
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.failure());
    CHECK(bad.failure()->name == "coproduct_left");
    CHECK(bad.failure()->witness);
    CHECK(bad.failure()->lhs != bad.failure()->rhs);

    const auto h4 = sweedler_h4();
    auto non_r = verify_quasitriangular(h4, unit_power(h4, 2));
    REQUIRE(non_r.failure());
    CHECK(non_r.failure()->name == "intertwining");
    CHECK(*non_r.failure()->witness == MultiIndex{2});
  }

  TEST_CASE("R as a cocycle on the tensor square") {
    const auto h4 = sweedler_h4();
    auto q = verify_quasitriangular(h4, testing::h4_r0());
    REQUIRE(q.passed());
    auto c = r_as_cocycle(*q.structure);
    REQUIRE(c.passed());
    CHECK(c.cocycle->host.dim() == 16);
    // 1 (x) R1 (x) R2 (x) 1 with basis (i, j) -> 4i + j in each factor.
    const auto r = testing::h4_r0();
    std::vector<std::pair<MultiIndex, Scalar>> expected;
    for (const auto& [flat, v] : r.entries()) expected.push_back({{flat / 4, (flat % 4) * 4}, v});
    CHECK(c.cocycle->element == SparseTensor({16, 16}, expected));

    auto trivial_q = verify_quasitriangular(group_algebra(testing::cyclic_table(2)),
                                            unit_power(group_algebra(testing::cyclic_table(2)), 2));
    auto tc = r_as_cocycle(*trivial_q.structure);
    REQUIRE(tc.passed());
    CHECK(tc.cocycle->element == unit_power(tc.cocycle->host, 2));
  }

  TEST_CASE("verified cocycles twist into Hopf algebras") {
    const auto h4 = sweedler_h4();
    for (const auto& chi : {klein_cocycle(), *verify_cocycle(h4, testing::h4_r0()).cocycle}) {
      CHECK(validate_hopf(twist_hopf(chi)).passed());
    }
  }
}
