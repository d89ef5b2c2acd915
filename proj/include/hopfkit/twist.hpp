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
#include <span>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Invertible, counital chi in H (x) H with
/// chi_12 (Delta (x) id)(chi) = chi_23 (id (x) Delta)(chi).
struct Cocycle {
  HopfAlgebra host;
  SparseTensor element;
  SparseTensor inverse;
};

/// R in H (x) H with (Delta (x) id)R = R_13 R_23, (id (x) Delta)R = R_13 R_12
/// and R Delta(h) = Delta^cop(h) R.
struct QuasitriangularStructure {
  HopfAlgebra host;
  SparseTensor r;
  SparseTensor r_inverse;
};

/// One named identity with its first differing coefficient.
struct ConditionResult {
  std::string name;
  bool passed = true;
  std::optional<MultiIndex> witness;
  SparseTensor lhs;
  SparseTensor rhs;
};

/// Compares two tensors of equal shape; the witness is the multi-index of
/// the first differing coefficient.
ConditionResult compare_condition(std::string name, SparseTensor lhs, SparseTensor rhs);

struct CocycleVerification {
  std::optional<Cocycle> cocycle;
  bool no_inverse = false;
  std::vector<ConditionResult> conditions;  // invertible, counit_left, counit_right, cocycle_identity

  bool passed() const { return cocycle.has_value(); }
  /// First failing condition, or nullptr.
  const ConditionResult* failure() const;
};

struct QuasitriangularVerification {
  std::optional<QuasitriangularStructure> structure;
  bool no_inverse = false;
  // invertible, coproduct_left, coproduct_right, intertwining
  std::vector<ConditionResult> conditions;

  bool passed() const { return structure.has_value(); }
  const ConditionResult* failure() const;
};

/// Places the legs of `t` at `positions` of H^(x)legs, with the unit of h
/// in every other leg. R_13 is embed_legs(h, r, 3, {0, 2}).
SparseTensor embed_legs(const HopfAlgebra& h, const SparseTensor& t, std::size_t legs,
                        std::span<const std::size_t> positions);

/// Two-sided inverse of u in the algebra H^(x)k, or nullopt when u is singular.
std::optional<SparseTensor> invert_tensor_element(const HopfAlgebra& h, const SparseTensor& u);

CocycleVerification verify_cocycle(const HopfAlgebra& host, const SparseTensor& chi);

/// H_chi: the algebra of the host with Delta_chi(h) = chi Delta(h) chi^-1 and
/// S_chi(h) = U S(h) U^-1, U = chi^(1) S(chi^(2)).
HopfAlgebra twist_hopf(const Cocycle& c);

QuasitriangularVerification verify_quasitriangular(const HopfAlgebra& host, const SparseTensor& r);

/// R placed in the middle legs of (H0 (x) H0) (x) (H0 (x) H0), as a cocycle
/// on tensor_hopf(H0, H0).
CocycleVerification r_as_cocycle(const QuasitriangularStructure& q);

/// Characters of a finite abelian group with values in `field`. Characters
/// are listed by their values on `generators` (greedy: each generator is the
/// first element outside the subgroup generated so far), the first
/// generator varying slowest; each value runs over the roots of unity in
/// the order 1, z, z^2, ... for a fixed primitive root z.
struct CharacterTable {
  std::vector<std::size_t> generators;
  std::vector<Scalar> roots;                // roots of unity of order dividing |G|
  std::vector<std::vector<Scalar>> values;  // values[character][group element]
};

/// Throws InputError for a non-abelian table and CapabilityError when the
/// field lacks the roots of unity needed for a full character group.
CharacterTable characters(const std::vector<std::vector<std::size_t>>& table, Field field);

/// chi = sum over characters phi, psi of omega[phi][psi] e_phi (x) e_psi on the
/// group algebra (converted into `field`). omega is indexed like
/// characters(table, field).values and must be multiplicative in each
/// argument; otherwise InputError.
CocycleVerification bicharacter_cocycle(const std::vector<std::vector<std::size_t>>& table,
                                        const std::vector<std::vector<Scalar>>& omega,
                                        Field field = Field::rationals(),
                                        std::vector<std::string> labels = {});

}  // namespace hopfkit
