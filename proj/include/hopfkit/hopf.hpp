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
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/tensor.hpp"

namespace hopfkit {

/// Exhaustive checks refuse algebras above this dimension unless forced.
inline constexpr std::size_t kDefaultMaxDim = 64;

/// Finite-dimensional Hopf algebra given by structure constants on a
/// fixed basis e_0 ... e_{d-1}.
///
///   unit      vector of shape [d]
///   mult      map [d,d] -> [d]     (column i*d+j is e_i e_j)
///   comult    map [d]   -> [d,d]
///   counit    map [d]   -> []
///   antipode  map [d]   -> [d]
///
/// The constructor checks shapes only; the axioms are checked by
/// validate_hopf.
class HopfAlgebra {
 public:
  HopfAlgebra(std::vector<std::string> labels, SparseVec unit, LinearMap mult, LinearMap comult,
              LinearMap counit, LinearMap antipode);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& unit() const { return unit_; }
  SparseTensor unit_tensor() const { return SparseTensor(Shape{dim()}, unit_); }
  const LinearMap& mult() const { return mult_; }
  const LinearMap& comult() const { return comult_; }
  const LinearMap& counit() const { return counit_; }
  const LinearMap& antipode() const { return antipode_; }

  const SparseVec& product(std::size_t i, std::size_t j) const {
    return mult_.column(i * dim() + j);
  }
  const SparseVec& coproduct(std::size_t i) const { return comult_.column(i); }
  Scalar counit_of(std::size_t i) const;

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  Scalar counit_of(const SparseVec& a) const;

  /// Converts every structure constant into `field`.
  HopfAlgebra to_field(Field field) const;

  HopfAlgebra with_labels(std::vector<std::string> labels) const;
  HopfAlgebra with_antipode(LinearMap antipode) const;
  HopfAlgebra with_comult(LinearMap comult) const;
  HopfAlgebra with_mult(LinearMap mult) const;

  friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;

 private:
  std::vector<std::string> labels_;
  SparseVec unit_;
  LinearMap mult_;
  LinearMap comult_;
  LinearMap counit_;
  LinearMap antipode_;
};

/// Outcome of one axiom: the first failing basis index (row-major over the
/// axiom's arguments) with both evaluated sides, and every failing index.
struct AxiomResult {
  std::string name;
  bool passed = true;
  std::optional<MultiIndex> witness;
  SparseTensor lhs;
  SparseTensor rhs;
  std::vector<MultiIndex> failing;
};

struct HopfValidation {
  std::vector<AxiomResult> axioms;

  bool passed() const;
  const AxiomResult& axiom(const std::string& name) const;
};

/// Checks associativity, unit, coassociativity, counit, multiplicativity
/// and unitality of the coproduct and counit, and both antipode
/// identities, each exactly on every basis element.
HopfValidation validate_hopf(const HopfAlgebra& h, std::size_t max_dim = kDefaultMaxDim);

/// Group algebra of the group with multiplication table `table[a][b] = a*b`.
/// Throws InputError naming the failed group axiom.
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                          std::vector<std::string> labels = {});

/// Sweedler's four-dimensional algebra on the basis {1, g, x, gx}.
HopfAlgebra sweedler_h4();

enum class Variant { op, cop, op_cop };

/// H^op, H^cop or H^op,cop. The first two use the inverse antipode, so a
/// singular antipode raises CapabilityError.
HopfAlgebra structural_variant(const HopfAlgebra& h, Variant mode);

/// Dual Hopf algebra on the dual basis; every structure map is transposed.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// a (x) b with row-major basis (i, j) -> i * dim(b) + j.
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// Delta^(k): H -> H^(x)k, left-nested: (Delta (x) id...) o Delta^(k-1).
LinearMap iterated_coproduct(const HopfAlgebra& h, std::size_t k);

/// id^(x)at (x) f (x) id^(x)(legs-at-1) acting on H^(x)legs, f: H -> X.
LinearMap on_leg(const LinearMap& f, std::size_t dim, std::size_t legs, std::size_t at);

/// Product in the algebra H^(x)k (legwise), k = rank of the operands.
SparseTensor multiply_in_power(const HopfAlgebra& h, const SparseTensor& a,
                               const SparseTensor& b);

/// 1 (x) ... (x) 1 in H^(x)k.
SparseTensor unit_power(const HopfAlgebra& h, std::size_t k);

/// Convolution inverse of f: H -> A (coalgebra of `coalgebra`, algebra of
/// `algebra`), or nullopt when none exists.
std::optional<LinearMap> convolution_inverse(const LinearMap& f, const HopfAlgebra& coalgebra,
                                             const HopfAlgebra& algebra);

struct MorphismFailure {
  std::string check;
  MultiIndex index;
};

struct HopfMorphismReport {
  bool is_algebra_map = true;
  bool is_coalgebra_map = true;
  bool is_unit_counit_preserving = true;
  std::size_t rank = 0;
  bool is_injective = false;
  bool is_surjective = false;
  std::vector<MorphismFailure> failing_basis_indices;

  bool is_hopf_morphism() const {
    return is_algebra_map && is_coalgebra_map && is_unit_counit_preserving;
  }
  bool is_isomorphism() const { return is_hopf_morphism() && is_injective && is_surjective; }
};

HopfMorphismReport check_morphism(const LinearMap& f, const HopfAlgebra& src,
                                  const HopfAlgebra& dst);

}  // namespace hopfkit
