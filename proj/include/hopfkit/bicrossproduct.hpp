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
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/twist.hpp"

namespace hopfkit {

enum class Construction { mirror, twisted_mirror, mbar };

std::string to_string(Construction c);
/// Accepts "mirror", "twisted_mirror" (or "mirror-twisted") and "mbar".
Construction parse_construction(const std::string& text);

/// Ingredients of a cocycle bicrossproduct h_part |><| a_part.
///
///   action        a <| h          map [da, dh] -> [da]
///   coaction      beta(h)         map [dh] -> [da, dh]
///   dual_cocycle  psi(h)          map [dh] -> [da, da]
///
/// Both parts live on the basis of the base algebra H.
struct CrossData {
  Construction kind = Construction::mirror;
  HopfAlgebra base;
  std::optional<Cocycle> cocycle;
  HopfAlgebra h_part;
  HopfAlgebra a_part;
  LinearMap action;
  LinearMap coaction;
  LinearMap dual_cocycle;
};

/// H^op acting on H by h1 a S(h2), beta(h) = h1 S(h3) (x) h2, psi trivial.
CrossData mirror_data(const HopfAlgebra& h);

/// Same action and coaction with a_part = H_chi and
/// psi(h) = h1 X1 S(h4) Xi1 (x) h2 X2 S(h3) Xi2.
CrossData twisted_mirror_data(const HopfAlgebra& h, const Cocycle& c);

/// H acting on H by S(h1) a h2, beta(h) = S(h1) h3 (x) h2,
/// psi(h) = S(h1) h3 (x) S(h2) h4.
CrossData mbar_data(const HopfAlgebra& h);

/// Module algebra, unit, coaction counit and psi counit conditions, each
/// checked on every basis element.
std::vector<ConditionResult> check_cross_data(const CrossData& data);

/// Both assemblies of the total Hopf algebra on h_part (x) a_part
/// (basis (h, a) -> h * da + a) and the checks that tie them together.
struct Bicrossproduct {
  CrossData data;
  /// Tensor Hopf algebra h_part (x) a_part, the domain of theta.
  HopfAlgebra source;
  /// Structure transported through theta. This is the canonical total.
  HopfAlgebra total;
  /// Structure from the explicit cross product and coproduct formulas,
  /// antipode by convolution inversion.
  HopfAlgebra explicit_total;
  LinearMap theta;
  LinearMap theta_inverse;
  /// Path agreement, closed forms of theta^-1, the displayed coproduct
  /// formula, the coalgebra identity for theta and the cross data
  /// invariants.
  std::vector<ConditionResult> checks;

  bool consistent() const;
  const ConditionResult* failure() const;
};

/// Throws InputError when theta is singular (the data did not come from a
/// Hopf algebra with bijective antipode).
Bicrossproduct assemble(const CrossData& data);

struct ExtensionReport {
  HopfMorphismReport iota;  // a |-> 1 (x) a, a_part -> total
  HopfMorphismReport pi;    // h (x) a |-> eps(a) h, total -> h_part
  bool composite_is_trivial = false;  // pi o iota = unit o counit

  bool passed() const {
    return iota.is_hopf_morphism() && iota.is_injective && pi.is_hopf_morphism() && pi.is_surjective &&
           composite_is_trivial;
  }
};

ExtensionReport check_extension(const Bicrossproduct& b);

/// Compares M_R(H) (a_part H_R) with Mbar(H^cop) through S (x) id, the map
/// induced by the antipode H^op -> H^cop. The through_theta entry checks the
/// composite thetabar o (S (x) id) o theta^-1, which routes the same map
/// through the two tensor sources.
struct CoincidenceReport {
  Bicrossproduct twisted;
  Bicrossproduct mbar;
  LinearMap comparison;
  HopfMorphismReport direct;
  HopfMorphismReport through_theta;

  bool coincides() const { return direct.is_isomorphism(); }
};

CoincidenceReport quasitriangular_coincidence(const HopfAlgebra& h, const QuasitriangularStructure& q);

}  // namespace hopfkit
