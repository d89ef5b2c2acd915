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

#include "hopfkit/bicrossproduct.hpp"

#include "hopfkit/errors.hpp"
#include "hopfkit/linsolve.hpp"
#include "hopfkit/sweedler.hpp"

namespace hopfkit {
namespace {

using sweedler::Declarations;
using sweedler::EvaluationContext;

EvaluationContext context_for(const HopfAlgebra& h, const std::optional<Cocycle>& c) {
  EvaluationContext ctx(h);
  if (c) {
    ctx.bind("X", c->element, c->inverse);
  } else {
    ctx.bind("X", unit_power(h, 2), unit_power(h, 2));
  }
  return ctx;
}

LinearMap formula(const EvaluationContext& ctx, const char* decls, const char* text) {
  return sweedler::expression_map(sweedler::parse(text, Declarations::parse(decls)), ctx);
}

LinearMap reshape(const LinearMap& m, Shape domain, Shape codomain) {
  return LinearMap(std::move(domain), std::move(codomain), m.columns());
}

ConditionResult compare_maps(std::string name, const LinearMap& a, const LinearMap& b) {
  return compare_condition(std::move(name), a.to_tensor(), b.to_tensor());
}

bool is_mirror_like(Construction c) { return c != Construction::mbar; }

HopfAlgebra explicit_assembly(const CrossData& data, std::vector<ConditionResult>& checks) {
  const HopfAlgebra& hp = data.h_part;
  const HopfAlgebra& ap = data.a_part;
  const std::size_t dh = hp.dim();
  const std::size_t da = ap.dim();
  const std::size_t n = dh * da;

  std::vector<std::string> labels;
  for (const auto& l : hp.labels()) {
    for (const auto& r : ap.labels()) labels.push_back(l + "⊗" + r);
  }
  SparseVec unit;
  for (const auto& [i, x] : hp.unit()) {
    for (const auto& [j, y] : ap.unit()) unit.emplace_back(i * da + j, x * y);
  }

  // (h (x) a)(g (x) b) = h g1 (x) (a <| g2) b, products in h_part and a_part.
  std::vector<SparseVec> mult(n * n);
  for (std::size_t h = 0; h < dh; ++h) {
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t g = 0; g < dh; ++g) {
        for (std::size_t b = 0; b < da; ++b) {
          VecBuilder out;
          for (const auto& [g12, c] : hp.coproduct(g)) {
            const SparseVec left = hp.product(h, g12 / dh);
            const SparseVec right = ap.multiply(data.action.column(a * dh + g12 % dh), SparseVec{{b, Scalar(1)}});
            for (const auto& [p, x] : left) {
              for (const auto& [q, y] : right) out.add(p * da + q, c * x * y);
            }
          }
          mult[(h * da + a) * n + (g * da + b)] = std::move(out).build();
        }
      }
    }
  }

  // Delta(h (x) a) = h1 (x) beta(h2)^A psi(h3)^1 a1 (x) beta(h2)^H (x) psi(h3)^2 a2
  const LinearMap delta3 = iterated_coproduct(hp, 3);
  std::vector<SparseVec> comult(n);
  std::vector<SparseVec> counit(n);
  for (std::size_t h = 0; h < dh; ++h) {
    for (std::size_t a = 0; a < da; ++a) {
      VecBuilder out;
      for (const auto& [f, c] : delta3.column(h)) {
        const std::size_t h1 = f / (dh * dh), h2 = (f / dh) % dh, h3 = f % dh;
        for (const auto& [xy, cb] : data.coaction.column(h2)) {
          const std::size_t x = xy / dh, y = xy % dh;
          for (const auto& [pq, cp] : data.dual_cocycle.column(h3)) {
            const SparseVec xp = ap.product(x, pq / da);
            const std::size_t q = pq % da;
            for (const auto& [a12, ca] : ap.coproduct(a)) {
              const SparseVec left = ap.multiply(xp, SparseVec{{a12 / da, Scalar(1)}});
              const SparseVec right = ap.product(q, a12 % da);
              const Scalar coef = c * cb * cp * ca;
              for (const auto& [l, u] : left) {
                for (const auto& [r, v] : right) out.add((h1 * da + l) * n + (y * da + r), coef * u * v);
              }
            }
          }
        }
      }
      comult[h * da + a] = std::move(out).build();
      const Scalar e = hp.counit_of(h) * ap.counit_of(a);
      if (!e.is_zero()) counit[h * da + a] = {{0, e}};
    }
  }
  HopfAlgebra total(std::move(labels), std::move(unit), LinearMap({n, n}, {n}, std::move(mult)),
                    LinearMap({n}, {n, n}, std::move(comult)), LinearMap({n}, {}, std::move(counit)),
                    LinearMap::identity({n}));
  auto s = convolution_inverse(LinearMap::identity({n}), total, total);
  ConditionResult exists;
  exists.name = "explicit_antipode_exists";
  exists.passed = s.has_value();
  checks.push_back(std::move(exists));
  return total.with_antipode(s ? *s : LinearMap::zero({n}, {n}));
}

}  // namespace

std::string to_string(Construction c) {
  switch (c) {
    case Construction::mirror:
      return "mirror";
    case Construction::twisted_mirror:
      return "twisted_mirror";
    case Construction::mbar:
      return "mbar";
  }
  return "mirror";
}

Construction parse_construction(const std::string& text) {
  if (text == "mirror") return Construction::mirror;
  if (text == "twisted_mirror" || text == "mirror-twisted") return Construction::twisted_mirror;
  if (text == "mbar") return Construction::mbar;
  throw InputError("unknown construction '" + text + "' (expected mirror, twisted_mirror or mbar)");
}

CrossData mirror_data(const HopfAlgebra& h) {
  const auto ctx = context_for(h, std::nullopt);
  return CrossData{Construction::mirror,
                   h,
                   std::nullopt,
                   structural_variant(h, Variant::op),
                   h,
                   formula(ctx, "a, h", "h1 a1 S(h2)"),
                   formula(ctx, "h", "h1 S(h3) (x) h2"),
                   formula(ctx, "h", "1 (x) 1")};
}

CrossData twisted_mirror_data(const HopfAlgebra& h, const Cocycle& c) {
  if (!(c.host == h)) throw InputError("cocycle is defined on a different Hopf algebra");
  CrossData data = mirror_data(h);
  data.kind = Construction::twisted_mirror;
  data.cocycle = c;
  data.a_part = twist_hopf(c);
  data.dual_cocycle = formula(context_for(h, c), "h, cocycle X", "h1 X1 S(h4) Xi1 (x) h2 X2 S(h3) Xi2");
  return data;
}

CrossData mbar_data(const HopfAlgebra& h) {
  if (!inverse(h.antipode())) throw CapabilityError("antipode is not bijective");
  const auto ctx = context_for(h, std::nullopt);
  return CrossData{Construction::mbar,
                   h,
                   std::nullopt,
                   h,
                   h,
                   formula(ctx, "a, h", "S(h1) a1 h2"),
                   formula(ctx, "h", "S(h1) h3 (x) h2"),
                   formula(ctx, "h", "S(h1) h3 (x) S(h2) h4")};
}

std::vector<ConditionResult> check_cross_data(const CrossData& data) {
  const HopfAlgebra& hp = data.h_part;
  const HopfAlgebra& ap = data.a_part;
  const std::size_t dh = hp.dim();
  const std::size_t da = ap.dim();
  std::vector<ConditionResult> out;
  auto act = [&](const SparseVec& a, std::size_t h) {
    VecBuilder b;
    for (const auto& [i, x] : a) b.add_scaled(data.action.column(i * dh + h), x);
    return std::move(b).build();
  };
  {
    std::vector<SparseVec> lhs, rhs;
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t b = 0; b < da; ++b) {
        for (std::size_t h = 0; h < dh; ++h) {
          lhs.push_back(act(ap.product(a, b), h));
          VecBuilder r;
          for (const auto& [f, c] : hp.coproduct(h)) {
            r.add_scaled(ap.multiply(act(SparseVec{{a, Scalar(1)}}, f / dh), act(SparseVec{{b, Scalar(1)}}, f % dh)),
                         c);
          }
          rhs.push_back(std::move(r).build());
        }
      }
    }
    out.push_back(compare_maps("module_algebra", LinearMap({da, da, dh}, {da}, std::move(lhs)),
                               LinearMap({da, da, dh}, {da}, std::move(rhs))));
  }
  {
    std::vector<SparseVec> lhs, rhs;
    for (std::size_t h = 0; h < dh; ++h) {
      lhs.push_back(act(ap.unit(), h));
      rhs.push_back(scale(ap.unit(), hp.counit_of(h)));
    }
    out.push_back(compare_maps("module_unit", LinearMap({dh}, {da}, std::move(lhs)),
                               LinearMap({dh}, {da}, std::move(rhs))));
  }
  const LinearMap id_a = LinearMap::identity({da});
  out.push_back(compare_maps("coaction_counit",
                             tensor_product(ap.counit(), LinearMap::identity({dh})).after(data.coaction),
                             LinearMap::identity({dh})));
  {
    std::vector<SparseVec> expected;
    for (std::size_t h = 0; h < dh; ++h) expected.push_back(scale(ap.unit(), hp.counit_of(h)));
    const LinearMap eps_one({dh}, {da}, std::move(expected));
    out.push_back(compare_maps("psi_counit_left", tensor_product(ap.counit(), id_a).after(data.dual_cocycle),
                               eps_one));
    out.push_back(compare_maps("psi_counit_right", tensor_product(id_a, ap.counit()).after(data.dual_cocycle),
                               eps_one));
  }
  return out;
}

bool Bicrossproduct::consistent() const { return failure() == nullptr; }

const ConditionResult* Bicrossproduct::failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

Bicrossproduct assemble(const CrossData& data) {
  const HopfAlgebra& base = data.base;
  const std::size_t d = base.dim();
  if (data.h_part.dim() != d || data.a_part.dim() != d) {
    throw ShapeError("cross data parts must share the dimension of the base algebra");
  }
  const std::size_t n = d * d;
  const Shape flat{n};
  const Shape pair{n, n};
  const auto ctx = context_for(base, data.cocycle);
  const bool mirror = is_mirror_like(data.kind);

  std::vector<ConditionResult> checks;
  const LinearMap theta =
      reshape(formula(ctx, "h, a", mirror ? "h1 (x) h2 a1" : "h1 (x) S(h2) a1"), flat, flat);
  auto theta_inv = inverse(theta);
  if (!theta_inv) throw InputError("theta is singular for this input");
  const LinearMap closed_inverse =
      reshape(formula(ctx, "h, a", mirror ? "h1 (x) S(h2) a1" : "h1 (x) h2 a1"), flat, flat);
  checks.push_back(compare_maps("theta_inverse_closed_form", *theta_inv, closed_inverse));

  HopfAlgebra source = tensor_hopf(data.h_part, data.a_part);
  const LinearMap tt = tensor_product(theta, theta);
  HopfAlgebra total(source.labels(), theta.apply(source.unit()),
                    theta.after(source.mult()).after(tensor_product(*theta_inv, *theta_inv)),
                    tt.after(source.comult()).after(*theta_inv), source.counit().after(*theta_inv),
                    theta.after(source.antipode()).after(*theta_inv));

  HopfAlgebra explicit_total = explicit_assembly(data, checks);
  checks.push_back(compare_condition("paths_agree_unit", total.unit_tensor(), explicit_total.unit_tensor()));
  checks.push_back(compare_maps("paths_agree_mult", total.mult(), explicit_total.mult()));
  checks.push_back(compare_maps("paths_agree_comult", total.comult(), explicit_total.comult()));
  checks.push_back(compare_maps("paths_agree_counit", total.counit(), explicit_total.counit()));
  checks.push_back(compare_maps("paths_agree_antipode", total.antipode(), explicit_total.antipode()));

  const LinearMap display = reshape(
      mirror ? formula(ctx, "h, a, cocycle X", "h1 (x) h2 X1 S(h6) a1 Xi1 (x) h3 (x) h4 X2 S(h5) a2 Xi2")
             : formula(ctx, "h, a", "h1 (x) S(h2) h5 a1 (x) h3 (x) S(h4) h6 a2"),
      flat, pair);
  checks.push_back(compare_maps("display_coproduct", total.comult(), display));

  const LinearMap inner =
      mirror ? reshape(formula(ctx, "h, a, cocycle X", "h1 (x) X1 a1 Xi1 (x) h2 (x) X2 a2 Xi2"), flat, pair)
             : source.comult();
  checks.push_back(compare_maps("theta_coalgebra_identity", explicit_total.comult().after(theta), tt.after(inner)));

  for (auto& c : check_cross_data(data)) checks.push_back(std::move(c));
  return Bicrossproduct{data, std::move(source), std::move(total), std::move(explicit_total), theta,
                        std::move(*theta_inv), std::move(checks)};
}

ExtensionReport check_extension(const Bicrossproduct& b) {
  const HopfAlgebra& hp = b.data.h_part;
  const HopfAlgebra& ap = b.data.a_part;
  const std::size_t dh = hp.dim();
  const std::size_t da = ap.dim();
  const std::size_t n = dh * da;
  std::vector<SparseVec> iota(da);
  for (std::size_t a = 0; a < da; ++a) {
    for (const auto& [u, x] : hp.unit()) iota[a].emplace_back(u * da + a, x);
  }
  std::vector<SparseVec> pi(n);
  std::vector<SparseVec> trivial(da);
  for (std::size_t h = 0; h < dh; ++h) {
    for (std::size_t a = 0; a < da; ++a) {
      const Scalar e = ap.counit_of(a);
      if (!e.is_zero()) pi[h * da + a] = {{h, e}};
    }
  }
  for (std::size_t a = 0; a < da; ++a) trivial[a] = scale(hp.unit(), ap.counit_of(a));
  const LinearMap iota_map({da}, {n}, std::move(iota));
  const LinearMap pi_map({n}, {dh}, std::move(pi));
  ExtensionReport r;
  r.iota = check_morphism(iota_map, ap, b.total);
  r.pi = check_morphism(pi_map, b.total, hp);
  r.composite_is_trivial = pi_map.after(iota_map) == LinearMap({da}, {dh}, std::move(trivial));
  return r;
}

CoincidenceReport quasitriangular_coincidence(const HopfAlgebra& h, const QuasitriangularStructure& q) {
  if (!(q.host == h)) throw InputError("R-matrix is defined on a different Hopf algebra");
  auto c = verify_cocycle(h, q.r);
  if (!c.passed()) throw InputError("R-matrix fails the cocycle condition " + c.failure()->name);
  Bicrossproduct twisted = assemble(twisted_mirror_data(h, *c.cocycle));
  Bicrossproduct mbar = assemble(mbar_data(structural_variant(h, Variant::cop)));
  const std::size_t d = h.dim();
  const LinearMap comparison =
      reshape(tensor_product(h.antipode(), LinearMap::identity({d})), {d * d}, {d * d});
  HopfMorphismReport direct = check_morphism(comparison, twisted.total, mbar.total);
  HopfMorphismReport through =
      check_morphism(mbar.theta.after(comparison).after(twisted.theta_inverse), twisted.total, mbar.total);
  return CoincidenceReport{std::move(twisted), std::move(mbar), comparison, std::move(direct),
                           std::move(through)};
}

}  // namespace hopfkit
