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

#include "hopfkit/twist.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "hopfkit/errors.hpp"
#include "hopfkit/linsolve.hpp"

namespace hopfkit {
namespace {

ConditionResult invertible_condition(bool ok) {
  ConditionResult r;
  r.name = "invertible";
  r.passed = ok;
  return r;
}

const ConditionResult* first_failure(const std::vector<ConditionResult>& conditions) {
  for (const auto& c : conditions) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void require_legs(const HopfAlgebra& h, const SparseTensor& t, std::size_t legs, const char* what) {
  if (t.shape() != Shape(legs, h.dim())) {
    throw ShapeError(std::string(what) + " must have " + std::to_string(legs) + " legs of dimension " +
                     std::to_string(h.dim()));
  }
}

Scalar power(Scalar base, std::uint64_t e) {
  Scalar out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Roots of unity of order dividing n, as powers of one primitive root.
std::vector<Scalar> roots_of_unity(std::uint64_t n, Field field) {
  if (field.is_rational()) {
    if (n % 2 == 0) return {Scalar(1), Scalar(-1)};
    return {Scalar(1)};
  }
  const std::uint64_t p = field.prime;
  const std::uint64_t m = std::gcd(n, p - 1);
  if (m == 1) return {Scalar::residue(1, p)};
  const auto factors = prime_factors(m);
  for (std::uint64_t a = 2; a < p; ++a) {
    const Scalar z = power(Scalar::residue(a, p), (p - 1) / m);
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t q) { return !power(z, m / q).is_one(); });
    if (!primitive) continue;
    std::vector<Scalar> roots{Scalar::residue(1, p)};
    for (std::uint64_t k = 1; k < m; ++k) roots.push_back(roots.back() * z);
    return roots;
  }
  throw InternalError("no primitive root of unity found");
}

}  // namespace

ConditionResult compare_condition(std::string name, SparseTensor lhs, SparseTensor rhs) {
  ConditionResult r;
  r.name = std::move(name);
  if (lhs != rhs) {
    r.passed = false;
    const SparseTensor diff = lhs - rhs;
    r.witness = unflatten(diff.shape(), diff.entries().front().first);
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

const ConditionResult* CocycleVerification::failure() const { return first_failure(conditions); }
const ConditionResult* QuasitriangularVerification::failure() const { return first_failure(conditions); }

SparseTensor embed_legs(const HopfAlgebra& h, const SparseTensor& t, std::size_t legs,
                        std::span<const std::size_t> positions) {
  const std::size_t r = t.rank();
  if (positions.size() != r || r > legs) throw ShapeError("leg positions do not match the tensor");
  SparseTensor padded = t;
  for (std::size_t k = r; k < legs; ++k) padded = outer(padded, h.unit_tensor());
  std::vector<bool> used(legs, false);
  std::vector<std::size_t> perm(positions.begin(), positions.end());
  for (auto p : perm) {
    if (p >= legs || used[p]) throw ShapeError("invalid leg positions");
    used[p] = true;
  }
  for (std::size_t p = 0; p < legs; ++p) {
    if (!used[p]) perm.push_back(p);
  }
  return tensor_permute(padded, perm);
}

std::optional<SparseTensor> invert_tensor_element(const HopfAlgebra& h, const SparseTensor& u) {
  const std::size_t k = u.rank();
  if (k == 0) throw InputError("tensor element needs at least one leg");
  require_legs(h, u, k, "tensor element");
  const Shape shape = u.shape();
  const std::uint64_t n = shape_size(shape);
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::uint64_t b = 0; b < n; ++b) {
    cols.push_back(multiply_in_power(h, u, SparseTensor(shape, SparseVec{{b, Scalar(1)}})).entries());
  }
  const SparseTensor one = unit_power(h, k);
  auto sol = solve_linear(LinearMap(shape, shape, std::move(cols)), one);
  if (!sol) return std::nullopt;
  if (multiply_in_power(h, sol->value, u) != one || multiply_in_power(h, u, sol->value) != one) {
    return std::nullopt;
  }
  return std::move(sol->value);
}

CocycleVerification verify_cocycle(const HopfAlgebra& host, const SparseTensor& chi) {
  require_legs(host, chi, 2, "cocycle");
  const std::size_t d = host.dim();
  const LinearMap id = LinearMap::identity({d});
  CocycleVerification out;
  auto inv = invert_tensor_element(host, chi);
  out.no_inverse = !inv;
  out.conditions.push_back(invertible_condition(inv.has_value()));
  out.conditions.push_back(
      compare_condition("counit_left", tensor_product(host.counit(), id).apply(chi), host.unit_tensor()));
  out.conditions.push_back(
      compare_condition("counit_right", tensor_product(id, host.counit()).apply(chi), host.unit_tensor()));
  const std::array<std::size_t, 2> legs12{0, 1}, legs23{1, 2};
  SparseTensor lhs = multiply_in_power(host, embed_legs(host, chi, 3, legs12),
                                       tensor_product(host.comult(), id).apply(chi));
  SparseTensor rhs = multiply_in_power(host, embed_legs(host, chi, 3, legs23),
                                       tensor_product(id, host.comult()).apply(chi));
  out.conditions.push_back(compare_condition("cocycle_identity", std::move(lhs), std::move(rhs)));
  if (!out.failure()) out.cocycle = Cocycle{host, chi, std::move(*inv)};
  return out;
}

HopfAlgebra twist_hopf(const Cocycle& c) {
  const HopfAlgebra& h = c.host;
  const std::size_t d = h.dim();
  std::vector<SparseVec> comult(d);
  for (std::size_t i = 0; i < d; ++i) {
    const SparseTensor delta({d, d}, h.coproduct(i));
    comult[i] = multiply_in_power(h, multiply_in_power(h, c.element, delta), c.inverse).entries();
  }
  VecBuilder u;
  for (const auto& [flat, v] : c.element.entries()) {
    u.add_scaled(h.multiply(SparseVec{{flat / d, Scalar(1)}}, h.antipode().column(flat % d)), v);
  }
  const SparseVec u_vec = std::move(u).build();
  auto u_inv = invert_tensor_element(h, SparseTensor({d}, u_vec));
  if (!u_inv) throw InternalError("twisted antipode element is not invertible");
  std::vector<SparseVec> antipode(d);
  for (std::size_t i = 0; i < d; ++i) {
    antipode[i] = h.multiply(h.multiply(u_vec, h.antipode().column(i)), u_inv->entries());
  }
  return h.with_comult(LinearMap({d}, {d, d}, std::move(comult)))
      .with_antipode(LinearMap({d}, {d}, std::move(antipode)));
}

QuasitriangularVerification verify_quasitriangular(const HopfAlgebra& host, const SparseTensor& r) {
  require_legs(host, r, 2, "R-matrix");
  const std::size_t d = host.dim();
  const LinearMap id = LinearMap::identity({d});
  QuasitriangularVerification out;
  auto inv = invert_tensor_element(host, r);
  out.no_inverse = !inv;
  out.conditions.push_back(invertible_condition(inv.has_value()));
  const std::array<std::size_t, 2> l12{0, 1}, l13{0, 2}, l23{1, 2};
  const SparseTensor r12 = embed_legs(host, r, 3, l12);
  const SparseTensor r13 = embed_legs(host, r, 3, l13);
  const SparseTensor r23 = embed_legs(host, r, 3, l23);
  out.conditions.push_back(compare_condition("coproduct_left", tensor_product(host.comult(), id).apply(r),
                                   multiply_in_power(host, r13, r23)));
  out.conditions.push_back(compare_condition("coproduct_right", tensor_product(id, host.comult()).apply(r),
                                   multiply_in_power(host, r13, r12)));
  ConditionResult inter;
  inter.name = "intertwining";
  const std::array<std::size_t, 2> flip{1, 0};
  for (std::size_t i = 0; i < d && inter.passed; ++i) {
    const SparseTensor delta({d, d}, host.coproduct(i));
    SparseTensor lhs = multiply_in_power(host, r, delta);
    SparseTensor rhs = multiply_in_power(host, tensor_permute(delta, flip), r);
    if (lhs != rhs) {
      inter.passed = false;
      inter.witness = MultiIndex{i};
      inter.lhs = std::move(lhs);
      inter.rhs = std::move(rhs);
    }
  }
  out.conditions.push_back(std::move(inter));
  if (!out.failure()) out.structure = QuasitriangularStructure{host, r, std::move(*inv)};
  return out;
}

CocycleVerification r_as_cocycle(const QuasitriangularStructure& q) {
  const std::size_t d = q.host.dim();
  const std::array<std::size_t, 2> middle{1, 2};
  // Row-major flattening makes legs (1,2),(3,4) of H0^(x)4 the two legs of
  // (H0 (x) H0)^(x)2 directly.
  const SparseTensor chi4 = embed_legs(q.host, q.r, 4, middle);
  return verify_cocycle(tensor_hopf(q.host, q.host), SparseTensor({d * d, d * d}, chi4.entries()));
}

CharacterTable characters(const std::vector<std::vector<std::size_t>>& table, Field field) {
  const HopfAlgebra g = group_algebra(table);  // validates the group axioms
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) throw InputError("group is not abelian");
    }
  }
  std::size_t e = 0;
  while (!std::all_of(table[e].begin(), table[e].end(),
                      [&, x = std::size_t{0}](std::size_t y) mutable { return y == x++; })) {
    ++e;
  }
  CharacterTable out;
  std::vector<bool> in_subgroup(n, false);
  in_subgroup[e] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_subgroup[x]) continue;
    out.generators.push_back(x);
    // Close the subgroup under multiplication by every generator.
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < n; ++y) {
      if (in_subgroup[y]) queue.push_back(y);
    }
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (auto gen : out.generators) {
        const std::size_t z = table[y][gen];
        if (!in_subgroup[z]) {
          in_subgroup[z] = true;
          queue.push_back(z);
        }
      }
    }
  }
  out.roots = roots_of_unity(n, field);
  const std::size_t k = out.generators.size();
  const std::size_t r = out.roots.size();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < k; ++i) assignments *= r;
  for (std::uint64_t code = 0; code < assignments; ++code) {
    std::vector<std::size_t> choice(k);
    std::uint64_t rest = code;
    for (std::size_t i = k; i-- > 0;) {
      choice[i] = rest % r;
      rest /= r;
    }
    std::vector<std::optional<Scalar>> value(n);
    value[e] = Scalar(1).to_field(field);
    std::deque<std::size_t> queue{e};
    bool ok = true;
    while (!queue.empty() && ok) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k && ok; ++i) {
        const std::size_t z = table[y][out.generators[i]];
        const Scalar v = *value[y] * out.roots[choice[i]];
        if (!value[z]) {
          value[z] = v;
          queue.push_back(z);
        } else if (!(*value[z] == v)) {
          ok = false;
        }
      }
    }
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) ok = *value[table[a][b]] == *value[a] * *value[b];
    }
    if (!ok) continue;
    std::vector<Scalar> row;
    row.reserve(n);
    for (auto& v : value) row.push_back(*v);
    out.values.push_back(std::move(row));
  }
  if (out.values.size() != n) {
    throw CapabilityError("field " + field.name() + " lacks the roots of unity for this group");
  }
  return out;
}

CocycleVerification bicharacter_cocycle(const std::vector<std::vector<std::size_t>>& table,
                                        const std::vector<std::vector<Scalar>>& omega, Field field,
                                        std::vector<std::string> labels) {
  const CharacterTable chars = characters(table, field);
  const std::size_t n = table.size();
  if (omega.size() != n ||
      std::any_of(omega.begin(), omega.end(), [&](const auto& row) { return row.size() != n; })) {
    throw InputError("bicharacter must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  auto product_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) {
      bool match = true;
      for (std::size_t g = 0; g < n && match; ++g) {
        match = chars.values[c][g] == chars.values[a][g] * chars.values[b][g];
      }
      if (match) return c;
    }
    throw InternalError("character group not closed");
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = product_index(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (!(omega[ab][c] == omega[a][c] * omega[b][c]) || !(omega[c][ab] == omega[c][a] * omega[c][b])) {
          throw InputError("omega is not a bicharacter");
        }
      }
    }
  }
  const HopfAlgebra host = group_algebra(table, std::move(labels)).to_field(field);
  const Scalar inv_order = Scalar(1, static_cast<long>(n)).to_field(field);
  std::vector<SparseTensor> idempotents;
  for (const auto& phi : chars.values) {
    VecBuilder b;
    for (std::size_t g = 0; g < n; ++g) b.add(g, inv_order * phi[g].inverse());  // phi(g^-1)
    idempotents.emplace_back(Shape{n}, std::move(b).build());
  }
  SparseTensor chi({n, n});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (omega[a][b].is_zero()) throw InputError("omega takes the value 0");
      chi = chi + omega[a][b].to_field(field) * outer(idempotents[a], idempotents[b]);
    }
  }
  return verify_cocycle(host, chi);
}

}  // namespace hopfkit
