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

#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <array>

#include "hopfkit/errors.hpp"
#include "hopfkit/linsolve.hpp"

namespace hopfkit {
namespace {

SparseTensor as_tensor(Shape shape, SparseVec v) { return SparseTensor(std::move(shape), std::move(v)); }

SparseVec basis_vec(std::uint64_t i) { return SparseVec{{i, Scalar(1)}}; }

void check_map_shape(const LinearMap& m, const Shape& domain, const Shape& codomain,
                     const char* name) {
  if (m.domain() != domain || m.codomain() != codomain) {
    throw ShapeError(std::string(name) + " has the wrong shape for the declared dimension");
  }
}

void record(AxiomResult& r, MultiIndex at, SparseTensor lhs, SparseTensor rhs) {
  if (lhs == rhs) return;
  if (r.passed) {
    r.passed = false;
    r.witness = at;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
  }
  r.failing.push_back(std::move(at));
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::vector<std::string> labels, SparseVec unit, LinearMap mult,
                         LinearMap comult, LinearMap counit, LinearMap antipode)
    : labels_(std::move(labels)),
      unit_(std::move(unit)),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw ShapeError("Hopf algebra dimension must be positive");
  for (const auto& [i, v] : unit_) {
    if (i >= d) throw ShapeError("unit has an index outside the basis");
  }
  check_map_shape(mult_, {d, d}, {d}, "mult");
  check_map_shape(comult_, {d}, {d, d}, "comult");
  check_map_shape(counit_, {d}, {}, "counit");
  check_map_shape(antipode_, {d}, {d}, "antipode");
}

Scalar HopfAlgebra::counit_of(std::size_t i) const {
  const auto& col = counit_.column(i);
  return col.empty() ? Scalar(0) : col.front().second;
}

Scalar HopfAlgebra::counit_of(const SparseVec& a) const {
  Scalar s(0);
  for (const auto& [i, v] : a) s += v * counit_of(i);
  return s;
}

SparseVec HopfAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  VecBuilder out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out.add_scaled(product(i, j), x * y);
  }
  return std::move(out).build();
}

HopfAlgebra HopfAlgebra::to_field(Field field) const {
  return HopfAlgebra(labels_, hopfkit::to_field(unit_, field), mult_.to_field(field),
                     comult_.to_field(field), counit_.to_field(field), antipode_.to_field(field));
}

HopfAlgebra HopfAlgebra::with_labels(std::vector<std::string> labels) const {
  return HopfAlgebra(std::move(labels), unit_, mult_, comult_, counit_, antipode_);
}
HopfAlgebra HopfAlgebra::with_antipode(LinearMap antipode) const {
  return HopfAlgebra(labels_, unit_, mult_, comult_, counit_, std::move(antipode));
}
HopfAlgebra HopfAlgebra::with_comult(LinearMap comult) const {
  return HopfAlgebra(labels_, unit_, mult_, std::move(comult), counit_, antipode_);
}
HopfAlgebra HopfAlgebra::with_mult(LinearMap mult) const {
  return HopfAlgebra(labels_, unit_, std::move(mult), comult_, counit_, antipode_);
}

bool HopfValidation::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed; });
}

const AxiomResult& HopfValidation::axiom(const std::string& name) const {
  for (const auto& a : axioms) {
    if (a.name == name) return a;
  }
  throw InputError("no axiom named " + name);
}

HopfValidation validate_hopf(const HopfAlgebra& h, std::size_t max_dim) {
  const std::size_t d = h.dim();
  if (d > max_dim) {
    throw CapabilityError("dimension " + std::to_string(d) + " exceeds the verification cap " +
                          std::to_string(max_dim));
  }
  const Shape v{d};
  const Shape vv{d, d};
  const Shape vvv{d, d, d};
  const SparseVec one = h.unit();
  HopfValidation out;
  auto axiom = [&](const char* name) -> AxiomResult& {
    AxiomResult r;
    r.name = name;
    out.axioms.push_back(std::move(r));
    return out.axioms.back();
  };

  {
    auto& r = axiom("associativity");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto& ij = h.product(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          record(r, {i, j, k}, as_tensor(v, h.multiply(ij, basis_vec(k))),
                 as_tensor(v, h.multiply(basis_vec(i), h.product(j, k))));
        }
      }
    }
  }
  {
    auto& r = axiom("unit");
    for (std::size_t i = 0; i < d; ++i) {
      auto e = as_tensor(v, basis_vec(i));
      record(r, {i}, as_tensor(v, h.multiply(one, basis_vec(i))), e);
      record(r, {i}, as_tensor(v, h.multiply(basis_vec(i), one)), e);
    }
  }
  const LinearMap delta_left = on_leg(h.comult(), d, 2, 0);
  const LinearMap delta_right = on_leg(h.comult(), d, 2, 1);
  {
    auto& r = axiom("coassociativity");
    for (std::size_t i = 0; i < d; ++i) {
      record(r, {i}, as_tensor(vvv, delta_left.apply(h.coproduct(i))),
             as_tensor(vvv, delta_right.apply(h.coproduct(i))));
    }
  }
  {
    auto& r = axiom("counit");
    const LinearMap eps_left = on_leg(h.counit(), d, 2, 0);
    const LinearMap eps_right = on_leg(h.counit(), d, 2, 1);
    for (std::size_t i = 0; i < d; ++i) {
      auto e = as_tensor(v, basis_vec(i));
      record(r, {i}, as_tensor(v, eps_left.apply(h.coproduct(i))), e);
      record(r, {i}, as_tensor(v, eps_right.apply(h.coproduct(i))), e);
    }
  }
  {
    auto& r = axiom("comult_multiplicative");
    for (std::size_t i = 0; i < d; ++i) {
      auto di = as_tensor(vv, h.coproduct(i));
      for (std::size_t j = 0; j < d; ++j) {
        record(r, {i, j}, as_tensor(vv, h.comult().apply(h.product(i, j))),
               multiply_in_power(h, di, as_tensor(vv, h.coproduct(j))));
      }
    }
  }
  {
    auto& r = axiom("comult_unital");
    record(r, {}, as_tensor(vv, h.comult().apply(one)), unit_power(h, 2));
  }
  {
    auto& r = axiom("counit_multiplicative");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        record(r, {i, j}, SparseTensor::scalar(h.counit_of(h.product(i, j))),
               SparseTensor::scalar(h.counit_of(i) * h.counit_of(j)));
      }
    }
  }
  {
    auto& r = axiom("counit_unital");
    record(r, {}, SparseTensor::scalar(h.counit_of(one)), SparseTensor::scalar(Scalar(1)));
  }
  {
    auto& r = axiom("antipode");
    const LinearMap s_left = h.mult().after(on_leg(h.antipode(), d, 2, 0));
    const LinearMap s_right = h.mult().after(on_leg(h.antipode(), d, 2, 1));
    for (std::size_t i = 0; i < d; ++i) {
      auto expected = as_tensor(v, scale(one, h.counit_of(i)));
      record(r, {i}, as_tensor(v, s_left.apply(h.coproduct(i))), expected);
      record(r, {i}, as_tensor(v, s_right.apply(h.coproduct(i))), expected);
    }
  }
  for (auto& a : out.axioms) {
    a.failing.erase(std::unique(a.failing.begin(), a.failing.end()), a.failing.end());
  }
  return out;
}

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                          std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (auto x : row) {
      if (x >= n) throw InputError("group table fails closure: entry " + std::to_string(x));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InputError("group table fails associativity at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw InputError("group table fails identity: no two-sided identity element");
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find_if(table[a].begin(), table[a].end(),
                           [&](std::size_t x) { return x == *identity; });
    std::size_t b = static_cast<std::size_t>(it - table[a].begin());
    if (it == table[a].end() || table[b][a] != *identity) {
      throw InputError("group table fails inverses: element " + std::to_string(a));
    }
    inv[a] = b;
  }
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(a == *identity ? "e" : "g" + std::to_string(a));
  }
  if (labels.size() != n) throw InputError("group label count does not match table");

  std::vector<SparseVec> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = basis_vec(table[a][b]);
  }
  std::vector<SparseVec> comult(n);
  std::vector<SparseVec> counit(n);
  std::vector<SparseVec> antipode(n);
  for (std::size_t a = 0; a < n; ++a) {
    comult[a] = basis_vec(a * n + a);
    counit[a] = basis_vec(0);
    antipode[a] = basis_vec(inv[a]);
  }
  return HopfAlgebra(std::move(labels), basis_vec(*identity),
                     LinearMap({n, n}, {n}, std::move(mult)), LinearMap({n}, {n, n}, std::move(comult)),
                     LinearMap({n}, {}, std::move(counit)), LinearMap({n}, {n}, std::move(antipode)));
}

HopfAlgebra sweedler_h4() {
  // Basis g^a x^b at index 2b + a: 1, g, x, gx.
  auto index = [](int a, int b) -> std::uint64_t { return static_cast<std::uint64_t>(2 * b + a); };
  std::vector<SparseVec> mult(16);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          // (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}
          if (b + d >= 2) continue;
          const long sign = (b * c) % 2 == 0 ? 1 : -1;
          mult[index(a, b) * 4 + index(c, d)] = {{index((a + c) % 2, b + d), Scalar(sign)}};
        }
      }
    }
  }
  std::vector<SparseVec> comult(4);
  comult[index(0, 0)] = {{0 * 4 + 0, Scalar(1)}};
  comult[index(1, 0)] = {{1 * 4 + 1, Scalar(1)}};
  // x -> x (x) 1 + g (x) x
  comult[index(0, 1)] = {{1 * 4 + 2, Scalar(1)}, {2 * 4 + 0, Scalar(1)}};
  // gx -> gx (x) g + 1 (x) gx
  comult[index(1, 1)] = {{0 * 4 + 3, Scalar(1)}, {3 * 4 + 1, Scalar(1)}};
  std::vector<SparseVec> counit = {{{0, Scalar(1)}}, {{0, Scalar(1)}}, {}, {}};
  std::vector<SparseVec> antipode = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{3, Scalar(-1)}}, {{2, Scalar(1)}}};
  return HopfAlgebra({"1", "g", "x", "gx"}, basis_vec(0), LinearMap({4, 4}, {4}, std::move(mult)),
                     LinearMap({4}, {4, 4}, std::move(comult)), LinearMap({4}, {}, std::move(counit)),
                     LinearMap({4}, {4}, std::move(antipode)));
}

HopfAlgebra structural_variant(const HopfAlgebra& h, Variant mode) {
  const std::size_t d = h.dim();
  const std::array<std::size_t, 2> flip{1, 0};
  const LinearMap swap = LinearMap::permutation({d, d}, flip);
  LinearMap mult = h.mult();
  LinearMap comult = h.comult();
  LinearMap antipode = h.antipode();
  if (mode == Variant::op || mode == Variant::op_cop) mult = h.mult().after(swap);
  if (mode == Variant::cop || mode == Variant::op_cop) comult = swap.after(h.comult());
  if (mode != Variant::op_cop) {
    auto inv = inverse(h.antipode());
    if (!inv) throw CapabilityError("antipode is not invertible");
    antipode = std::move(*inv);
  }
  return HopfAlgebra(h.labels(), h.unit(), std::move(mult), std::move(comult), h.counit(),
                     std::move(antipode));
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  SparseVec unit;
  for (std::size_t i = 0; i < d; ++i) {
    Scalar e = h.counit_of(i);
    if (!e.is_zero()) unit.emplace_back(i, e);
  }
  std::vector<SparseVec> counit(d);
  for (const auto& [i, v] : h.unit()) counit[i] = {{0, v}};
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("δ(" + l + ")");
  return HopfAlgebra(std::move(labels), std::move(unit), h.comult().transpose(),
                     h.mult().transpose(), LinearMap({d}, {}, std::move(counit)),
                     h.antipode().transpose());
}

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t n = da * db;
  std::vector<std::string> labels;
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(la + "⊗" + lb);
  }
  SparseVec unit;
  for (const auto& [i, x] : a.unit()) {
    for (const auto& [j, y] : b.unit()) unit.emplace_back(i * db + j, x * y);
  }
  std::vector<SparseVec> mult(n * n);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t k = 0; k < da; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          VecBuilder out;
          for (const auto& [p, x] : a.product(i, k)) {
            for (const auto& [q, y] : b.product(j, l)) out.add(p * db + q, x * y);
          }
          mult[(i * db + j) * n + (k * db + l)] = std::move(out).build();
        }
      }
    }
  }
  std::vector<SparseVec> comult(n);
  std::vector<SparseVec> counit(n);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      VecBuilder out;
      for (const auto& [ai, x] : a.coproduct(i)) {
        for (const auto& [bj, y] : b.coproduct(j)) {
          const auto a1 = ai / da, a2 = ai % da, b1 = bj / db, b2 = bj % db;
          out.add((a1 * db + b1) * n + (a2 * db + b2), x * y);
        }
      }
      comult[i * db + j] = std::move(out).build();
      Scalar e = a.counit_of(i) * b.counit_of(j);
      if (!e.is_zero()) counit[i * db + j] = {{0, e}};
    }
  }
  LinearMap s = tensor_product(a.antipode(), b.antipode());
  return HopfAlgebra(std::move(labels), std::move(unit), LinearMap({n, n}, {n}, std::move(mult)),
                     LinearMap({n}, {n, n}, std::move(comult)), LinearMap({n}, {}, std::move(counit)),
                     LinearMap({n}, {n}, s.columns()));
}

LinearMap on_leg(const LinearMap& f, std::size_t dim, std::size_t legs, std::size_t at) {
  if (at >= legs) throw ShapeError("leg position out of range");
  LinearMap result = LinearMap::identity(Shape(at, dim));
  result = tensor_product(result, f);
  return tensor_product(result, LinearMap::identity(Shape(legs - at - 1, dim)));
}

LinearMap iterated_coproduct(const HopfAlgebra& h, std::size_t k) {
  if (k == 0) throw InputError("iterated coproduct needs k >= 1");
  const std::size_t d = h.dim();
  // Expands the first leg of every column entry, so no map on H^(x)k is
  // ever materialized.
  std::vector<SparseVec> cols(d);
  for (std::size_t b = 0; b < d; ++b) cols[b] = basis_vec(b);
  std::uint64_t rest_size = 1;
  for (std::size_t legs = 1; legs < k; ++legs) {
    for (auto& col : cols) {
      VecBuilder out;
      for (const auto& [flat, c] : col) {
        const std::uint64_t first = flat / rest_size;
        const std::uint64_t rest = flat % rest_size;
        for (const auto& [pq, v] : h.coproduct(first)) out.add(pq * rest_size + rest, c * v);
      }
      col = std::move(out).build();
    }
    rest_size *= d;
  }
  return LinearMap({d}, Shape(k, d), std::move(cols));
}

SparseTensor multiply_in_power(const HopfAlgebra& h, const SparseTensor& a,
                               const SparseTensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("multiplying tensors of different shapes");
  for (auto d : a.shape()) {
    if (d != h.dim()) throw ShapeError("tensor legs do not match the algebra dimension");
  }
  const std::size_t d = h.dim();
  VecBuilder out;
  std::vector<std::pair<std::uint64_t, Scalar>> partial;
  std::vector<std::pair<std::uint64_t, Scalar>> next;
  for (const auto& [fa, x] : a.entries()) {
    const MultiIndex ia = unflatten(a.shape(), fa);
    for (const auto& [fb, y] : b.entries()) {
      const MultiIndex ib = unflatten(b.shape(), fb);
      partial.assign(1, {0, x * y});
      for (std::size_t leg = 0; leg < ia.size() && !partial.empty(); ++leg) {
        next.clear();
        const auto& prod = h.product(ia[leg], ib[leg]);
        for (const auto& [p, c] : partial) {
          for (const auto& [r, v] : prod) next.emplace_back(p * d + r, c * v);
        }
        partial.swap(next);
      }
      for (const auto& [p, c] : partial) out.add(p, c);
    }
  }
  return SparseTensor(a.shape(), std::move(out).build());
}

SparseTensor unit_power(const HopfAlgebra& h, std::size_t k) {
  SparseTensor result = SparseTensor::scalar(Scalar(1));
  for (std::size_t i = 0; i < k; ++i) result = outer(result, h.unit_tensor());
  return result;
}

std::optional<LinearMap> convolution_inverse(const LinearMap& f, const HopfAlgebra& coalgebra,
                                             const HopfAlgebra& algebra) {
  const std::size_t dh = coalgebra.dim();
  const std::size_t da = algebra.dim();
  if (f.domain() != Shape{dh} || f.codomain() != Shape{da}) {
    throw ShapeError("convolution operand must map the coalgebra into the algebra");
  }
  // Unknown g(e_i) component k sits at index i*da + k. Equations: first the
  // block m(g (x) f)Delta(e_b), then m(f (x) g)Delta(e_b), component l.
  std::vector<VecBuilder> cols(dh * da);
  for (std::size_t b = 0; b < dh; ++b) {
    for (const auto& [flat, c] : coalgebra.coproduct(b)) {
      const std::size_t i = flat / dh;
      const std::size_t j = flat % dh;
      for (std::size_t k = 0; k < da; ++k) {
        const SparseVec ek{{k, Scalar(1)}};
        for (const auto& [l, v] : algebra.multiply(ek, f.column(j))) {
          cols[i * da + k].add((0 * dh + b) * da + l, c * v);
        }
        for (const auto& [l, v] : algebra.multiply(f.column(i), ek)) {
          cols[j * da + k].add((1 * dh + b) * da + l, c * v);
        }
      }
    }
  }
  std::vector<SparseVec> built;
  built.reserve(cols.size());
  for (auto& c : cols) built.push_back(std::move(c).build());
  LinearMap system({dh, da}, {2, dh, da}, std::move(built));
  VecBuilder rhs;
  for (std::size_t half = 0; half < 2; ++half) {
    for (std::size_t b = 0; b < dh; ++b) {
      for (const auto& [l, v] : algebra.unit()) {
        rhs.add((half * dh + b) * da + l, v * coalgebra.counit_of(b));
      }
    }
  }
  auto sol = solve_linear(system, SparseTensor({2, dh, da}, std::move(rhs).build()));
  if (!sol) return std::nullopt;
  std::vector<SparseVec> g(dh);
  for (const auto& [idx, v] : sol->value.entries()) g[idx / da].emplace_back(idx % da, v);
  return LinearMap({dh}, {da}, std::move(g));
}

HopfMorphismReport check_morphism(const LinearMap& f, const HopfAlgebra& src,
                                  const HopfAlgebra& dst) {
  const std::size_t ds = src.dim();
  const std::size_t dd = dst.dim();
  if (f.domain() != Shape{ds} || f.codomain() != Shape{dd}) {
    throw ShapeError("morphism shape does not match source and target dimensions");
  }
  HopfMorphismReport r;
  for (std::size_t i = 0; i < ds; ++i) {
    for (std::size_t j = 0; j < ds; ++j) {
      if (f.apply(src.product(i, j)) != dst.multiply(f.column(i), f.column(j))) {
        r.is_algebra_map = false;
        r.failing_basis_indices.push_back({"algebra", {i, j}});
      }
    }
  }
  const LinearMap ff = tensor_product(f, f);
  for (std::size_t i = 0; i < ds; ++i) {
    if (dst.comult().apply(f.column(i)) != ff.apply(src.coproduct(i))) {
      r.is_coalgebra_map = false;
      r.failing_basis_indices.push_back({"coalgebra", {i}});
    }
  }
  if (f.apply(src.unit()) != dst.unit()) {
    r.is_unit_counit_preserving = false;
    r.failing_basis_indices.push_back({"unit", {}});
  }
  for (std::size_t i = 0; i < ds; ++i) {
    if (dst.counit_of(f.column(i)) != src.counit_of(i)) {
      r.is_unit_counit_preserving = false;
      r.failing_basis_indices.push_back({"counit", {i}});
    }
  }
  r.rank = rank(f);
  r.is_injective = r.rank == ds;
  r.is_surjective = r.rank == dd;
  return r;
}

}  // namespace hopfkit
