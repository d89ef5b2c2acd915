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

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit::sweedler {

inline constexpr std::size_t kMaxDepth = 12;
inline constexpr int kMaxCopies = 4;

/// Names an expression may use. Text form: comma-separated items, each a
/// variable `h` or `h:5` (declared depth) or a cocycle `cocycle X`.
struct Declarations {
  struct Variable {
    std::string name;
    std::optional<std::size_t> depth;
  };
  std::vector<Variable> variables;
  std::vector<std::string> cocycles;

  static Declarations parse(std::string_view text, int line = 1);
  friend bool operator==(const Declarations&, const Declarations&) = default;
};

struct Atom {
  enum class Kind { variable_leg, cocycle_leg, unit };
  Kind kind = Kind::unit;
  int antipode_power = 0;
  std::size_t source = 0;  // variable index, or cocycle instance index
  std::size_t leg = 0;     // 1-based
  std::size_t subleg = 0;  // 1-based; 0 when the whole leg is used
  int column = 0;
};

/// One independent summation of a bound cocycle (or of its inverse).
/// Primes distinguish copies: X, X', X'' are three separate sums over the
/// same element.
struct CocycleInstance {
  std::string name;
  bool inverse = false;
  int copy = 0;
  /// How many coproduct sublegs each of the two legs is split into
  /// (1 when the leg is used whole).
  std::array<std::size_t, 2> split{1, 1};

  std::string spelling() const;
};

struct VariableUse {
  std::string name;
  std::size_t depth = 0;  // 0: unused, contributes its counit
};

/// Parsed Sweedler formula: tensor slots, each an ordered product of atoms.
///
///   expr := slot ("(x)" slot)*        slot := atom+
///   atom := VAR LEG | "S(" atom ")" | COCYCLE ["i"] "'"* DIGIT ["_" SUBLEG] | "1"
///
/// The inverse marker may also follow the primes: X'i1 is Xi'1.
/// `h3` is the third leg of the iterated coproduct of h; `X1`, `Xi2` are
/// the legs of a cocycle and of its inverse; `X2_1` is the first coproduct
/// leg of X2.
class Expr {
 public:
  const std::vector<std::vector<Atom>>& slots() const { return slots_; }
  const std::vector<VariableUse>& variables() const { return variables_; }
  const std::vector<CocycleInstance>& instances() const { return instances_; }
  const Declarations& declarations() const { return decls_; }
  const std::string& text() const { return text_; }
  std::size_t slot_count() const { return slots_.size(); }

 private:
  friend Expr parse(std::string_view, const Declarations&, int);
  std::string text_;
  Declarations decls_;
  std::vector<VariableUse> variables_;
  std::vector<CocycleInstance> instances_;
  std::vector<std::vector<Atom>> slots_;
};

/// Throws ParseError carrying `line` and the 1-based column.
Expr parse(std::string_view text, const Declarations& decls, int line = 1);

/// Algebra the formulas are evaluated in, plus cocycle bindings. Products
/// inside a slot use the host multiplication, or its opposite when
/// `opposite` is set. Copies share their caches, so contexts are cheap to
/// pass around; they are safe to read from several threads.
class EvaluationContext {
 public:
  explicit EvaluationContext(HopfAlgebra host, bool opposite = false);

  const HopfAlgebra& host() const { return host_; }
  bool opposite() const { return opposite_; }

  /// Binds `name` to chi in H (x) H. Throws EvaluationError unless
  /// chi * inverse = inverse * chi = 1 (x) 1.
  void bind(const std::string& name, SparseTensor element, SparseTensor inverse);
  /// Same without the inverse check; only for mutation experiments that
  /// deliberately pair an element with the wrong inverse.
  void bind_unchecked(const std::string& name, SparseTensor element, SparseTensor inverse);
  bool is_bound(const std::string& name) const { return bindings_.count(name) != 0; }

  /// Delta^(k) of the host, computed once per k.
  const LinearMap& coproduct_power(std::size_t k) const;
  /// (Delta^(m1) (x) Delta^(m2)) of a bound element or its inverse.
  const SparseTensor& expanded_instance(const CocycleInstance& inst) const;

 private:
  struct Binding {
    SparseTensor element;
    SparseTensor inverse;
  };
  struct Cache;

  HopfAlgebra host_;
  bool opposite_;
  std::map<std::string, Binding> bindings_;
  std::shared_ptr<Cache> cache_;
};

/// Evaluates `e` with `args[k]` (a vector in H) substituted for the k-th
/// declared variable. Result lives in H^(x)slots.
SparseTensor evaluate(const Expr& e, const EvaluationContext& ctx, std::span<const SparseVec> args);
SparseTensor evaluate_basis(const Expr& e, const EvaluationContext& ctx,
                            std::span<const std::size_t> basis_indices);

/// The linear map x_1 (x) ... (x) x_n |-> e(x_1, ..., x_n) over the declared
/// variables, domain H^(x)n and codomain H^(x)slots.
LinearMap expression_map(const Expr& e, const EvaluationContext& ctx);

struct IdentityResult {
  bool passed = true;
  std::size_t assignments_checked = 0;
  std::optional<MultiIndex> witness;  // basis index per declared variable
  SparseTensor lhs;
  SparseTensor rhs;
};

/// Evaluates both sides on every basis assignment of the declared
/// variables; stops at the first disagreement.
IdentityResult check_identity(const Expr& lhs, const Expr& rhs, const EvaluationContext& ctx);

}  // namespace hopfkit::sweedler
