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

#include "hopfkit/sweedler.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <unordered_map>

#include "hopfkit/errors.hpp"

namespace hopfkit::sweedler {
namespace {

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr std::string_view kTensorSign = "\xE2\x8A\x97";  // U+2297

}  // namespace

std::string CocycleInstance::spelling() const {
  return name + (inverse ? "i" : "") + std::string(static_cast<std::size_t>(copy), '\'');
}

Declarations Declarations::parse(std::string_view text, int line) {
  Declarations out;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const int column = static_cast<int>(start) + 1;
    std::string_view item = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) {
      if (comma == text.size() && out.variables.empty() && out.cocycles.empty()) break;
      throw ParseError("empty declaration", line, column);
    }
    std::string name;
    if (item.substr(0, 8) == "cocycle ") {
      name = std::string(trim(item.substr(8)));
      if (!is_name(name)) throw ParseError("invalid cocycle name '" + name + "'", line, column);
      out.cocycles.push_back(name);
    } else {
      std::optional<std::size_t> depth;
      auto colon = item.find(':');
      name = std::string(trim(item.substr(0, colon)));
      if (colon != std::string_view::npos) {
        std::string_view digits = trim(item.substr(colon + 1));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
            digits.size() > 3) {
          throw ParseError("invalid depth for variable '" + name + "'", line, column);
        }
        depth = std::stoul(std::string(digits));
        if (*depth > kMaxDepth) throw ParseError("variable depth exceeds 12", line, column);
      }
      if (!is_name(name)) throw ParseError("invalid variable name '" + name + "'", line, column);
      out.variables.push_back({name, depth});
    }
    if (name == "S") throw ParseError("'S' is reserved for the antipode", line, column);
    if (!seen.insert(name).second) throw ParseError("duplicate declaration of '" + name + "'", line, column);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Declarations& decls, int line)
      : text_(text), decls_(decls), line_(line) {}

  void run() {
    var_uses_.resize(decls_.variables.size());
    for (;;) {
      std::vector<Atom> slot;
      skip_ws();
      const int slot_column = col();
      while (!at_end() && !at_separator()) {
        slot.push_back(parse_atom(0));
        if (!at_end() && !std::isspace(peek()) && !at_separator()) {
          fail("unexpected character '" + std::string(1, peek()) + "'");
        }
        skip_ws();
      }
      if (slot.empty()) throw ParseError("empty tensor slot", line_, slot_column);
      slots_.push_back(std::move(slot));
      if (at_end()) break;
      consume_separator();
    }
    finish();
  }

 private:
  struct InstanceUse {
    std::size_t leg;
    std::size_t subleg;
    int column;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  int col() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col()); }
  [[noreturn]] void fail_at(const std::string& msg, int column) const {
    throw ParseError(msg, line_, column);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_separator() const {
    return text_.substr(pos_, 3) == "(x)" || text_.substr(pos_, kTensorSign.size()) == kTensorSign;
  }

  void consume_separator() { pos_ += text_.substr(pos_, 3) == "(x)" ? 3 : kTensorSign.size(); }

  std::size_t read_number(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) && pos_ - start < 4) ++pos_;
    if (pos_ == start) fail(std::string("missing ") + what);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string(what) + " too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Atom parse_atom(int antipode_power) {
    skip_ws();
    Atom atom;
    atom.column = col();
    atom.antipode_power = antipode_power;
    if (at_end()) fail("expected an atom");
    if (peek() == '1' && (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      atom.kind = Atom::Kind::unit;
      return atom;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      fail("unknown token '" + std::string(1, peek()) + "'");
    }
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string ident(text_.substr(start, pos_ - start));

    if (ident == "S") {
      skip_ws();
      if (peek() != '(') fail("expected '(' after S");
      ++pos_;
      Atom inner = parse_atom(antipode_power + 1);
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    for (std::size_t v = 0; v < decls_.variables.size(); ++v) {
      if (decls_.variables[v].name != ident) continue;
      atom.kind = Atom::Kind::variable_leg;
      atom.source = v;
      atom.leg = read_number("leg index");
      if (atom.leg == 0) fail_at("leg indices start at 1", atom.column);
      var_uses_[v].push_back({atom.leg, atom.column});
      return atom;
    }
    bool inverse = false;
    std::string name;
    if (std::find(decls_.cocycles.begin(), decls_.cocycles.end(), ident) != decls_.cocycles.end()) {
      name = ident;
    } else if (ident.size() > 1 && ident.back() == 'i' &&
               std::find(decls_.cocycles.begin(), decls_.cocycles.end(),
                         ident.substr(0, ident.size() - 1)) != decls_.cocycles.end()) {
      name = ident.substr(0, ident.size() - 1);
      inverse = true;
    } else if (std::isupper(static_cast<unsigned char>(ident.front()))) {
      fail_at("undeclared cocycle '" + ident + "'", atom.column);
    } else {
      fail_at("unknown token '" + ident + "'", atom.column);
    }
    int copy = 0;
    while (peek() == '\'') {
      ++copy;
      ++pos_;
    }
    if (!inverse && copy > 0 && peek() == 'i') {  // X'i spells the same instance as Xi'
      inverse = true;
      ++pos_;
    }
    if (copy >= kMaxCopies) fail_at("too many primed copies of " + name, atom.column);
    if (peek() != '1' && peek() != '2') fail("cocycle leg must be 1 or 2");
    atom.leg = static_cast<std::size_t>(peek() - '0');
    ++pos_;
    if (peek() == '_') {
      ++pos_;
      atom.subleg = read_number("subleg index");
      if (atom.subleg == 0) fail_at("subleg indices start at 1", atom.column);
    }
    atom.kind = Atom::Kind::cocycle_leg;
    atom.source = instance_index(name, inverse, copy);
    inst_uses_[atom.source].push_back({atom.leg, atom.subleg, atom.column});
    return atom;
  }

  std::size_t instance_index(const std::string& name, bool inverse, int copy) {
    for (std::size_t k = 0; k < instances_.size(); ++k) {
      const auto& inst = instances_[k];
      if (inst.name == name && inst.inverse == inverse && inst.copy == copy) return k;
    }
    CocycleInstance inst;
    inst.name = name;
    inst.inverse = inverse;
    inst.copy = copy;
    instances_.push_back(inst);
    inst_uses_.emplace_back();
    return instances_.size() - 1;
  }

  void finish() {
    for (std::size_t v = 0; v < decls_.variables.size(); ++v) {
      auto uses = var_uses_[v];
      const auto& decl = decls_.variables[v];
      std::sort(uses.begin(), uses.end());
      for (std::size_t k = 0; k < uses.size(); ++k) {
        if (k > 0 && uses[k].first == uses[k - 1].first) {
          fail_at("duplicate leg " + decl.name + std::to_string(uses[k].first), uses[k].second);
        }
        if (uses[k].first != k + 1) {
          fail_at("non-contiguous legs: " + decl.name + std::to_string(uses[k].first) + " used without " +
                      decl.name + std::to_string(k + 1),
                  uses[k].second);
        }
      }
      const std::size_t depth = uses.size();
      if (depth > kMaxDepth) fail_at("variable depth exceeds 12", uses.back().second);
      if (decl.depth && *decl.depth != depth) {
        fail_at("variable " + decl.name + " declared with depth " + std::to_string(*decl.depth) +
                    " but used with depth " + std::to_string(depth),
                uses.empty() ? 1 : uses.front().second);
      }
      variables.push_back({decl.name, depth});
    }
    for (std::size_t k = 0; k < instances_.size(); ++k) {
      auto& inst = instances_[k];
      for (std::size_t leg = 1; leg <= 2; ++leg) {
        std::vector<std::pair<std::size_t, int>> subs;
        for (const auto& u : inst_uses_[k]) {
          if (u.leg == leg) subs.emplace_back(u.subleg, u.column);
        }
        const int where = inst_uses_[k].front().column;
        if (subs.empty()) fail_at(inst.spelling() + " is used without leg " + std::to_string(leg), where);
        std::sort(subs.begin(), subs.end());
        if (subs.front().first == 0) {
          if (subs.size() > 1) {
            fail_at("leg " + inst.spelling() + std::to_string(leg) + " used more than once", subs[1].second);
          }
          inst.split[leg - 1] = 1;
          continue;
        }
        for (std::size_t s = 0; s < subs.size(); ++s) {
          if (subs[s].first != s + 1) {
            fail_at("non-contiguous sublegs of " + inst.spelling() + std::to_string(leg), subs[s].second);
          }
        }
        if (subs.size() > kMaxDepth) fail_at("subleg depth exceeds 12", subs.back().second);
        inst.split[leg - 1] = subs.size();
      }
    }
    std::map<std::pair<std::string, bool>, int> copies;
    for (const auto& inst : instances_) {
      if (++copies[{inst.name, inst.inverse}] > kMaxCopies) {
        fail_at("more than 4 copies of " + inst.name, 1);
      }
    }
  }

 public:
  std::vector<VariableUse> variables;
  std::vector<CocycleInstance> instances_;
  std::vector<std::vector<Atom>> slots_;

 private:

  std::string_view text_;
  const Declarations& decls_;
  int line_;
  std::size_t pos_ = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> var_uses_;
  std::vector<std::vector<InstanceUse>> inst_uses_;
};

}  // namespace

Expr parse(std::string_view text, const Declarations& decls, int line) {
  Expr out;
  out.text_ = std::string(trim(text));
  out.decls_ = decls;
  Parser parser(text, decls, line);
  parser.run();
  out.variables_ = std::move(parser.variables);
  out.instances_ = std::move(parser.instances_);
  out.slots_ = std::move(parser.slots_);
  return out;
}

struct EvaluationContext::Cache {
  std::mutex mutex;
  std::map<std::size_t, LinearMap> coproducts;
  std::map<std::string, SparseTensor> expansions;
};

EvaluationContext::EvaluationContext(HopfAlgebra host, bool opposite)
    : host_(std::move(host)), opposite_(opposite), cache_(std::make_shared<Cache>()) {}

void EvaluationContext::bind_unchecked(const std::string& name, SparseTensor element,
                                       SparseTensor inverse) {
  const Shape expected{host_.dim(), host_.dim()};
  if (element.shape() != expected || inverse.shape() != expected) {
    throw EvaluationError("binding for " + name + " does not live in H (x) H");
  }
  bindings_[name] = Binding{std::move(element), std::move(inverse)};
  // Bindings changed: cached expansions are stale.
  cache_ = std::make_shared<Cache>();
}

void EvaluationContext::bind(const std::string& name, SparseTensor element, SparseTensor inverse) {
  const Shape expected{host_.dim(), host_.dim()};
  if (element.shape() != expected || inverse.shape() != expected) {
    throw EvaluationError("binding for " + name + " does not live in H (x) H");
  }
  const SparseTensor one = unit_power(host_, 2);
  if (multiply_in_power(host_, element, inverse) != one ||
      multiply_in_power(host_, inverse, element) != one) {
    throw EvaluationError("inverse bound for " + name + " is not a two-sided inverse");
  }
  bind_unchecked(name, std::move(element), std::move(inverse));
}

const LinearMap& EvaluationContext::coproduct_power(std::size_t k) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->coproducts.find(k);
  if (it == cache_->coproducts.end()) {
    it = cache_->coproducts.emplace(k, iterated_coproduct(host_, k)).first;
  }
  return it->second;
}

const SparseTensor& EvaluationContext::expanded_instance(const CocycleInstance& inst) const {
  auto b = bindings_.find(inst.name);
  if (b == bindings_.end()) throw EvaluationError("cocycle " + inst.name + " is not bound");
  const std::string key = inst.name + (inst.inverse ? "/i/" : "/e/") + std::to_string(inst.split[0]) +
                          "/" + std::to_string(inst.split[1]);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->expansions.find(key);
    if (it != cache_->expansions.end()) return it->second;
  }
  const LinearMap& left = coproduct_power(inst.split[0]);
  const LinearMap& right = coproduct_power(inst.split[1]);
  const SparseTensor& element = inst.inverse ? b->second.inverse : b->second.element;
  const std::size_t d = host_.dim();
  SparseTensor result(Shape(inst.split[0] + inst.split[1], d));
  for (const auto& [flat, c] : element.entries()) {
    SparseTensor l(left.codomain(), left.column(flat / d));
    SparseTensor r(right.codomain(), right.column(flat % d));
    result = result + c * outer(l, r);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->expansions.emplace(key, std::move(result)).first->second;
}

namespace {

constexpr char16_t kUnset = 0xFFFF;

struct Source {
  std::size_t offset = 0;
  std::size_t first_step = 0;
  std::vector<std::pair<std::u16string, Scalar>> entries;  // decoded leg values
};

}  // namespace

SparseTensor evaluate(const Expr& e, const EvaluationContext& ctx, std::span<const SparseVec> args) {
  const HopfAlgebra& h = ctx.host();
  const std::size_t d = h.dim();
  if (d >= kUnset) throw EvaluationError("algebra dimension too large for evaluation");
  if (args.size() != e.variables().size()) {
    throw EvaluationError("expected " + std::to_string(e.variables().size()) + " arguments, got " +
                          std::to_string(args.size()));
  }
  for (const auto& arg : args) {
    for (const auto& [i, v] : arg) {
      if (i >= d) throw EvaluationError("argument index outside the algebra basis");
    }
  }
  const std::size_t nvars = e.variables().size();
  std::vector<Source> sources(nvars + e.instances().size());
  Scalar prefactor(1);
  std::size_t width = 0;

  auto decode = [&](const SparseTensor& t, Source& src) {
    src.offset = width;
    width += t.rank();
    for (const auto& [flat, c] : t.entries()) {
      MultiIndex idx = unflatten(t.shape(), flat);
      src.entries.emplace_back(std::u16string(idx.begin(), idx.end()), c);
    }
  };
  for (std::size_t v = 0; v < nvars; ++v) {
    const std::size_t depth = e.variables()[v].depth;
    if (depth == 0) {
      prefactor *= h.counit_of(args[v]);
      continue;
    }
    const LinearMap& delta = ctx.coproduct_power(depth);
    decode(SparseTensor(delta.codomain(), delta.apply(args[v])), sources[v]);
  }
  for (std::size_t k = 0; k < e.instances().size(); ++k) {
    decode(ctx.expanded_instance(e.instances()[k]), sources[nvars + k]);
  }
  const std::size_t slots = e.slot_count();
  const std::size_t out_offset = width;
  const std::size_t cur = width + slots;
  const Shape out_shape(slots, d);
  if (prefactor.is_zero()) return SparseTensor(out_shape);

  auto position = [&](const Atom& a) {
    if (a.kind == Atom::Kind::variable_leg) return sources[a.source].offset + a.leg - 1;
    const auto& inst = e.instances()[a.source];
    const std::size_t sub = a.subleg == 0 ? 0 : a.subleg - 1;
    return sources[nvars + a.source].offset + (a.leg == 1 ? sub : inst.split[0] + sub);
  };
  auto source_of = [&](const Atom& a) {
    return a.kind == Atom::Kind::variable_leg ? a.source : nvars + a.source;
  };
  std::vector<bool> opened(sources.size(), false);

  std::map<int, LinearMap> antipode_powers;
  auto antipode_power = [&](int p) -> const LinearMap& {
    auto it = antipode_powers.find(p);
    if (it != antipode_powers.end()) return it->second;
    LinearMap m = LinearMap::identity({d});
    for (int i = 0; i < p; ++i) m = h.antipode().after(m);
    return antipode_powers.emplace(p, std::move(m)).first->second;
  };

  using StateMap = std::unordered_map<std::u16string, Scalar>;
  StateMap states;
  states.emplace(std::u16string(cur + 1, kUnset), prefactor);
  StateMap next;
  auto emit = [&](std::u16string key, const Scalar& c) {
    auto [it, inserted] = next.try_emplace(std::move(key), c);
    if (!inserted) it->second += c;
  };
  auto rotate = [&]() {
    states.clear();
    for (auto& [k, v] : next) {
      if (!v.is_zero()) states.emplace(k, std::move(v));
    }
    next.clear();
  };

  for (std::size_t s = 0; s < slots; ++s) {
    for (const Atom& atom : e.slots()[s]) {
      if (atom.kind == Atom::Kind::unit) continue;
      const std::size_t src = source_of(atom);
      const std::size_t pos = position(atom);
      const bool open_now = !opened[src];
      opened[src] = true;
      const LinearMap& spow = antipode_power(atom.antipode_power);
      for (const auto& [key, coef] : states) {
        auto consume = [&](std::u16string k, const Scalar& c) {
          const std::size_t q = k[pos];
          k[pos] = kUnset;
          const SparseVec& value = spow.column(q);
          const char16_t current = k[cur];
          for (const auto& [r, sv] : value) {
            if (current == kUnset) {
              k[cur] = static_cast<char16_t>(r);
              emit(k, c * sv);
              continue;
            }
            const SparseVec& prod = ctx.opposite() ? h.product(r, current) : h.product(current, r);
            for (const auto& [t, pv] : prod) {
              k[cur] = static_cast<char16_t>(t);
              emit(k, c * sv * pv);
            }
          }
        };
        if (open_now) {
          const auto& source = sources[src];
          for (const auto& [legs, c] : source.entries) {
            std::u16string k = key;
            std::copy(legs.begin(), legs.end(), k.begin() + static_cast<std::ptrdiff_t>(source.offset));
            consume(std::move(k), coef * c);
          }
        } else {
          consume(key, coef);
        }
      }
      rotate();
    }
    for (const auto& [key, coef] : states) {
      std::u16string k = key;
      if (k[cur] == kUnset) {
        for (const auto& [u, uv] : h.unit()) {
          k[out_offset + s] = static_cast<char16_t>(u);
          emit(k, coef * uv);
        }
      } else {
        k[out_offset + s] = k[cur];
        k[cur] = kUnset;
        emit(std::move(k), coef);
      }
    }
    rotate();
  }

  VecBuilder out;
  MultiIndex idx(slots);
  for (const auto& [key, coef] : states) {
    for (std::size_t s = 0; s < slots; ++s) idx[s] = key[out_offset + s];
    out.add(flatten(out_shape, idx), coef);
  }
  return SparseTensor(out_shape, std::move(out).build());
}

SparseTensor evaluate_basis(const Expr& e, const EvaluationContext& ctx,
                            std::span<const std::size_t> basis_indices) {
  std::vector<SparseVec> args;
  args.reserve(basis_indices.size());
  for (auto i : basis_indices) args.push_back(SparseVec{{i, Scalar(1)}});
  return evaluate(e, ctx, args);
}

LinearMap expression_map(const Expr& e, const EvaluationContext& ctx) {
  const std::size_t d = ctx.host().dim();
  const Shape domain(e.variables().size(), d);
  const Shape codomain(e.slot_count(), d);
  const std::uint64_t n = shape_size(domain);
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::uint64_t flat = 0; flat < n; ++flat) {
    cols.push_back(evaluate_basis(e, ctx, unflatten(domain, flat)).entries());
  }
  return LinearMap(domain, codomain, std::move(cols));
}

IdentityResult check_identity(const Expr& lhs, const Expr& rhs, const EvaluationContext& ctx) {
  if (lhs.slot_count() != rhs.slot_count()) {
    throw InputError("identity sides have " + std::to_string(lhs.slot_count()) + " and " +
                     std::to_string(rhs.slot_count()) + " tensor slots");
  }
  const auto& lv = lhs.variables();
  const auto& rv = rhs.variables();
  if (lv.size() != rv.size() ||
      !std::equal(lv.begin(), lv.end(), rv.begin(),
                  [](const auto& a, const auto& b) { return a.name == b.name; })) {
    throw InputError("identity sides declare different variables");
  }
  const std::size_t d = ctx.host().dim();
  const Shape assignment_shape(lv.size(), d);
  const std::uint64_t total = shape_size(assignment_shape);
  IdentityResult result;
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    const MultiIndex assignment = unflatten(assignment_shape, flat);
    SparseTensor a = evaluate_basis(lhs, ctx, assignment);
    SparseTensor b = evaluate_basis(rhs, ctx, assignment);
    ++result.assignments_checked;
    if (a != b) {
      result.passed = false;
      result.witness = assignment;
      result.lhs = std::move(a);
      result.rhs = std::move(b);
      break;
    }
  }
  return result;
}

}  // namespace hopfkit::sweedler
