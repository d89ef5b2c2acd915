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

#include "hopfkit/commands.hpp"

#include <chrono>
#include <limits>
#include <set>

#include "hopfkit/errors.hpp"
#include "hopfkit/linsolve.hpp"

namespace hopfkit::commands {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Appends checks; each entry is timed from the previous one.
class Recorder {
 public:
  explicit Recorder(io::VerificationReport& report) : report_(report), last_(Clock::now()) {}

  void add(std::string id, bool passed, std::optional<MultiIndex> witness = {}, std::string detail = {}) {
    const auto now = Clock::now();
    report_.checks.push_back({std::move(id), passed, passed ? std::nullopt : std::move(witness),
                              std::move(detail), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

  void axioms(const std::string& prefix, const HopfValidation& v) {
    for (const auto& a : v.axioms) add(prefix + a.name, a.passed, a.witness);
  }

  void conditions(const std::string& prefix, const std::vector<ConditionResult>& cs) {
    for (const auto& c : cs) add(prefix + c.name, c.passed, c.witness);
  }

  void morphism(const std::string& id, const HopfMorphismReport& m, bool bijective) {
    const bool ok = bijective ? m.is_isomorphism() : m.is_hopf_morphism();
    if (ok || m.failing_basis_indices.empty()) {
      add(id, ok, {}, ok ? "" : "rank " + std::to_string(m.rank));
    } else {
      const auto& f = m.failing_basis_indices.front();
      add(id, false, f.index, f.check);
    }
  }

  bool failed() const { return !report_.passed(); }

 private:
  io::VerificationReport& report_;
  Clock::time_point last_;
};

std::size_t cap(const Options& opts) {
  return opts.force ? std::numeric_limits<std::size_t>::max() : opts.max_dim;
}

void guard(std::size_t dim, const Options& opts, const std::string& what) {
  if (dim > cap(opts))
    throw InputError(what + " has dimension " + std::to_string(dim) + ", above the cap of " +
                     std::to_string(opts.max_dim) + "; pass --force to proceed");
}

io::VerificationReport start(std::string construction, const Options& opts) {
  io::VerificationReport r;
  r.construction = std::move(construction);
  r.field = opts.field.name();
  return r;
}

// Loads a definition and, unless skipped, records its axiom checks.
HopfAlgebra load_input(const fs::path& path, const Options& opts, io::VerificationReport& report,
                       Recorder& rec) {
  auto h = io::load_hopf(path, opts.field);
  report.inputs["hopf"] = io::digest(path);
  guard(h.dim(), opts, "input algebra");
  if (!opts.skip_verify) rec.axioms("input.", validate_hopf(h, cap(opts)));
  return h;
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.dim() == b.dim() && a.with_labels(b.labels()) == b;
}

io::ElementFile load_on(const fs::path& path, const HopfAlgebra& h, const Options& opts,
                        const std::string& role) {
  auto e = io::load_element(path, opts.field, &h);
  if (e.host_from_file && !same_structure(e.host, h))
    throw InputError(role + " file '" + path.filename().string() +
                     "' is defined on a different host algebra");
  e.host = h;
  return e;
}

std::string dims(const HopfAlgebra& h) { return std::to_string(h.dim()); }

void record_assembly(const Bicrossproduct& b, const Options& opts, const std::string& prefix, Recorder& rec) {
  rec.conditions(prefix + "assembly.", b.checks);
  rec.axioms(prefix + "total.", validate_hopf(b.total, cap(opts)));
  rec.morphism(prefix + "theta.hopf_isomorphism", check_morphism(b.theta, b.source, b.total), true);
}

}  // namespace

Result check(const fs::path& hopf, const Options& opts) {
  Result out{start("check", opts), std::nullopt};
  Recorder rec(out.report);
  auto h = io::load_hopf(hopf, opts.field);
  out.report.inputs["hopf"] = io::digest(hopf);
  guard(h.dim(), opts, "input algebra");
  rec.axioms("axiom.", validate_hopf(h, cap(opts)));
  const auto s_rank = rank(h.antipode());
  rec.add("antipode.invertible", s_rank == h.dim(), MultiIndex{}, "rank " + std::to_string(s_rank));
  out.report.outcomes["dim"] = dims(h);
  out.artifact = std::move(h);
  return out;
}

Result twist(const fs::path& hopf, const fs::path& cocycle, const Options& opts) {
  Result out{start("twist", opts), std::nullopt};
  Recorder rec(out.report);
  const auto h = load_input(hopf, opts, out.report, rec);
  if (rec.failed()) return out;
  const auto e = load_on(cocycle, h, opts, "cocycle");
  out.report.inputs["cocycle"] = io::digest(cocycle);

  const auto v = verify_cocycle(h, e.element);
  rec.conditions("cocycle.", v.conditions);
  if (!v.passed()) return out;
  const auto twisted = twist_hopf(*v.cocycle);
  rec.axioms("twisted.", validate_hopf(twisted, cap(opts)));

  // chi^-1 is a cocycle for H_chi and twisting by it gives H back.
  const auto back = verify_cocycle(twisted, v.cocycle->inverse);
  rec.add("untwist.inverse_is_cocycle", back.passed(),
          back.failure() ? back.failure()->witness : std::nullopt,
          back.failure() ? back.failure()->name : "");
  if (back.passed()) {
    const auto h2 = twist_hopf(*back.cocycle);
    const auto c = compare_condition("comult", h2.comult().to_tensor(), h.comult().to_tensor());
    const auto s = compare_condition("antipode", h2.antipode().to_tensor(), h.antipode().to_tensor());
    const auto& bad = c.passed ? s : c;
    rec.add("untwist.returns_host", c.passed && s.passed, bad.witness, bad.passed ? "" : bad.name);
  }
  out.report.outcomes["dim"] = dims(twisted);
  out.artifact = twisted;
  return out;
}

Result construction(Construction kind, const fs::path& hopf, const std::optional<fs::path>& cocycle,
                    const Options& opts) {
  if ((kind == Construction::twisted_mirror) != cocycle.has_value())
    throw InputError(kind == Construction::twisted_mirror ? "twisted_mirror needs a cocycle file"
                                                          : to_string(kind) + " takes no cocycle");
  Result out{start(to_string(kind), opts), std::nullopt};
  Recorder rec(out.report);
  const auto h = load_input(hopf, opts, out.report, rec);
  if (rec.failed()) return out;
  guard(h.dim() * h.dim(), opts, "total algebra");

  std::optional<CrossData> data;
  switch (kind) {
    case Construction::mirror:
      data = mirror_data(h);
      break;
    case Construction::mbar:
      data = mbar_data(h);
      break;
    case Construction::twisted_mirror: {
      const auto e = load_on(*cocycle, h, opts, "cocycle");
      out.report.inputs["cocycle"] = io::digest(*cocycle);
      const auto v = verify_cocycle(h, e.element);
      rec.conditions("cocycle.", v.conditions);
      if (!v.passed()) return out;
      data = twisted_mirror_data(h, *v.cocycle);
      break;
    }
  }
  const auto b = assemble(*data);
  record_assembly(b, opts, "", rec);
  const auto ext = check_extension(b);
  rec.morphism("extension.iota", ext.iota, false);
  rec.add("extension.iota_injective", ext.iota.is_injective, MultiIndex{},
          "rank " + std::to_string(ext.iota.rank));
  rec.morphism("extension.pi", ext.pi, false);
  rec.add("extension.pi_surjective", ext.pi.is_surjective, MultiIndex{},
          "rank " + std::to_string(ext.pi.rank));
  rec.add("extension.composite_trivial", ext.composite_is_trivial);
  out.report.outcomes["dim"] = dims(b.total);
  out.artifact = b.total;
  return out;
}

Result construct(const fs::path& request, const Options& opts) {
  const auto r = io::load_request(request);
  auto out = construction(r.construction, r.hopf, r.cocycle, opts);
  out.report.inputs["request"] = io::digest(request);
  return out;
}

Result prove(const fs::path& hopf, const fs::path& identities,
             const std::map<std::string, fs::path>& cocycles, const Options& opts) {
  Result out{start("prove", opts), std::nullopt};
  Recorder rec(out.report);
  const auto h = load_input(hopf, opts, out.report, rec);
  if (rec.failed()) return out;
  const auto lines = io::load_identities(identities);
  out.report.inputs["identities"] = io::digest(identities);

  std::set<std::string> declared;
  for (const auto& l : lines)
    for (const auto& c : l.declarations.cocycles) declared.insert(c);
  for (const auto& [name, _] : cocycles)
    if (!declared.count(name)) throw InputError("cocycle '" + name + "' is not declared by any identity");

  sweedler::EvaluationContext ctx(h);
  for (const auto& name : declared) {
    const auto it = cocycles.find(name);
    if (it == cocycles.end()) {
      const auto one = unit_power(h, 2);
      ctx.bind(name, one, one);
      out.report.outcomes["binding." + name] = "trivial";
      continue;
    }
    const auto e = load_on(it->second, h, opts, "cocycle");
    out.report.inputs["cocycle." + name] = io::digest(it->second);
    const auto v = verify_cocycle(h, e.element);
    rec.conditions("cocycle." + name + ".", v.conditions);
    if (!v.passed()) return out;
    ctx.bind(name, v.cocycle->element, v.cocycle->inverse);
    out.report.outcomes["binding." + name] = it->second.filename().string();
  }

  for (const auto& l : lines) {
    const auto r = sweedler::check_identity(l.lhs, l.rhs, ctx);
    rec.add("identity." + l.name, r.passed, r.witness, "line " + std::to_string(l.line));
  }
  return out;
}

Result coincide(const fs::path& hopf, const fs::path& rmatrix, const Options& opts) {
  Result out{start("coincide", opts), std::nullopt};
  Recorder rec(out.report);
  const auto h = load_input(hopf, opts, out.report, rec);
  if (rec.failed()) return out;
  guard(h.dim() * h.dim(), opts, "total algebra");
  const auto e = load_on(rmatrix, h, opts, "R-matrix");
  out.report.inputs["rmatrix"] = io::digest(rmatrix);

  const auto q = verify_quasitriangular(h, e.element);
  rec.conditions("quasitriangular.", q.conditions);
  if (!q.passed()) return out;
  const auto c = quasitriangular_coincidence(h, *q.structure);
  record_assembly(c.twisted, opts, "twisted.", rec);
  record_assembly(c.mbar, opts, "mbar.", rec);
  rec.morphism("comparison.through_theta", c.through_theta, true);
  rec.morphism("comparison.direct", c.direct, true);

  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  out.report.outcomes["coincides"] = yes(c.coincides());
  out.report.outcomes["direct.algebra_map"] = yes(c.direct.is_algebra_map);
  out.report.outcomes["direct.coalgebra_map"] = yes(c.direct.is_coalgebra_map);
  out.report.outcomes["direct.unit_counit"] = yes(c.direct.is_unit_counit_preserving);
  out.report.outcomes["direct.rank"] = std::to_string(c.direct.rank);
  out.report.outcomes["dim"] = dims(c.twisted.total);
  return out;
}

std::vector<std::vector<std::size_t>> klein_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

std::vector<std::vector<std::size_t>> s3_table() {
  static const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::size_t c[3];
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k][0] == c[0] && perms[k][1] == c[1] && perms[k][2] == c[2]) t[a][b] = k;
    }
  }
  return t;
}

std::vector<std::string> builtin_names() { return {"kz2", "kz2xz2", "s3", "h4", "bichar", "r0"}; }

HopfAlgebra builtin_hopf(const std::string& name, Field field) {
  if (name == "kz2") return group_algebra({{0, 1}, {1, 0}}, {"e", "g"}).to_field(field);
  if (name == "kz2xz2") return group_algebra(klein_table(), {"e", "a", "b", "ab"}).to_field(field);
  if (name == "s3")
    return group_algebra(s3_table(), {"e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"}).to_field(field);
  if (name == "h4") return sweedler_h4().to_field(field);
  throw InputError("unknown builtin algebra '" + name + "'");
}

SparseTensor builtin_element(const std::string& name, Field field) {
  if (name == "bichar") {
    // omega(phi, psi) = -1 exactly when phi is odd on b and psi is odd on a.
    const auto table = klein_table();
    const auto chars = characters(table, field);
    const std::size_t n = chars.values.size();
    std::vector<std::vector<Scalar>> omega(n, std::vector<Scalar>(n, Scalar(1)));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!chars.values[p][2].is_one() && !chars.values[q][1].is_one()) omega[p][q] = Scalar(-1);
    const auto v = bicharacter_cocycle(table, omega, field);
    if (!v.passed()) throw InternalError("builtin bicharacter is not a cocycle");
    return v.cocycle->element;
  }
  if (name == "r0") {
    return to_field(SparseTensor({4, 4}, {{{0, 0}, Scalar(1, 2)},
                                          {{0, 1}, Scalar(1, 2)},
                                          {{1, 0}, Scalar(1, 2)},
                                          {{1, 1}, Scalar(-1, 2)}}),
                    field);
  }
  throw InputError("unknown builtin element '" + name + "'");
}

std::string builtin_file(const std::string& name, Field field) {
  if (name == "bichar") {
    const auto host = builtin_hopf("kz2xz2", field);
    return io::element_to_json(builtin_element(name, field), &host);
  }
  if (name == "r0") {
    const auto host = builtin_hopf("h4", field);
    return io::element_to_json(builtin_element(name, field), &host);
  }
  return io::hopf_to_json(builtin_hopf(name, field));
}

}  // namespace hopfkit::commands
