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

// Acceptance run: one line per criterion, each under a pinned wall-time limit.
//
//   hopfkit_acceptance --cli PATH --data DIR --fixtures DIR --work DIR [--criterion N]...
//
// Exit status is 0 when every selected criterion passes.

#include <CLI11.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/bicrossproduct.hpp"
#include "hopfkit/commands.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/io.hpp"
#include "hopfkit/sweedler.hpp"
#include "hopfkit/twist.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace hopfkit;

namespace {

struct Paths {
  std::string cli;
  fs::path data;
  fs::path fixtures;
  fs::path work;
};

// Collects failed expectations; the first few are printed under the line.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failures_.empty() && checked_ > 0; }
  std::size_t checked() const { return checked_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&, const Paths&)> body;
};

struct Named {
  std::string name;
  HopfAlgebra h;
};

std::vector<Named> shipped() {
  return {{"kZ2", group_algebra(testing::cyclic_table(2))},
          {"K4", group_algebra(testing::klein_table())},
          {"kS3", group_algebra(testing::s3_table())},
          {"H4", sweedler_h4()}};
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.unit() == b.unit() && a.mult() == b.mult() && a.comult() == b.comult() &&
         a.counit() == b.counit() && a.antipode() == b.antipode();
}

Cocycle klein_cocycle() {
  auto v = verify_cocycle(group_algebra(testing::klein_table()), testing::klein_bicharacter());
  if (!v.cocycle) throw std::runtime_error("bicharacter oracle is not a cocycle");
  return *v.cocycle;
}

QuasitriangularStructure h4_r() {
  auto q = verify_quasitriangular(sweedler_h4(), testing::h4_r0());
  if (!q.structure) throw std::runtime_error("R0 oracle is not quasitriangular");
  return *q.structure;
}

// Whole-identity check of a map expressed by a Sweedler expression against
// a LinearMap on the same flat basis.
bool matches_expression(const LinearMap& m, const std::string& decls, const std::string& text,
                        const sweedler::EvaluationContext& ctx) {
  const auto d = sweedler::Declarations::parse(decls);
  const auto e = sweedler::parse(text, d);
  const auto em = sweedler::expression_map(e, ctx);
  if (em.domain_size() != m.domain_size()) return false;
  for (std::uint64_t j = 0; j < m.domain_size(); ++j)
    if (em.column(j) != m.column(j)) return false;
  return true;
}

// Delta_total(theta(x)) == (theta (x) theta)(inner(x)) on every basis x of
// the two-variable domain, inner given as a Sweedler expression.
bool comult_through_theta(const Bicrossproduct& b, const HopfAlgebra& total, const std::string& decls,
                          const std::string& inner, const sweedler::EvaluationContext& ctx,
                          Outcome& out, const std::string& label) {
  const auto e = sweedler::parse(inner, sweedler::Declarations::parse(decls));
  const auto tt = tensor_product(b.theta, b.theta);
  const std::size_t n = b.data.h_part.dim(), m = b.data.a_part.dim();
  bool all = true;
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t a = 0; a < m; ++a) {
      const std::vector<std::size_t> idx{h, a};
      const auto v = sweedler::evaluate_basis(e, ctx, idx);
      const SparseTensor rhs = tt.apply(SparseTensor(tt.domain(), v.entries()));
      const SparseTensor lhs(total.comult().codomain(), total.comult().apply(b.theta.column(h * m + a)));
      const bool ok = lhs.entries() == rhs.entries();
      out.expect(ok, label + " at basis pair (" + std::to_string(h) + ", " + std::to_string(a) + ")");
      all = all && ok;
    }
  }
  return all;
}

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

const io::IdentityLine& identity(const std::vector<io::IdentityLine>& lines, const std::string& name) {
  for (const auto& l : lines)
    if (l.name == name) return l;
  throw std::runtime_error("identity '" + name + "' missing");
}

// ---------------------------------------------------------------------------

void c01_axioms(Outcome& out, const Paths&) {
  std::size_t n = 0;
  for (const auto& [name, h] : shipped()) {
    const std::vector<std::pair<std::string, HopfAlgebra>> family = {
        {name, h},
        {name + "^op", structural_variant(h, Variant::op)},
        {name + "^cop", structural_variant(h, Variant::cop)},
        {name + "^op,cop", structural_variant(h, Variant::op_cop)},
        {name + "*", dual_hopf(h)},
        {name + "(x)" + name, tensor_hopf(h, h)}};
    for (const auto& [label, a] : family) {
      out.expect(validate_hopf(a).passed(), "axioms of " + label);
      ++n;
    }
  }
  out.note(std::to_string(n) + " algebras");
}

void c02_twisted_klein(Outcome& out, const Paths&) {
  const auto c = klein_cocycle();
  const auto b = assemble(twisted_mirror_data(c.host, c));
  out.expect(b.total.dim() == 16, "total has dimension 16");
  out.expect(validate_hopf(b.total).passed(), "axioms of the total");
  out.expect(check_morphism(b.theta, b.source, b.total).is_isomorphism(), "theta is a Hopf isomorphism");

  sweedler::EvaluationContext ctx(c.host);
  ctx.bind("X", c.element, c.inverse);
  comult_through_theta(b, b.explicit_total, "h, a, cocycle X", "h1 (x) X1 a1 Xi1 (x) h2 (x) X2 a2 Xi2", ctx,
                       out, "explicit coproduct through theta");

  for (const auto& r : b.checks) out.expect(r.passed, "assembly check " + r.name);
  out.expect(same_structure(b.total, b.explicit_total), "transported and explicit totals agree");
}

void c03_chains(Outcome& out, const Paths& p) {
  const auto lines = io::load_identities(p.data / "identities/coaction_chains.sw");
  const auto& chain1 = identity(lines, "chain1");
  const auto& chain2 = identity(lines, "chain2");

  struct Case {
    std::string label;
    HopfAlgebra host;
    SparseTensor element, inverse, corrupted;
  };
  const auto k = klein_cocycle();
  const auto r = h4_r();
  // perturbed element paired with the stale inverse: X Xi != 1
  const Case cases[] = {
      {"K4/bicharacter", k.host, k.element, k.inverse,
       k.element + SparseTensor({4, 4}, {{{1, 2}, Scalar(1)}})},
      {"H4/R0", r.host, r.r, r.r_inverse, r.r + SparseTensor({4, 4}, {{{2, 3}, Scalar(1)}})}};

  for (const auto& c : cases) {
    sweedler::EvaluationContext ctx(c.host);
    ctx.bind("X", c.element, c.inverse);
    for (const auto* l : {&chain1, &chain2})
      out.expect(sweedler::check_identity(l->lhs, l->rhs, ctx).passed, l->name + " on " + c.label);

    sweedler::EvaluationContext bad(c.host);
    bad.bind_unchecked("X", c.corrupted, c.inverse);
    for (const auto* l : {&chain1, &chain2}) {
      const auto res = sweedler::check_identity(l->lhs, l->rhs, bad);
      out.expect(!res.passed && res.witness.has_value(),
                 l->name + " fails with a witness on corrupted " + c.label);
    }
  }
}

void c04_mbar(Outcome& out, const Paths&) {
  const auto h = sweedler_h4();
  const auto b = assemble(mbar_data(h));
  out.expect(validate_hopf(b.total).passed(), "axioms of the total");
  out.expect(check_morphism(b.theta, b.source, b.total).is_isomorphism(), "theta is a Hopf isomorphism");
  sweedler::EvaluationContext ctx(h);
  out.expect(matches_expression(b.theta, "h, g", "h1 (x) S(h2) g1", ctx), "theta(h (x) g) = h1 (x) S(h2) g");

  // Delta theta = (theta (x) theta) Delta_{H (x) H}
  const auto tt = tensor_product(b.theta, b.theta);
  for (std::uint64_t j = 0; j < b.source.dim(); ++j) {
    const auto lhs = b.total.comult().apply(b.theta.column(j));
    const auto rhs = tt.apply(b.source.comult().column(j));
    out.expect(lhs == rhs, "coalgebra map at basis " + std::to_string(j));
  }
  for (const auto& r : b.checks) out.expect(r.passed, "assembly check " + r.name);
}

void c05_trivial_cocycle(Outcome& out, const Paths&) {
  for (const auto& [name, h] : shipped()) {
    const auto v = verify_cocycle(h, unit_power(h, 2));
    out.expect(v.passed(), "1 (x) 1 is a cocycle on " + name);
    if (!v.passed()) continue;
    const auto t = twisted_mirror_data(h, *v.cocycle);
    const auto m = mirror_data(h);
    out.expect(t.dual_cocycle == m.dual_cocycle, "psi on " + name);
    const auto bt = assemble(t);
    const auto bm = assemble(m);
    out.expect(same_structure(bt.total, bm.total), "total on " + name);
    out.expect(bt.theta == bm.theta, "theta on " + name);
  }
}

void c06_untwist(Outcome& out, const Paths&) {
  const auto k = klein_cocycle();
  const auto h4 = sweedler_h4();
  const auto rc = verify_cocycle(h4, testing::h4_r0());
  out.expect(rc.passed(), "R0 is a cocycle on H4");
  if (!rc.passed()) return;
  for (const auto& [label, c] : {std::pair{std::string("K4/bicharacter"), k}, {std::string("H4/R0"), *rc.cocycle}}) {
    const auto twisted = twist_hopf(c);
    const auto back = verify_cocycle(twisted, c.inverse);
    out.expect(back.passed(), "inverse is a cocycle of the twist on " + label);
    if (back.passed()) out.expect(same_structure(twist_hopf(*back.cocycle), c.host), "untwisting returns " + label);
  }
  const std::array<std::size_t, 2> swap{1, 0};
  const auto flip = LinearMap::permutation({4, 4}, swap).after(h4.comult());
  out.expect(twist_hopf(*rc.cocycle).comult() == flip, "twist by R0 is flip o Delta");
}

void c07_display(Outcome& out, const Paths&) {
  const auto r = h4_r();
  const auto rc = r_as_cocycle(r);
  out.expect(rc.passed(), "R0 is a cocycle");
  if (!rc.passed()) return;
  const auto data = twisted_mirror_data(rc.cocycle->host, *rc.cocycle);
  sweedler::EvaluationContext ctx(r.host);
  ctx.bind("R", r.r, r.r_inverse);
  const auto e = sweedler::parse("h1 S(h4) (x) g1 R1 S(g2) Ri1 (x) h2 R2 S(h3) Ri2 (x) 1",
                                 sweedler::Declarations::parse("h, g, cocycle R"));
  for (std::size_t h = 0; h < 4; ++h) {
    for (std::size_t g = 0; g < 4; ++g) {
      const std::vector<std::size_t> idx{h, g};
      const auto disp = sweedler::evaluate_basis(e, ctx, idx);
      out.expect(disp.entries() == data.dual_cocycle.column(h * 4 + g),
                 "display at basis (" + std::to_string(h) + ", " + std::to_string(g) + ")");
    }
  }
}

void c08_extension(Outcome& out, const Paths&) {
  out.expect(check_extension(assemble(mirror_data(group_algebra(testing::s3_table())))).passed(),
             "extension of the mirror product of kS3");
  const auto k = klein_cocycle();
  out.expect(check_extension(assemble(twisted_mirror_data(k.host, k))).passed(),
             "extension of the twisted mirror product of K4");
}

void c09_coincidence(Outcome& out, const Paths& p) {
  const auto hopf = p.data / "h4.json";
  const auto rmatrix = p.data / "r0_h4.json";
  const auto first = io::report_to_json(commands::coincide(hopf, rmatrix, {}).report);
  const auto path = p.work / "coincidence_h4_r0.json";
  io::write_text(path, first);
  const auto again = io::report_to_json(commands::coincide(hopf, rmatrix, {}).report);
  out.expect(slurp(path) == first, "report persisted");
  out.expect(again == first, "report is deterministic");

  const auto report = commands::coincide(hopf, rmatrix, {}).report;
  const auto it = report.outcomes.find("coincides");
  out.expect(it != report.outcomes.end(), "outcome recorded");
  if (it != report.outcomes.end()) out.note("coincides=" + it->second);
  // the recorded outcome must agree with an independent computation
  const auto direct = quasitriangular_coincidence(sweedler_h4(), h4_r());
  if (it != report.outcomes.end())
    out.expect(it->second == (direct.coincides() ? "true" : "false"), "recorded outcome matches recomputation");
  out.note("report " + path.string());
}

void c10_contraction(Outcome& out, const Paths&) {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 3), dim_dist(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Shape sa(rank_dist(rng)), sb(rank_dist(rng));
    for (auto& d : sa) d = dim_dist(rng);
    for (auto& d : sb) d = dim_dist(rng);
    std::uniform_int_distribution<std::size_t> npairs(0, std::min(sa.size(), sb.size()));
    const std::size_t k = npairs(rng);
    std::vector<std::size_t> la(sa.size()), lb(sb.size());
    for (std::size_t i = 0; i < la.size(); ++i) la[i] = i;
    for (std::size_t i = 0; i < lb.size(); ++i) lb[i] = i;
    std::shuffle(la.begin(), la.end(), rng);
    std::shuffle(lb.begin(), lb.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
      sb[lb[i]] = sa[la[i]];
      pairs.emplace_back(la[i], lb[i]);
    }
    const auto a = testing::random_tensor(rng, sa);
    const auto b = testing::random_tensor(rng, sb);
    out.expect(tensor_contract(a, b, pairs) == testing::dense_contract(a, b, pairs),
               "contraction instance " + std::to_string(trial));
  }
  for (const auto& [name, h] : shipped()) {
    const auto inv = convolution_inverse(LinearMap::identity({h.dim()}), h, h);
    out.expect(inv.has_value() && *inv == h.antipode(), "convolution inverse of id is S on " + name);
  }
}

void c11_cli(Outcome& out, const Paths& p) {
  const auto r1 = p.work / "cli_report_1.json";
  const auto r2 = p.work / "cli_report_2.json";
  const std::string base = q(p.cli) + " mirror-twisted " + q(p.data / "kz2xz2.json") + " " + q(p.data / "bichar.json") + " -q --report ";
  out.expect(shell(base + q(r1)).code == 0, "first run exits 0");
  out.expect(shell(base + q(r2)).code == 0, "second run exits 0");
  const auto a = slurp(r1);
  out.expect(!a.empty() && a == slurp(r2), "reports are byte-identical");

  struct Expect {
    std::string args;
    int code;
  };
  const Expect cases[] = {
      {"check " + q(p.data / "kz2.json"), 0},
      {"check " + q(p.data / "h4.json"), 0},
      {"check " + q(p.fixtures / "kz2_zero_antipode_g.json"), 1},
      {"prove " + q(p.data / "h4.json") + " " + q(p.fixtures / "chains_corrupted.sw"), 1},
      {"check " + q(p.fixtures / "malformed.json"), 2},
      {"check " + q(p.fixtures / "kz2_mult_wrong_shape.json"), 2},
      {"prove " + q(p.data / "h4.json") + " " + q(p.fixtures / "chains_unparsable.sw"), 2}};
  for (const auto& c : cases) {
    const auto r = shell(q(p.cli) + " " + c.args + " -q");
    out.expect(r.code == c.code, "exit " + std::to_string(c.code) + " for: " + c.args + " (got " +
                                     std::to_string(r.code) + ")");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit acceptance criteria"};
  Paths paths;
  std::string data, fixtures, work;
  std::vector<int> selected;
  app.add_option("--cli", paths.cli, "hopfkit executable")->required();
  app.add_option("--data", data, "Shipped data directory")->required();
  app.add_option("--fixtures", fixtures, "Test fixtures directory")->required();
  app.add_option("--work", work, "Scratch directory")->required();
  app.add_option("--criterion", selected, "Run only these criteria (1-11)");
  CLI11_PARSE(app, argc, argv);
  paths.data = data;
  paths.fixtures = fixtures;
  paths.work = work;
  fs::create_directories(paths.work);

  const std::vector<Criterion> criteria = {
      {1, "axiom suite on shipped algebras and variants", 5, c01_axioms},
      {2, "twisted mirror product of K4 by the bicharacter", 10, c02_twisted_klein},
      {3, "coaction chains and corrupted cocycle", 30, c03_chains},
      {4, "mbar product of H4", 10, c04_mbar},
      {5, "trivial cocycle reproduces the mirror product", 5, c05_trivial_cocycle},
      {6, "untwisting and the R0 twist", 5, c06_untwist},
      {7, "R-matrix display of psi on H4", 30, c07_display},
      {8, "extension checks", 10, c08_extension},
      {9, "coincidence report on H4 with R0", 30, c09_coincidence},
      {10, "contraction oracle and convolution inverse", 10, c10_contraction},
      {11, "command line determinism and exit codes", 5, c11_cli},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    ++ran;
    Outcome out;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out, paths);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = error.empty() && out.passed() && in_time;
    if (!ok) ++failed;

    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << "C" << std::setw(2) << std::setfill('0') << c.id << " " << c.name
         << " (" << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0)
         << c.limit_seconds << " s, " << out.checked() << " checks";
    for (const auto& n : out.notes()) line << ", " << n;
    line << ")";
    std::cout << line.str() << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (!in_time) std::cout << "    over the time limit\n";
    for (std::size_t k = 0; k < out.failures().size() && k < 5; ++k)
      std::cout << "    failed: " << out.failures()[k] << "\n";
  }
  std::cout << ran - failed << "/" << ran << " criteria passed\n";
  return failed == 0 && ran > 0 ? 0 : 1;
}
