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

// hopfkit command line. Exit codes: 0 every check passed, 1 a check failed,
// 2 input or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hopfkit/hopfkit.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Global {
  std::string field = "q";
  bool skip_verify = false;
  bool force = false;
  size_t max_dim = 64;
  std::string report;
  bool timings = false;
  bool quiet = false;
};

int input_error(hk_status s) {
  std::cerr << "hopfkit: " << hk_status_name(s) << ": " << hk_last_error() << "\n";
  return kUsage;
}

void print_check(const hk_check_info& c) {
  std::cout << (c.passed ? "ok   " : "FAIL ") << c.id;
  if (!c.passed) {
    if (*c.detail) std::cout << " (" << c.detail << ")";
    if (c.witness) {
      std::cout << " witness [";
      for (size_t k = 0; k < c.witness_len; ++k) std::cout << (k ? ", " : "") << c.witness[k];
      std::cout << "]";
    }
  }
  std::cout << "\n";
}

// Prints, persists and turns a report into the exit code.
int finish(hk_report* r, const Global& g, const std::string& output) {
  const size_t n = hk_report_check_count(r);
  size_t failed = 0;
  for (size_t k = 0; k < n; ++k) {
    hk_check_info c;
    hk_report_check(r, k, &c);
    if (!c.passed) ++failed;
    if (!g.quiet || !c.passed) print_check(c);
  }
  std::cout << hk_report_construction(r) << ": " << n << " checks, " << failed << " failed\n";

  int code = hk_report_passed(r) ? kPass : kFail;
  if (!g.report.empty()) {
    if (hk_status s = hk_report_write(r, g.report.c_str(), g.timings ? 1 : 0); s != HK_OK)
      code = input_error(s);
  }
  if (code != kUsage && !output.empty()) {
    hk_hopf* h = nullptr;
    hk_status s = hk_report_artifact(r, &h);
    if (s == HK_OK) s = hk_hopf_save(h, output.c_str());
    hk_hopf_free(h);
    if (s != HK_OK) code = input_error(s);
  }
  hk_report_free(r);
  return code;
}

// `call` fills the report; the status decides between finishing and exit 2.
int run(const std::function<hk_status(hk_report**)>& call, const Global& g,
        const std::string& output = {}) {
  hk_report* r = nullptr;
  if (hk_status s = call(&r); s != HK_OK) return input_error(s);
  return finish(r, g, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Hopf algebras: twisting, mirror products and identity checking"};
  app.set_version_flag("--version", std::string(hk_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--field", g.field, "Coefficient field: q, fp:<prime>, or fp (prime from HOPFKIT_PRIME)");
  app.add_flag("--skip-verify", g.skip_verify, "Do not run the axiom suite on loaded definitions");
  app.add_flag("--force", g.force, "Allow dimensions above --max-dim");
  app.add_option("--max-dim", g.max_dim, "Dimension cap for exhaustive checks")->check(CLI::PositiveNumber);
  app.add_option("--report", g.report, "Write the verification report (JSON) to this path");
  app.add_flag("--timings", g.timings, "Include wall-times in the report");
  app.add_flag("-q,--quiet", g.quiet, "Only print failing checks and the summary");

  std::string hopf, second, output, builtin;
  std::vector<std::string> bindings;
  std::function<int()> action;

  auto opts = [&] {
    hk_options o;
    hk_options_default(&o);
    o.field = g.field.c_str();
    o.skip_verify = g.skip_verify;
    o.force = g.force;
    o.max_dim = g.max_dim;
    return o;
  };

  auto* check = app.add_subcommand("check", "Run the Hopf axiom suite on a definition");
  check->add_option("hopf", hopf, "Hopf algebra definition")->required();
  check->callback([&] {
    action = [&] {
      const auto o = opts();
      return run([&](hk_report** r) { return hk_check(hopf.c_str(), &o, r); }, g);
    };
  });

  auto* twist = app.add_subcommand("twist", "Twist by a cocycle and verify the result");
  twist->add_option("hopf", hopf, "Hopf algebra definition")->required();
  twist->add_option("cocycle", second, "Cocycle file")->required();
  twist->add_option("-o,--output", output, "Write the twisted algebra here");
  twist->callback([&] {
    action = [&] {
      const auto o = opts();
      return run([&](hk_report** r) { return hk_twist(hopf.c_str(), second.c_str(), &o, r); }, g, output);
    };
  });

  for (const char* kind : {"mirror", "mbar"}) {
    auto* sub = app.add_subcommand(kind, std::string("Assemble and verify the ") + kind + " product");
    sub->add_option("hopf", hopf, "Hopf algebra definition")->required();
    sub->add_option("-o,--output", output, "Write the total algebra here");
    sub->callback([&, kind] {
      action = [&, kind] {
        const auto o = opts();
        return run([&](hk_report** r) { return hk_construction(kind, hopf.c_str(), nullptr, &o, r); }, g, output);
      };
    });
  }

  auto* mt = app.add_subcommand("mirror-twisted", "Assemble and verify the twisted mirror product");
  mt->add_option("hopf", hopf, "Hopf algebra definition")->required();
  mt->add_option("cocycle", second, "Cocycle file")->required();
  mt->add_option("-o,--output", output, "Write the total algebra here");
  mt->callback([&] {
    action = [&] {
      const auto o = opts();
      return run([&](hk_report** r) { return hk_construction("twisted_mirror", hopf.c_str(), second.c_str(), &o, r); }, g, output);
    };
  });

  auto* construct = app.add_subcommand("construct", "Run a construction request file");
  construct->add_option("request", hopf, "Construction request")->required();
  construct->add_option("-o,--output", output, "Write the total algebra here");
  construct->callback([&] {
    action = [&] {
      const auto o = opts();
      return run([&](hk_report** r) { return hk_construct(hopf.c_str(), &o, r); }, g, output);
    };
  });

  auto* prove = app.add_subcommand("prove", "Check every identity of an identity file");
  prove->add_option("hopf", hopf, "Hopf algebra definition")->required();
  prove->add_option("identities", second, "Identity file")->required();
  prove->add_option("--cocycle", bindings, "NAME=path binding (a bare path binds X); repeatable");
  prove->callback([&] {
    action = [&] {
      std::vector<const char*> b;
      for (const auto& s : bindings) b.push_back(s.c_str());
      const auto o = opts();
      return run([&](hk_report** r) { return hk_prove(hopf.c_str(), second.c_str(), b.data(), b.size(), &o, r); }, g);
    };
  });

  auto* coincide = app.add_subcommand("coincide", "Compare the R-twisted mirror product with the mbar product");
  coincide->add_option("hopf", hopf, "Hopf algebra definition")->required();
  coincide->add_option("rmatrix", second, "R-matrix file")->required();
  coincide->callback([&] {
    action = [&] {
      const auto o = opts();
      return run([&](hk_report** r) { return hk_coincide(hopf.c_str(), second.c_str(), &o, r); }, g);
    };
  });

  auto* bi = app.add_subcommand("builtin", "Print a shipped definition: kz2, kz2xz2, s3, h4, bichar, r0");
  bi->add_option("name", builtin, "Builtin name")->required();
  bi->add_option("-o,--output", output, "Write to this path instead of stdout");
  bi->callback([&] {
    action = [&] {
      char* text = nullptr;
      if (hk_status s = hk_builtin_text(builtin.c_str(), g.field.c_str(), &text); s != HK_OK)
        return input_error(s);
      int code = kPass;
      if (output.empty()) {
        std::cout << text;
      } else if (std::FILE* f = std::fopen(output.c_str(), "wb")) {
        std::fputs(text, f);
        if (std::fclose(f) != 0) code = kUsage;
      } else {
        code = kUsage;
      }
      if (code == kUsage) std::cerr << "hopfkit: cannot write '" << output << "'\n";
      hk_string_free(text);
      return code;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return action ? action() : kUsage;
}
