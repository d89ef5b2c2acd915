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

#include "hopfkit/hopfkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hopfkit/commands.hpp"
#include "hopfkit/errors.hpp"

struct hk_hopf {
  hopfkit::HopfAlgebra algebra;
};

struct hk_report {
  hopfkit::commands::Result result;
  // flattened witnesses so hk_check_info can point into them
  std::vector<std::vector<size_t>> witnesses;
};

namespace {

using namespace hopfkit;

thread_local std::string g_last_error;

hk_status fail(hk_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
hk_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(HK_ERR_PARSE, e.what());
  } catch (const SchemaError& e) {
    return fail(HK_ERR_SCHEMA, e.what());
  } catch (const IoError& e) {
    return fail(HK_ERR_IO, e.what());
  } catch (const InputError& e) {
    return fail(HK_ERR_INPUT, e.what());
  } catch (const ShapeError& e) {
    return fail(HK_ERR_SHAPE, e.what());
  } catch (const CapabilityError& e) {
    return fail(HK_ERR_CAPABILITY, e.what());
  } catch (const EvaluationError& e) {
    return fail(HK_ERR_EVALUATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HK_ERR_INTERNAL, e.what());
  }
}

Field field_of(const char* text) { return text ? Field::parse(text) : Field::rationals(); }

commands::Options options_of(const hk_options* o) {
  commands::Options opts;
  if (!o) return opts;
  opts.field = field_of(o->field);
  opts.skip_verify = o->skip_verify != 0;
  opts.force = o->force != 0;
  opts.max_dim = o->max_dim;
  return opts;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

hk_status emit(commands::Result result, hk_report** out) {
  auto* r = new hk_report{std::move(result), {}};
  for (const auto& c : r->result.report.checks)
    r->witnesses.emplace_back(c.witness ? *c.witness : std::vector<size_t>{});
  *out = r;
  return HK_OK;
}

#define HK_REQUIRE(cond)                                          \
  do {                                                            \
    if (!(cond)) return fail(HK_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* hk_version(void) { return io::kVersion; }

const char* hk_last_error(void) { return g_last_error.c_str(); }

const char* hk_status_name(hk_status status) {
  switch (status) {
    case HK_OK: return "ok";
    case HK_ERR_ARGUMENT: return "argument error";
    case HK_ERR_IO: return "i/o error";
    case HK_ERR_PARSE: return "parse error";
    case HK_ERR_SCHEMA: return "schema error";
    case HK_ERR_INPUT: return "input error";
    case HK_ERR_SHAPE: return "shape error";
    case HK_ERR_CAPABILITY: return "capability error";
    case HK_ERR_EVALUATION: return "evaluation error";
    case HK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hk_options_default(hk_options* opts) {
  if (!opts) return;
  opts->field = "q";
  opts->skip_verify = 0;
  opts->force = 0;
  opts->max_dim = kDefaultMaxDim;
}

void hk_string_free(char* s) { std::free(s); }

hk_status hk_hopf_load(const char* path, const char* field, hk_hopf** out) {
  HK_REQUIRE(path && out);
  return guarded([&] {
    *out = new hk_hopf{io::load_hopf(path, field_of(field))};
    return HK_OK;
  });
}

hk_status hk_hopf_builtin(const char* name, const char* field, hk_hopf** out) {
  HK_REQUIRE(name && out);
  return guarded([&] {
    *out = new hk_hopf{commands::builtin_hopf(name, field_of(field))};
    return HK_OK;
  });
}

size_t hk_hopf_dim(const hk_hopf* h) { return h ? h->algebra.dim() : 0; }

hk_status hk_hopf_json(const hk_hopf* h, char** out) {
  HK_REQUIRE(h && out);
  return guarded([&] {
    *out = copy_string(io::hopf_to_json(h->algebra));
    return HK_OK;
  });
}

hk_status hk_hopf_save(const hk_hopf* h, const char* path) {
  HK_REQUIRE(h && path);
  return guarded([&] {
    io::save_hopf(h->algebra, path);
    return HK_OK;
  });
}

void hk_hopf_free(hk_hopf* h) { delete h; }

hk_status hk_builtin_text(const char* name, const char* field, char** out) {
  HK_REQUIRE(name && out);
  return guarded([&] {
    const std::string n = name;
    bool known = false;
    for (const auto& b : commands::builtin_names()) known = known || b == n;
    if (!known) return fail(HK_ERR_ARGUMENT, "unknown builtin '" + n + "'");
    *out = copy_string(commands::builtin_file(n, field_of(field)));
    return HK_OK;
  });
}

hk_status hk_check(const char* hopf, const hk_options* opts, hk_report** out) {
  HK_REQUIRE(hopf && out);
  return guarded([&] { return emit(commands::check(hopf, options_of(opts)), out); });
}

hk_status hk_twist(const char* hopf, const char* cocycle, const hk_options* opts, hk_report** out) {
  HK_REQUIRE(hopf && cocycle && out);
  return guarded([&] { return emit(commands::twist(hopf, cocycle, options_of(opts)), out); });
}

hk_status hk_construction(const char* kind, const char* hopf, const char* cocycle,
                          const hk_options* opts, hk_report** out) {
  HK_REQUIRE(kind && hopf && out);
  return guarded([&] {
    std::optional<std::filesystem::path> c;
    if (cocycle) c = cocycle;
    return emit(commands::construction(parse_construction(kind), hopf, c, options_of(opts)), out);
  });
}

hk_status hk_construct(const char* request, const hk_options* opts, hk_report** out) {
  HK_REQUIRE(request && out);
  return guarded([&] { return emit(commands::construct(request, options_of(opts)), out); });
}

hk_status hk_prove(const char* hopf, const char* identities, const char* const* bindings,
                   size_t n_bindings, const hk_options* opts, hk_report** out) {
  HK_REQUIRE(hopf && identities && out && (bindings || n_bindings == 0));
  return guarded([&] {
    std::map<std::string, std::filesystem::path> cocycles;
    for (size_t k = 0; k < n_bindings; ++k) {
      if (!bindings[k]) return fail(HK_ERR_ARGUMENT, "null binding");
      const std::string b = bindings[k];
      const auto eq = b.find('=');
      const std::string name = eq == std::string::npos ? "X" : b.substr(0, eq);
      const std::string path = eq == std::string::npos ? b : b.substr(eq + 1);
      if (name.empty() || path.empty()) return fail(HK_ERR_ARGUMENT, "bad binding '" + b + "'");
      if (!cocycles.emplace(name, path).second)
        return fail(HK_ERR_ARGUMENT, "cocycle '" + name + "' bound twice");
    }
    return emit(commands::prove(hopf, identities, cocycles, options_of(opts)), out);
  });
}

hk_status hk_coincide(const char* hopf, const char* rmatrix, const hk_options* opts, hk_report** out) {
  HK_REQUIRE(hopf && rmatrix && out);
  return guarded([&] { return emit(commands::coincide(hopf, rmatrix, options_of(opts)), out); });
}

int hk_report_passed(const hk_report* r) { return r && r->result.report.passed() ? 1 : 0; }

const char* hk_report_construction(const hk_report* r) {
  return r ? r->result.report.construction.c_str() : "";
}

size_t hk_report_check_count(const hk_report* r) { return r ? r->result.report.checks.size() : 0; }

hk_status hk_report_check(const hk_report* r, size_t index, hk_check_info* out) {
  HK_REQUIRE(r && out);
  const auto& checks = r->result.report.checks;
  if (index >= checks.size()) return fail(HK_ERR_ARGUMENT, "check index out of range");
  const auto& c = checks[index];
  const auto& w = r->witnesses[index];
  out->id = c.id.c_str();
  out->passed = c.passed ? 1 : 0;
  out->detail = c.detail.c_str();
  out->witness = c.witness ? w.data() : nullptr;
  out->witness_len = c.witness ? w.size() : 0;
  out->seconds = c.seconds;
  return HK_OK;
}

const char* hk_report_outcome(const hk_report* r, const char* key) {
  if (!r || !key) return nullptr;
  const auto& o = r->result.report.outcomes;
  const auto it = o.find(key);
  return it == o.end() ? nullptr : it->second.c_str();
}

hk_status hk_report_json(const hk_report* r, int timings, char** out) {
  HK_REQUIRE(r && out);
  return guarded([&] {
    *out = copy_string(io::report_to_json(r->result.report, timings != 0));
    return HK_OK;
  });
}

hk_status hk_report_write(const hk_report* r, const char* path, int timings) {
  HK_REQUIRE(r && path);
  return guarded([&] {
    io::write_text(path, io::report_to_json(r->result.report, timings != 0));
    return HK_OK;
  });
}

hk_status hk_report_artifact(const hk_report* r, hk_hopf** out) {
  HK_REQUIRE(r && out);
  if (!r->result.artifact) return fail(HK_ERR_ARGUMENT, "this command produced no algebra");
  return guarded([&] {
    *out = new hk_hopf{*r->result.artifact};
    return HK_OK;
  });
}

void hk_report_free(hk_report* r) { delete r; }

}  // extern "C"
