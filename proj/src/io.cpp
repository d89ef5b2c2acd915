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

#include "hopfkit/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hopfkit/errors.hpp"

#ifndef HOPFKIT_VERSION
#define HOPFKIT_VERSION "0.0.0"
#endif

namespace hopfkit::io {

const char* const kVersion = HOPFKIT_VERSION;

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte offset -> line and column of the offending character
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t k = 0; k < at; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("invalid JSON: " + msg, line, column);
  }
}

SparseTensor tensor_from_json(const json& value, const Shape& shape, Field field,
                              const std::string& name) {
  if (!value.is_array()) throw SchemaError(name, "expected a list of entries");
  std::vector<std::pair<MultiIndex, Scalar>> entries;
  for (const auto& entry : value) {
    if (!entry.is_array() || entry.size() != shape.size() + 1)
      throw SchemaError(name, "every entry needs " + std::to_string(shape.size()) +
                                  " indices followed by a scalar string");
    MultiIndex idx;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      const auto& v = entry[k];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= shape[k])
        throw SchemaError(name, "index " + v.dump() + " out of range for leg of dimension " +
                                    std::to_string(shape[k]));
      idx.push_back(v.get<std::size_t>());
    }
    const auto& c = entry.back();
    if (!c.is_string()) throw SchemaError(name, "scalars must be strings such as \"-1/2\"");
    try {
      entries.emplace_back(std::move(idx), Scalar::parse(c.get<std::string>(), field));
    } catch (const Error& e) {
      throw SchemaError(name, e.what());
    }
  }
  return SparseTensor(shape, entries);
}

json tensor_to_json(const SparseTensor& t) {
  json out = json::array();
  for (const auto& [flat, value] : t.entries()) {
    json entry = json::array();
    for (auto i : unflatten(t.shape(), flat)) entry.push_back(i);
    entry.push_back(value.str());
    out.push_back(std::move(entry));
  }
  return out;
}

json hopf_json(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  json j;
  j["dim"] = d;
  j["basis"] = h.labels();
  j["unit"] = tensor_to_json(h.unit_tensor());
  j["mult"] = tensor_to_json(h.mult().to_tensor());
  j["comult"] = tensor_to_json(h.comult().to_tensor());
  j["counit"] = tensor_to_json(h.counit().to_tensor());
  j["antipode"] = tensor_to_json(h.antipode().to_tensor());
  return j;
}

HopfAlgebra hopf_from_value(const json& j, Field field) {
  if (!j.is_object()) throw SchemaError("(root)", "expected an object");
  static const std::set<std::string> known = {"dim",    "basis",   "unit",     "mult", "comult",
                                              "counit", "antipode", "name", "description"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw SchemaError(key, "unknown field");
  for (const char* key : {"dim", "unit", "mult", "comult", "counit", "antipode"})
    if (!j.contains(key)) throw SchemaError(key, "missing");
  const auto& dim = j["dim"];
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0)
    throw SchemaError("dim", "expected a positive integer");
  const std::size_t d = dim.get<std::size_t>();
  if (d > 4096) throw SchemaError("dim", "dimension too large");

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const auto& b = j["basis"];
    if (!b.is_array() || b.size() != d) throw SchemaError("basis", "expected " + std::to_string(d) + " labels");
    for (const auto& l : b) {
      if (!l.is_string()) throw SchemaError("basis", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < d; ++k) labels.push_back("e" + std::to_string(k));
  }

  const auto unit = tensor_from_json(j["unit"], {d}, field, "unit");
  const auto mult = tensor_from_json(j["mult"], {d, d, d}, field, "mult");
  const auto comult = tensor_from_json(j["comult"], {d, d, d}, field, "comult");
  const auto counit = tensor_from_json(j["counit"], {d}, field, "counit");
  const auto antipode = tensor_from_json(j["antipode"], {d, d}, field, "antipode");
  return HopfAlgebra(std::move(labels), unit.entries(), LinearMap::from_tensor(mult, 1),
                     LinearMap::from_tensor(comult, 2), LinearMap::from_tensor(counit, 0),
                     LinearMap::from_tensor(antipode, 1))
      .to_field(field);
}

bool is_compact(const json& v) {
  if (!v.is_structured()) return true;
  if (v.is_object()) return v.empty();
  return std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
}

// Objects and lists of lists go one item per line; flat lists stay on one.
void emit(std::ostream& os, const json& v, int indent) {
  if (is_compact(v)) {
    os << v.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  if (v.is_object()) {
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {  // std::map order: sorted
      if (!first) os << ",\n";
      first = false;
      os << pad << json(key).dump() << ": ";
      emit(os, value, indent + 2);
    }
    os << "\n" << std::string(indent, ' ') << "}";
  } else {
    os << "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) os << ",\n";
      os << pad;
      emit(os, v[k], indent + 2);
    }
    os << "\n" << std::string(indent, ' ') << "]";
  }
}

std::string canonical(const json& v) {
  std::ostringstream os;
  emit(os, v, 0);
  os << "\n";
  return os.str();
}

fs::path resolve(const fs::path& base_file, const std::string& p) {
  fs::path path(p);
  if (path.is_relative()) path = base_file.parent_path() / path;
  return path;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Re-anchors a parse error raised on one field of a line to file columns.
[[noreturn]] void rethrow_shifted(const ParseError& e, int line, int offset) {
  std::string msg = e.what();
  if (const auto p = msg.rfind(" at "); p != std::string::npos) msg.resize(p);
  throw ParseError(msg, line, e.column() + offset);
}

}  // namespace

HopfAlgebra hopf_from_json(std::string_view text, Field field) {
  return hopf_from_value(parse_json(text), field);
}

HopfAlgebra load_hopf(const fs::path& path, Field field) {
  return hopf_from_json(read_file(path), field);
}

std::string hopf_to_json(const HopfAlgebra& h) { return canonical(hopf_json(h)); }

void save_hopf(const HopfAlgebra& h, const fs::path& path) { write_text(path, hopf_to_json(h)); }

ElementFile load_element(const fs::path& path, Field field, const HopfAlgebra* fallback_host) {
  const json j = parse_json(read_file(path));
  if (!j.is_object()) throw SchemaError("(root)", "expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "host" && key != "element" && key != "name" && key != "description")
      throw SchemaError(key, "unknown field");
  if (!j.contains("element")) throw SchemaError("element", "missing");

  std::optional<HopfAlgebra> host;
  bool from_file = false;
  if (j.contains("host")) {
    const auto& h = j["host"];
    if (h.is_string()) {
      host = load_hopf(resolve(path, h.get<std::string>()), field);
    } else if (h.is_object()) {
      try {
        host = hopf_from_value(h, field);
      } catch (const SchemaError& e) {
        throw SchemaError("host." + e.field(), e.what());
      }
    } else {
      throw SchemaError("host", "expected a path or an inline definition");
    }
    from_file = true;
  } else if (fallback_host) {
    host = *fallback_host;
  } else {
    throw SchemaError("host", "missing");
  }
  const std::size_t d = host->dim();
  ElementFile out{*host, tensor_from_json(j["element"], {d, d}, field, "element"), from_file};
  return out;
}

std::string element_to_json(const SparseTensor& element, const HopfAlgebra* inline_host) {
  json j;
  j["element"] = tensor_to_json(element);
  if (inline_host) j["host"] = hopf_json(*inline_host);
  return canonical(j);
}

ConstructionRequest load_request(const fs::path& path) {
  const json j = parse_json(read_file(path));
  if (!j.is_object()) throw SchemaError("(root)", "expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "construction" && key != "hopf" && key != "cocycle" && key != "description")
      throw SchemaError(key, "unknown field");
  if (!j.contains("construction") || !j["construction"].is_string())
    throw SchemaError("construction", "expected one of mirror, twisted_mirror, mbar");
  if (!j.contains("hopf") || !j["hopf"].is_string()) throw SchemaError("hopf", "expected a path");
  ConstructionRequest r;
  try {
    r.construction = parse_construction(j["construction"].get<std::string>());
  } catch (const InputError& e) {
    throw SchemaError("construction", e.what());
  }
  r.hopf = resolve(path, j["hopf"].get<std::string>());
  if (j.contains("cocycle")) {
    if (!j["cocycle"].is_string()) throw SchemaError("cocycle", "expected a path");
    r.cocycle = resolve(path, j["cocycle"].get<std::string>());
  }
  if (r.construction == Construction::twisted_mirror && !r.cocycle)
    throw SchemaError("cocycle", "required for twisted_mirror");
  if (r.construction != Construction::twisted_mirror && r.cocycle)
    throw SchemaError("cocycle", "only used by twisted_mirror");
  return r;
}

std::vector<IdentityLine> parse_identities(std::string_view text) {
  std::vector<IdentityLine> out;
  std::set<std::string> names;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    std::vector<std::size_t> starts{0};
    for (std::size_t k = 0; k < line.size(); ++k)
      if (line[k] == ';') starts.push_back(k + 1);
    if (starts.size() != 4)
      throw ParseError("expected 'name ; declarations ; lhs ; rhs'", line_no,
                       static_cast<int>(line.size()) + 1);
    auto field = [&](std::size_t k) {
      const std::size_t b = starts[k];
      const std::size_t e = k + 1 < starts.size() ? starts[k + 1] - 1 : line.size();
      return line.substr(b, e - b);
    };

    IdentityLine entry;
    entry.line = line_no;
    entry.name = trim(field(0));
    if (entry.name.empty()) throw ParseError("missing identity name", line_no, 1);
    if (!names.insert(entry.name).second)
      throw ParseError("duplicate identity name '" + entry.name + "'", line_no, 1);
    try {
      entry.declarations = sweedler::Declarations::parse(field(1), line_no);
    } catch (const ParseError& e) {
      rethrow_shifted(e, line_no, static_cast<int>(starts[1]));
    }
    for (int side = 0; side < 2; ++side) {
      const std::size_t k = 2 + side;
      try {
        (side == 0 ? entry.lhs : entry.rhs) = sweedler::parse(field(k), entry.declarations, line_no);
      } catch (const ParseError& e) {
        rethrow_shifted(e, line_no, static_cast<int>(starts[k]));
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<IdentityLine> load_identities(const fs::path& path) {
  return parse_identities(read_file(path));
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckEntry* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string sha256_file(const fs::path& path) {
  const std::string data = read_file(path);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    hex += buf;
  }
  return hex;
}

InputDigest digest(const fs::path& path) { return {path.filename().string(), sha256_file(path)}; }

std::string report_to_json(const VerificationReport& report, bool timings) {
  json j;
  j["construction"] = report.construction;
  j["field"] = report.field;
  j["version"] = kVersion;
  j["inputs"] = json::object();
  for (const auto& [role, d] : report.inputs) j["inputs"][role] = {{"file", d.file}, {"sha256", d.sha256}};
  j["checks"] = json::array();
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    json e{{"id", c.id}, {"passed", c.passed}};
    if (!c.passed) {
      ++failed;
      e["witness"] = c.witness ? json(*c.witness) : json(nullptr);
    }
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (timings) e["seconds"] = c.seconds;
    j["checks"].push_back(std::move(e));
  }
  j["outcomes"] = json::object();
  for (const auto& [k, v] : report.outcomes) j["outcomes"][k] = v;
  j["passed"] = failed == 0;
  j["summary"] = {{"checks", report.checks.size()}, {"failed", failed}};
  return canonical(j);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  out.close();
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace hopfkit::io
