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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/bicrossproduct.hpp"
#include "hopfkit/sweedler.hpp"

namespace hopfkit::io {

/// Hopf algebra definition (JSON):
///
///   { "dim": 2, "basis": ["e", "g"],
///     "unit":     [[0, "1"]],
///     "mult":     [[k, i, j, "c"], ...],   e_i e_j = sum c e_k
///     "comult":   [[i, j, k, "c"], ...],   Delta(e_k) = sum c e_i (x) e_j
///     "counit":   [[k, "c"], ...],
///     "antipode": [[j, i, "c"], ...] }     S(e_i) = sum c e_j
///
/// Every map is stored as its coefficient tensor, codomain legs first.
/// Scalars are strings "p/q" or "p". Only shapes are checked here.
HopfAlgebra hopf_from_json(std::string_view text, Field field = {});
HopfAlgebra load_hopf(const std::filesystem::path& path, Field field = {});
/// Canonical text: sorted keys, entries in row-major order, reduced scalars.
std::string hopf_to_json(const HopfAlgebra& h);
void save_hopf(const HopfAlgebra& h, const std::filesystem::path& path);

/// Cocycle or R-matrix file: { "host": <path or inline definition>,
/// "element": [[i, j, "c"], ...] }. A relative host path is resolved
/// against the file's directory. Without "host" the element lives on
/// `fallback_host`.
struct ElementFile {
  HopfAlgebra host;
  SparseTensor element;
  bool host_from_file = false;
};

ElementFile load_element(const std::filesystem::path& path, Field field,
                         const HopfAlgebra* fallback_host = nullptr);
std::string element_to_json(const SparseTensor& element, const HopfAlgebra* inline_host = nullptr);

/// { "construction": "mirror" | "twisted_mirror" | "mbar", "hopf": path,
///   "cocycle": path (twisted_mirror only) }, paths resolved like above.
struct ConstructionRequest {
  Construction construction = Construction::mirror;
  std::filesystem::path hopf;
  std::optional<std::filesystem::path> cocycle;
};

ConstructionRequest load_request(const std::filesystem::path& path);

/// One line of an identity file: `name ; declarations ; lhs ; rhs`.
/// Blank lines and lines starting with '#' are skipped.
struct IdentityLine {
  int line = 0;
  std::string name;
  sweedler::Declarations declarations;
  sweedler::Expr lhs;
  sweedler::Expr rhs;
};

/// Throws ParseError with the file line and column of the first problem.
std::vector<IdentityLine> parse_identities(std::string_view text);
std::vector<IdentityLine> load_identities(const std::filesystem::path& path);

struct CheckEntry {
  std::string id;
  bool passed = true;
  std::optional<MultiIndex> witness;
  std::string detail;
  double seconds = 0;
};

struct InputDigest {
  std::string file;  // file name without directories
  std::string sha256;
};

struct VerificationReport {
  std::string construction;
  std::string field = "q";
  std::map<std::string, InputDigest> inputs;  // keyed by role: hopf, cocycle, ...
  std::vector<CheckEntry> checks;
  /// Recorded findings that are not pass/fail checks.
  std::map<std::string, std::string> outcomes;

  bool passed() const;
  const CheckEntry* first_failure() const;
};

extern const char* const kVersion;

std::string sha256_file(const std::filesystem::path& path);
InputDigest digest(const std::filesystem::path& path);

/// Sorted keys and no wall-times unless `timings`, so identical inputs give
/// identical bytes.
std::string report_to_json(const VerificationReport& report, bool timings = false);
/// Throws InputError when the path cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hopfkit::io
