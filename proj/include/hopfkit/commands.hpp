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
#include <vector>

#include "hopfkit/io.hpp"

namespace hopfkit::commands {

struct Options {
  Field field;
  /// Skip validate_hopf on loaded definitions.
  bool skip_verify = false;
  /// Lift the dimension cap.
  bool force = false;
  std::size_t max_dim = kDefaultMaxDim;
};

/// A report plus the algebra the command produced, if any.
struct Result {
  io::VerificationReport report;
  std::optional<HopfAlgebra> artifact;
};

/// Axiom suite and antipode invertibility.
Result check(const std::filesystem::path& hopf, const Options& opts);

/// Cocycle conditions, axioms of H_chi, and untwisting by chi^-1.
Result twist(const std::filesystem::path& hopf, const std::filesystem::path& cocycle,
             const Options& opts);

/// Assembles the construction and reports the assembly checks, the axioms of
/// the total, theta and the extension maps. `cocycle` is required exactly
/// for the twisted mirror product.
Result construction(Construction kind, const std::filesystem::path& hopf,
                    const std::optional<std::filesystem::path>& cocycle, const Options& opts);

Result construct(const std::filesystem::path& request, const Options& opts);

/// Runs check_identity for every line of an identity file. `cocycles` maps
/// declared cocycle names to element files; unbound names get 1 (x) 1.
Result prove(const std::filesystem::path& hopf, const std::filesystem::path& identities,
             const std::map<std::string, std::filesystem::path>& cocycles, const Options& opts);

/// Quasitriangular structure checks and the coincidence comparison.
Result coincide(const std::filesystem::path& hopf, const std::filesystem::path& rmatrix,
                const Options& opts);

/// Shipped examples: kz2, kz2xz2, s3, h4.
HopfAlgebra builtin_hopf(const std::string& name, Field field = {});
/// Shipped elements: bichar (on kz2xz2), r0 (on h4).
SparseTensor builtin_element(const std::string& name, Field field = {});
/// Definition or element file text (elements carry their host inline).
std::string builtin_file(const std::string& name, Field field = {});
std::vector<std::string> builtin_names();

/// Multiplication tables behind the group builtins. The Klein group is xor
/// on {0, 1, 2, 3}; S3 lists permutations of {0, 1, 2} lexicographically.
std::vector<std::vector<std::size_t>> klein_table();
std::vector<std::vector<std::size_t>> s3_table();

}  // namespace hopfkit::commands
