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

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include "hopfkit/hopfkit.h"

namespace fs = std::filesystem;

namespace {

const std::string kData = std::string(HOPFKIT_SOURCE_DIR) + "/data/";
const std::string kFixtures = std::string(HOPFKIT_SOURCE_DIR) + "/tests/fixtures/";

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("loading and builtins") {
    hk_hopf* h = nullptr;
    REQUIRE(hk_hopf_load((kData + "h4.json").c_str(), "q", &h) == HK_OK);
    CHECK(hk_hopf_dim(h) == 4);
    hk_hopf* b = nullptr;
    REQUIRE(hk_hopf_builtin("h4", nullptr, &b) == HK_OK);
    char* x = nullptr;
    char* y = nullptr;
    REQUIRE(hk_hopf_json(h, &x) == HK_OK);
    REQUIRE(hk_hopf_json(b, &y) == HK_OK);
    CHECK(std::string(x) == std::string(y));
    hk_string_free(x);
    hk_string_free(y);
    hk_hopf_free(h);
    hk_hopf_free(b);

    CHECK(hk_hopf_builtin("nope", nullptr, &b) == HK_ERR_INPUT);
    CHECK(std::strlen(hk_last_error()) > 0);
    char* text = nullptr;
    CHECK(hk_builtin_text("nope", nullptr, &text) == HK_ERR_ARGUMENT);
    REQUIRE(hk_builtin_text("bichar", nullptr, &text) == HK_OK);
    CHECK(std::string(text).find("\"element\"") != std::string::npos);
    hk_string_free(text);
  }

  TEST_CASE("error codes") {
    hk_hopf* h = nullptr;
    CHECK(hk_hopf_load(nullptr, nullptr, &h) == HK_ERR_ARGUMENT);
    CHECK(hk_hopf_load((kFixtures + "missing.json").c_str(), nullptr, &h) == HK_ERR_IO);
    CHECK(hk_hopf_load((kFixtures + "malformed.json").c_str(), nullptr, &h) == HK_ERR_PARSE);
    CHECK(std::string(hk_last_error()).find("17:") != std::string::npos);
    CHECK(hk_hopf_load((kFixtures + "kz2_mult_wrong_shape.json").c_str(), nullptr, &h) == HK_ERR_SCHEMA);
    CHECK(std::string(hk_last_error()).find("'mult'") != std::string::npos);
    CHECK(hk_hopf_load((kData + "h4.json").c_str(), "fp:8", &h) == HK_ERR_INPUT);
    CHECK(h == nullptr);
    CHECK(std::string(hk_status_name(HK_ERR_SCHEMA)) == "schema error");
  }

  TEST_CASE("reports through the C interface") {
    hk_options o;
    hk_options_default(&o);
    hk_report* r = nullptr;
    REQUIRE(hk_check((kFixtures + "kz2_zero_antipode_g.json").c_str(), &o, &r) == HK_OK);
    CHECK(hk_report_passed(r) == 0);
    CHECK(std::string(hk_report_construction(r)) == "check");
    bool found = false;
    for (size_t k = 0; k < hk_report_check_count(r); ++k) {
      hk_check_info c;
      REQUIRE(hk_report_check(r, k, &c) == HK_OK);
      if (std::string(c.id) == "axiom.antipode") {
        found = true;
        CHECK(c.passed == 0);
        REQUIRE(c.witness_len == 1);
        CHECK(c.witness[0] == 1);
      }
    }
    CHECK(found);
    hk_check_info c;
    CHECK(hk_report_check(r, 999, &c) == HK_ERR_ARGUMENT);
    char* json = nullptr;
    REQUIRE(hk_report_json(r, 0, &json) == HK_OK);
    CHECK(std::string(json).find("\"witness\": [1]") != std::string::npos);
    hk_string_free(json);
    hk_report_free(r);

    REQUIRE(hk_construction("mirror-twisted", (kData + "kz2xz2.json").c_str(), (kData + "bichar.json").c_str(),
                            nullptr, &r) == HK_OK);
    CHECK(hk_report_passed(r) == 1);
    CHECK(std::string(hk_report_outcome(r, "dim")) == "16");
    CHECK(hk_report_outcome(r, "absent") == nullptr);
    hk_hopf* total = nullptr;
    REQUIRE(hk_report_artifact(r, &total) == HK_OK);
    CHECK(hk_hopf_dim(total) == 16);
    hk_hopf_free(total);
    hk_report_free(r);

    REQUIRE(hk_coincide((kData + "h4.json").c_str(), (kData + "r0_h4.json").c_str(), nullptr, &r) == HK_OK);
    CHECK(hk_report_outcome(r, "coincides") != nullptr);
    CHECK(hk_report_artifact(r, &total) == HK_ERR_ARGUMENT);
    hk_report_free(r);
  }

  TEST_CASE("prove bindings") {
    hk_report* r = nullptr;
    const std::string bind = "X=" + kData + "r0_h4.json";
    const char* b[] = {bind.c_str()};
    REQUIRE(hk_prove((kData + "h4.json").c_str(), (kData + "identities/coaction_chains.sw").c_str(), b, 1, nullptr, &r) ==
            HK_OK);
    CHECK(hk_report_passed(r) == 1);
    CHECK(std::string(hk_report_outcome(r, "binding.X")) == "r0_h4.json");
    hk_report_free(r);
    const char* bad[] = {"=x"};
    CHECK(hk_prove((kData + "h4.json").c_str(), (kData + "identities/coaction_chains.sw").c_str(), bad, 1, nullptr, &r) ==
          HK_ERR_ARGUMENT);
    CHECK(hk_prove((kData + "h4.json").c_str(), (kFixtures + "chains_unparsable.sw").c_str(), nullptr, 0, nullptr,
                   &r) == HK_ERR_PARSE);
  }
}
