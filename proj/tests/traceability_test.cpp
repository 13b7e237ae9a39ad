// Copyright 2026 The okc Authors
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

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "traceability.hpp"

namespace okc::testing {
namespace {

class Traceability : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { tables_ = load_trace_tables(source_path("docs/TRACEABILITY.md")); }
  static TraceTables tables_;
};

TraceTables Traceability::tables_;

std::string joined(const std::vector<std::string>& problems) {
  std::string s;
  for (const auto& p : problems) s += p + "\n";
  return s;
}

TEST_F(Traceability, TablesPresent) {
  EXPECT_FALSE(tables_.axioms.empty());
  EXPECT_FALSE(tables_.checks.empty());
}

TEST_F(Traceability, EveryAxiomListedOnce) {
  auto p = listing_problems(tables_);
  EXPECT_TRUE(p.empty()) << joined(p);
}

TEST_F(Traceability, TableMatchesRegistries) {
  auto p = registry_problems(tables_);
  EXPECT_TRUE(p.empty()) << joined(p);
}

TEST_F(Traceability, FixturesBehave) {
  auto p = fixture_problems(tables_);
  EXPECT_TRUE(p.empty()) << joined(p);
}

TEST_F(Traceability, ChecksTableMatchesRegistry) {
  auto p = check_table_problems(tables_);
  EXPECT_TRUE(p.empty()) << joined(p);
}

// The checker itself notices a broken table.
TEST_F(Traceability, DetectsTampering) {
  TraceTables t = tables_;
  t.axioms.pop_back();
  EXPECT_FALSE(listing_problems(t).empty());
  EXPECT_FALSE(registry_problems(t).empty());
  t = tables_;
  t.axioms.front().cells[1] = "check W1";
  EXPECT_FALSE(registry_problems(t).empty());
  t = tables_;
  for (auto& r : t.axioms) {
    if (r.cells[1].rfind("check ", 0) == 0) {
      r.cells[3] = "car_diagnosis";
      break;
    }
  }
  EXPECT_FALSE(fixture_problems(t).empty());
}

}  // namespace
}  // namespace okc::testing
