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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "okc/compiler.hpp"
#include "okc/frontend.hpp"
#include "okc/reasoner.hpp"
#include "okc/validator.hpp"
#include "random_model.hpp"

namespace okc {
namespace {

using testing::load_or_throw;

FactBase saturated(const Ontology& o) { return saturate(o, SubsumptionClosure(o)); }

bool includes(const FactBase& big, const FactBase& small) {
  return std::includes(big.memberships.begin(), big.memberships.end(), small.memberships.begin(),
                       small.memberships.end()) &&
         std::includes(big.facts.begin(), big.facts.end(), small.facts.begin(), small.facts.end());
}

// Drops fact lines at random; the result still loads because facts are
// never referenced by other statements.
std::string drop_some_facts(const std::string& text, std::mt19937& rng) {
  std::istringstream in(text);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("fact ", 0) == 0 && std::bernoulli_distribution(0.4)(rng)) continue;
    out += line + "\n";
  }
  return out;
}

TEST(Properties, SaturationIsMonotone) {
  std::mt19937 rng(1001);
  for (int i = 0; i < 60; ++i) {
    const std::string full = testing::random_model_text(rng);
    const std::string part = drop_some_facts(full, rng);
    EXPECT_TRUE(includes(saturated(load_or_throw(full)), saturated(load_or_throw(part)))) << full;
  }
}

TEST(Properties, SaturationIsIdempotent) {
  std::mt19937 rng(1002);
  for (int i = 0; i < 60; ++i) {
    const std::string text = testing::random_model_text(rng);
    Ontology o = load_or_throw(text);
    const FactBase once = saturated(o);

    // Assert every derived entry and saturate again.
    std::vector<Declaration> decls;
    for (const auto& [name, c] : o.concepts()) {
      if (c.origin == Origin::User) decls.push_back(c);
    }
    for (const auto& [name, r] : o.relations()) {
      if (r.origin == Origin::User) decls.push_back(r);
    }
    std::map<Identifier, std::set<Identifier>> types;
    for (const auto& m : once.memberships) types[m.instance].insert(m.concept_name);
    for (const auto& [name, inst] : o.instances()) decls.push_back(InstanceDecl{name, types[name], std::nullopt});
    for (const auto& f : once.facts) decls.push_back(FactDecl{f, std::nullopt});
    Ontology rebuilt = kernel_ontology();
    const Diagnostics problems = load_declarations(rebuilt, decls);
    ASSERT_TRUE(problems.empty()) << text << (problems.empty() ? "" : format_diagnostic(problems.front()));

    const FactBase twice = saturated(rebuilt);
    EXPECT_TRUE(twice.same_entries(once)) << text;
    EXPECT_TRUE(twice.derivations.empty()) << text;
  }
}

TEST(Properties, SaturationIgnoresDeclarationOrder) {
  std::mt19937 rng(1003);
  for (int i = 0; i < 40; ++i) {
    const std::string text = testing::random_model_text(rng);
    auto parsed = parse(text, "gen.oks");
    auto decls = parsed.declarations;
    std::shuffle(decls.begin(), decls.end(), rng);
    auto a = load_or_throw(text);
    auto b = merge_with_kernel(decls).ontology;
    EXPECT_TRUE(saturated(a).same_entries(saturated(b)));
  }
}

TEST(Properties, DeterministicOutputs) {
  std::mt19937 rng(1004);
  for (int i = 0; i < 30; ++i) {
    const std::string text = testing::random_model_text(rng);
    auto a = load_or_throw(text);
    auto b = load_or_throw(text);
    EXPECT_EQ(validate(a), validate(b));
    EXPECT_EQ(render(a), render(b));
    auto ca = compile_bundle(a, a.max_label_time());
    auto cb = compile_bundle(b, b.max_label_time());
    EXPECT_EQ(ca.diagnostics, cb.diagnostics);
    ASSERT_EQ(ca.bundle.has_value(), cb.bundle.has_value());
    if (ca.bundle) EXPECT_EQ(bundle_files(*ca.bundle), bundle_files(*cb.bundle));
  }
}

TEST(Properties, ClosureIsTransitive) {
  std::mt19937 rng(1005);
  for (int i = 0; i < 20; ++i) {
    auto dag = testing::random_dag(rng, 12);
    SubsumptionClosure cl(load_or_throw(dag.text));
    for (const auto& a : dag.names) {
      for (const auto& b : dag.names) {
        for (const auto& c : dag.names) {
          if (cl.subsumes(a, b) && cl.subsumes(b, c)) EXPECT_TRUE(cl.subsumes(a, c));
        }
        if (a != b && cl.subsumes(a, b)) EXPECT_FALSE(cl.subsumes(b, a));
      }
    }
  }
}

}  // namespace
}  // namespace okc
