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

#include <filesystem>
#include <random>
#include <set>

#include "okc/corpus.hpp"
#include "okc/frontend.hpp"
#include "okc/validator.hpp"
#include "test_util.hpp"

namespace okc {
namespace {

using testing::codes_of;

Diagnostics all_diagnostics(const CorpusEntry& e) {
  LoadResult r = load_text(e.text, e.source.string());
  if (!r.ok()) return r.diagnostics;
  Diagnostics d = r.diagnostics;
  auto v = validate(r.ontology);
  d.insert(d.end(), v.begin(), v.end());
  return d;
}

TEST(Corpus, CarDiagnosisContents) {
  auto e = load_example("car_diagnosis");
  auto r = load_text(e.text, e.source.string());
  ASSERT_TRUE(r.ok());
  for (auto c : {"Diagnosis", "EmptyFuelTank", "DiagnosisHypothesis", "DiagnosisResult", "Hypothesis",
                 "LowBatteryLevelComplaint", "CarModel", "EmptyFuelTankHypothesis"}) {
    EXPECT_TRUE(r.ontology.has_concept(c)) << c;
  }
  EXPECT_TRUE(r.ontology.labels().contains({Primitive::Task, "Diagnosis", 1}));
  EXPECT_TRUE(r.ontology.labels().contains({Primitive::DomainConcept, "EmptyFuelTank", 3}));
  EXPECT_TRUE(r.ontology.labels().contains({Primitive::FormalKnowledgeRole, "DiagnosisResult", 2}));
  EXPECT_TRUE(r.ontology.labels().contains({Primitive::MaterialKnowledgeRole, "DiagnosisHypothesis", 2}));
  const auto& dh = r.ontology.find_concept("DiagnosisHypothesis")->definition;
  EXPECT_EQ(std::get<ConjunctionDef>(dh), (ConjunctionDef{"Hypothesis", "DiagnosisResult"}));
  EXPECT_EQ(std::get<RoleDef>(r.ontology.find_concept("DiagnosisResult")->definition),
            (RoleDef{RoleMode::Result, "Diagnosis"}));
}

TEST(Corpus, CalibrationContents) {
  auto e = load_example("calibration");
  auto r = load_text(e.text, e.source.string());
  ASSERT_TRUE(r.ok());
  for (auto c : {"Calibrating", "CalibrationData", "Model", "ModelToCalibrate"}) {
    EXPECT_TRUE(r.ontology.has_concept(c)) << c;
  }
  EXPECT_TRUE(r.ontology.labels().contains({Primitive::FormalKnowledgeRole, "CalibrationData", 2}));
  EXPECT_EQ(std::get<ConjunctionDef>(r.ontology.find_concept("ModelToCalibrate")->definition),
            (ConjunctionDef{"Model", "CalibrationData"}));
}

TEST(Corpus, UnknownName) { EXPECT_THROW(load_example("nope"), UnknownExample); }

TEST(Corpus, EveryEntryProducesExactlyItsCodes) {
  const auto& corpus = Corpus::bundled();
  ASSERT_GE(corpus.names().size(), 30u);
  for (const auto& name : corpus.names()) {
    auto e = corpus.load(name);
    EXPECT_EQ(codes_of(all_diagnostics(e)), e.expected_codes) << name;
  }
}

TEST(Corpus, NegativeFilesAreNamedByTheirCode) {
  const auto& corpus = Corpus::bundled();
  for (const auto& name : corpus.names()) {
    auto e = corpus.load(name);
    if (e.source.parent_path().filename() != "negative") continue;
    ASSERT_EQ(e.expected_codes.size(), 1u) << name;
    std::string prefix = e.expected_codes[0];
    std::transform(prefix.begin(), prefix.end(), prefix.begin(), ::tolower);
    // L1 reports as A7 and L2 as A8, so those files carry the axiom code.
    EXPECT_EQ(name.rfind(prefix + "_", 0), 0u) << name;
  }
}

TEST(Corpus, EveryFileIsRegistered) {
  const auto& corpus = Corpus::bundled();
  std::set<std::string> sources;
  for (const auto& name : corpus.names()) sources.insert(corpus.load(name).source.lexically_normal().string());
  for (const auto& entry : std::filesystem::recursive_directory_iterator(corpus.root())) {
    if (entry.path().extension() == ".oks") {
      EXPECT_TRUE(sources.contains(entry.path().lexically_normal().string())) << entry.path();
    }
  }
}

TEST(Corpus, GoldensPresent) {
  for (auto name : {"car_diagnosis", "calibration"}) {
    auto e = load_example(name);
    ASSERT_TRUE(e.golden_dir);
    for (auto f : {"domain.json", "inference.json", "task.json"}) {
      EXPECT_TRUE(std::filesystem::exists(*e.golden_dir / f)) << name << "/" << f;
    }
  }
}

// One token of a valid file replaced by something that cannot be valid in
// its place: some diagnostic must point at the corrupted token.
TEST(Corpus, CorruptedTokenIsLocated) {
  const std::vector<std::string> replacements = {"@", "9zz", "-3", "(", "concept", "=", "at"};
  std::mt19937 rng(777);
  for (auto name : {"car_diagnosis", "calibration"}) {
    auto e = load_example(name);
    std::vector<std::string> lines;
    {
      std::istringstream in(e.text);
      for (std::string l; std::getline(in, l);) lines.push_back(l);
    }
    int tried = 0;
    while (tried < 200) {
      const std::size_t li = std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng);
      auto tokens = lex_line(lines[li], static_cast<std::uint32_t>(li + 1));
      if (tokens.size() <= 1) continue;
      const std::size_t ti = std::uniform_int_distribution<std::size_t>(0, tokens.size() - 2)(rng);
      const Token& tok = tokens[ti];
      const std::string& rep = replacements[std::uniform_int_distribution<std::size_t>(0, replacements.size() - 1)(rng)];
      if (rep == tok.text) continue;
      // A keyword or '=' in a position that accepts an identifier would still
      // parse; only substitute those where the original was punctuation or a number.
      const bool word_like = rep == "concept" || rep == "at";
      if (word_like && tok.kind == TokenKind::Word) continue;
      if (rep == "=" && tok.is_punct('=')) continue;
      if (rep == "(" && tok.is_punct('(')) continue;
      std::string line = lines[li];
      // Padded so the replacement cannot glue onto a neighbouring token.
      line.replace(tok.column - 1, tok.text.size(), " " + rep + " ");
      const std::uint32_t column = tok.column + 1;
      auto copy = lines;
      copy[li] = line;
      std::string text;
      for (const auto& l : copy) text += l + "\n";
      auto r = load_text(text, "corrupt.oks");
      bool covered = false;
      for (const auto& d : r.diagnostics) {
        if (d.span && d.span->line == li + 1 && d.span->column <= column &&
            column < d.span->column + std::max<std::uint32_t>(d.span->length, 1)) {
          covered = true;
        }
      }
      EXPECT_TRUE(covered) << name << " line " << li + 1 << ": '" << line << "'";
      ++tried;
    }
  }
}

}  // namespace
}  // namespace okc
