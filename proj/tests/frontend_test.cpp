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

#include <random>

#include "okc/corpus.hpp"
#include "okc/frontend.hpp"
#include "random_model.hpp"
#include "test_util.hpp"

namespace okc {
namespace {

using testing::codes_of;

TEST(Lexer, Tokens) {
  auto t = lex_line("fact PC(a, b, 12)  # trailing", 3);
  ASSERT_EQ(t.size(), 10u);
  EXPECT_TRUE(t[0].is("fact"));
  EXPECT_TRUE(t[2].is_punct('('));
  EXPECT_EQ(t[7].kind, TokenKind::Number);
  EXPECT_EQ(t[7].column, 15u);
  EXPECT_EQ(t[9].kind, TokenKind::EndOfLine);
  EXPECT_EQ(t[0].line, 3u);
}

TEST(Lexer, BadNumbers) {
  EXPECT_EQ(lex_line("-1", 1)[0].kind, TokenKind::BadNumber);
  EXPECT_EQ(lex_line("12ab", 1)[0].kind, TokenKind::BadNumber);
  EXPECT_EQ(lex_line("99999999999999", 1)[0].kind, TokenKind::BadNumber);
  EXPECT_EQ(lex_line("$", 1)[0].kind, TokenKind::Invalid);
}

TEST(Identifiers, Shape) {
  EXPECT_TRUE(is_identifier("CalibrationData"));
  EXPECT_TRUE(is_identifier("x_1"));
  EXPECT_FALSE(is_identifier("1x"));
  EXPECT_FALSE(is_identifier("_x"));
  EXPECT_FALSE(is_identifier("anti-rigid"));
  EXPECT_FALSE(is_identifier(""));
}

TEST(Parse, TaskLabel) {
  auto r = parse("label Task Diagnosis at 1\n", "a.oks");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.declarations.size(), 1u);
  const auto& l = std::get<LabelDecl>(r.declarations[0]);
  EXPECT_EQ(l.label, (MetaLabel{Primitive::Task, "Diagnosis", 1}));
  ASSERT_TRUE(l.span);
  EXPECT_EQ(l.span->line, 1u);
  EXPECT_EQ(l.span->column, 1u);
}

TEST(Parse, EmptyFile) {
  auto r = parse("", "a.oks");
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.declarations.empty());
  EXPECT_TRUE(parse("# only a comment\n\n   \n", "a.oks").declarations.empty());
}

TEST(Parse, NegativeTimeReportedAtLiteralAndParsingContinues) {
  auto r = parse("label Task Diagnosis at -1\nconcept Diagnosis specializes Reasoning\n", "a.oks");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "P4");
  EXPECT_EQ(r.diagnostics[0].span->line, 1u);
  EXPECT_EQ(r.diagnostics[0].span->column, 25u);
  ASSERT_EQ(r.declarations.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<ConceptDecl>(r.declarations[0]));
}

TEST(Parse, OneErrorPerBadLine) {
  auto r = parse("concept\nlabel Method X at 1\nconcept A specializes Reasoning\nfact PC(a b)\nbogus\n", "a.oks");
  EXPECT_EQ(codes_of(r.diagnostics), (std::vector<std::string>{"P2", "P2", "P2", "P3"}));
  EXPECT_EQ(r.declarations.size(), 1u);
}

TEST(Parse, AllStatementForms) {
  const char* text =
      "concept A specializes Reasoning, Interaction\n"
      "concept B\n"
      "role R = data of A\n"
      "role S = result of A\n"
      "concept K = Model and R\n"
      "relation r particularizes isAffectedBy signature (Content, A) temporal\n"
      "relation u signature (PD)\n"
      "disjoint A B\n"
      "annotate R rigidity anti-rigid\n"
      "annotate R identity none\n"
      "annotate R dependence dependent\n"
      "label FormalKnowledgeRole R at 2\n"
      "instance i : A, B\n"
      "instance j\n"
      "fact r(i, j, 3)\n";
  auto r = parse(text, "a.oks");
  ASSERT_TRUE(r.ok()) << format_diagnostic(r.diagnostics.front());
  ASSERT_EQ(r.declarations.size(), 15u);
  const auto& role = std::get<ConceptDecl>(r.declarations[2]);
  EXPECT_EQ(std::get<RoleDef>(role.definition).reasoning_concept, "A");
  const auto& conj = std::get<ConceptDecl>(r.declarations[4]);
  EXPECT_EQ(std::get<ConjunctionDef>(conj.definition).formal_role, "R");
  const auto& rel = std::get<RelationDecl>(r.declarations[5]);
  EXPECT_TRUE(rel.temporal);
  EXPECT_EQ(rel.particularizes, "isAffectedBy");
  EXPECT_FALSE(std::get<RelationDecl>(r.declarations[6]).range_concept);
  const auto& fact = std::get<FactDecl>(r.declarations[14]);
  EXPECT_EQ(fact.fact.time, 3u);
  EXPECT_EQ(fact.fact.args, (std::vector<Identifier>{"i", "j"}));
}

TEST(Parse, CrlfAccepted) {
  auto a = parse("concept A specializes Reasoning\r\nlabel Task A at 1\r\n", "a.oks");
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.declarations.size(), 2u);
}

TEST(Parse, ArbitraryDefinitionsRejected) {
  EXPECT_FALSE(parse("concept K = Model or Data\n", "a.oks").ok());
  EXPECT_FALSE(parse("concept K = Model and Data and Result\n", "a.oks").ok());
  EXPECT_FALSE(parse("role R = input of A\n", "a.oks").ok());
}

TEST(Parse, DiagnosticFormat) {
  auto r = parse("concept A specializes Reasoning!\n", "dir/m.oks");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(format_diagnostic(r.diagnostics[0]).rfind("dir/m.oks:1:32: error[P1]", 0), 0u);
}

TEST(Render, KernelRoundTrip) {
  auto r = load_text(render_kernel(), "k.oks");
  ASSERT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.ontology, kernel_ontology());
}

TEST(Render, KernelOnlyRendersEmpty) { EXPECT_EQ(render(kernel_ontology()), ""); }

TEST(Render, Deterministic) {
  auto e = load_example("car_diagnosis");
  auto o = load_text(e.text, "car.oks").ontology;
  EXPECT_EQ(render(o), render(o));
  EXPECT_EQ(render(o, {true}), render(o, {true}));
}

TEST(Render, CorpusRoundTrip) {
  for (auto name : {"car_diagnosis", "calibration"}) {
    auto e = load_example(name);
    auto first = load_text(e.text, e.source.string());
    ASSERT_TRUE(first.ok());
    const std::string text = render(first.ontology);
    auto second = load_text(text, "rendered.oks");
    ASSERT_TRUE(second.diagnostics.empty()) << text;
    EXPECT_EQ(second.ontology, first.ontology) << name;
    EXPECT_EQ(render(second.ontology), text);
  }
}

TEST(Render, RandomRoundTrip) {
  std::mt19937 rng(5150);
  for (int i = 0; i < 50; ++i) {
    const Ontology o = testing::load_or_throw(testing::random_model_text(rng));
    const std::string text = render(o);
    auto again = load_text(text, "rendered.oks");
    ASSERT_TRUE(again.diagnostics.empty()) << text;
    EXPECT_EQ(again.ontology, o) << text;
  }
}

TEST(LoadFile, MissingFileThrows) {
  EXPECT_THROW(load_file("/nonexistent/model.oks"), std::runtime_error);
}

TEST(LoadText, ParseErrorsStopLoading) {
  auto r = load_text("concept A specializes Missing\nlabel Task A at -1\n", "a.oks");
  EXPECT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"P4"});
}

}  // namespace
}  // namespace okc
