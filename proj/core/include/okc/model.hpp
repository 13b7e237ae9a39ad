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

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "okc/diagnostic.hpp"

namespace okc {

using Identifier = std::string;
using TimePoint = std::uint32_t;

enum class Origin { Kernel, User };

enum class RoleMode { Data, Result };

std::string_view to_string(RoleMode m);

// ---------------------------------------------------------------------------
// Concept definitions. Only two closed forms exist besides plain
// specialization: a participation role of a reasoning concept, and the
// conjunction of a type with a formal role.

struct PrimitiveDef {
  friend auto operator<=>(const PrimitiveDef&, const PrimitiveDef&) = default;
};

struct RoleDef {
  RoleMode mode = RoleMode::Data;
  Identifier reasoning_concept;
  friend auto operator<=>(const RoleDef&, const RoleDef&) = default;
};

struct ConjunctionDef {
  Identifier type;
  Identifier formal_role;
  friend auto operator<=>(const ConjunctionDef&, const ConjunctionDef&) = default;
};

using ConceptDefinition = std::variant<PrimitiveDef, RoleDef, ConjunctionDef>;

struct ConceptDecl {
  Identifier name;
  Origin origin = Origin::User;
  ConceptDefinition definition = PrimitiveDef{};
  std::set<Identifier> parents;  // asserted direct subsumers
  std::optional<SourceSpan> span;

  /// Every concept this one is directly subsumed by: asserted parents,
  /// conjunction operands, and Data/Result for role definitions.
  std::vector<Identifier> direct_subsumers() const;

  bool same_meaning(const ConceptDecl& o) const {
    return name == o.name && origin == o.origin && definition == o.definition && parents == o.parents;
  }
};

struct RelationDecl {
  Identifier name;
  Origin origin = Origin::User;
  Identifier domain_concept;
  std::optional<Identifier> range_concept;  // nullopt => unary (e.g. PRE)
  bool temporal = false;
  std::optional<Identifier> particularizes;
  std::optional<SourceSpan> span;

  std::size_t entity_arity() const { return range_concept ? 2 : 1; }
  std::size_t arity() const { return entity_arity() + (temporal ? 1 : 0); }

  bool same_meaning(const RelationDecl& o) const {
    return name == o.name && origin == o.origin && domain_concept == o.domain_concept &&
           range_concept == o.range_concept && temporal == o.temporal && particularizes == o.particularizes;
  }
};

// ---------------------------------------------------------------------------
// Meta-properties. Declared, never computed.

enum class Rigidity { Unspecified, Rigid, AntiRigid, SemiRigid };
enum class IdentityCriterion { Unspecified, Carries, None };
enum class Dependence { Unspecified, Dependent, Independent };

std::string_view to_string(Rigidity r);
std::string_view to_string(IdentityCriterion i);
std::string_view to_string(Dependence d);

struct MetaAnnotation {
  Rigidity rigidity = Rigidity::Unspecified;
  IdentityCriterion identity = IdentityCriterion::Unspecified;
  Dependence dependence = Dependence::Unspecified;
  friend bool operator==(const MetaAnnotation&, const MetaAnnotation&) = default;
};

using AnnotationValue = std::variant<Rigidity, IdentityCriterion, Dependence>;

/// A single-axis annotation statement, as written in source.
struct AnnotationDecl {
  Identifier concept_name;
  AnnotationValue value;
  Origin origin = Origin::User;
  std::optional<SourceSpan> span;
};

// ---------------------------------------------------------------------------
// Modeling primitives that classify concepts at model-building time.

enum class Primitive {
  Task,
  Inference,
  TransferFunction,
  DomainConcept,
  KnowledgeRole,
  FormalKnowledgeRole,
  MaterialKnowledgeRole,
  Input,
  Output,
};

std::string_view to_string(Primitive p);
std::optional<Primitive> parse_primitive(std::string_view s);
const std::vector<Primitive>& all_primitives();

/// KnowledgeRole and everything that particularizes it.
bool is_knowledge_role_family(Primitive p);

/// Labels of different classes on one concept exclude each other at a single
/// time point, and a later label of another class retires an earlier one.
enum class LabelClass { Task, Inference, TransferFunction, DomainConcept, KnowledgeRole };
LabelClass label_class(Primitive p);

struct MetaLabel {
  Primitive primitive = Primitive::Task;
  Identifier concept_name;
  TimePoint time = 0;
  friend auto operator<=>(const MetaLabel& a, const MetaLabel& b) {
    return std::tie(a.concept_name, a.time, a.primitive) <=> std::tie(b.concept_name, b.time, b.primitive);
  }
  friend bool operator==(const MetaLabel&, const MetaLabel&) = default;
};

struct LabelDecl {
  MetaLabel label;
  std::optional<SourceSpan> span;
};

// ---------------------------------------------------------------------------
// Instance level.

struct InstanceDecl {
  Identifier name;
  std::set<Identifier> asserted_concepts;
  std::optional<SourceSpan> span;
};

struct Fact {
  Identifier relation;
  std::vector<Identifier> args;
  std::optional<TimePoint> time;
  friend auto operator<=>(const Fact&, const Fact&) = default;
};

std::string to_string(const Fact& f);

struct FactDecl {
  Fact fact;
  std::optional<SourceSpan> span;
};

struct DisjointDecl {
  Identifier first;
  Identifier second;
  Origin origin = Origin::User;
  std::optional<SourceSpan> span;
};

using Declaration =
    std::variant<ConceptDecl, RelationDecl, DisjointDecl, AnnotationDecl, LabelDecl, InstanceDecl, FactDecl>;

const std::optional<SourceSpan>& span_of(const Declaration& d);

// ---------------------------------------------------------------------------

/// The complete declared model. Mutable only while loading; afterwards it is
/// treated as an immutable value. Equality ignores source spans.
class Ontology {
 public:
  Ontology() = default;

  /// Appends one declaration, re-establishing name uniqueness and reference
  /// resolution. Returns the conflict instead when the declaration cannot be
  /// added; the ontology is left unchanged in that case.
  std::optional<Diagnostic> add(const Declaration& decl);

  bool has_concept(std::string_view name) const { return concepts_.contains(std::string(name)); }
  bool has_relation(std::string_view name) const { return relations_.contains(std::string(name)); }
  bool has_instance(std::string_view name) const { return instances_.contains(std::string(name)); }
  bool is_declared(std::string_view name) const;

  const ConceptDecl* find_concept(std::string_view name) const;
  const RelationDecl* find_relation(std::string_view name) const;
  const InstanceDecl* find_instance(std::string_view name) const;

  const std::map<Identifier, ConceptDecl>& concepts() const { return concepts_; }
  const std::map<Identifier, RelationDecl>& relations() const { return relations_; }
  const std::set<std::pair<Identifier, Identifier>>& disjoint_pairs() const { return disjoint_; }
  const std::map<Identifier, MetaAnnotation>& annotations() const { return annotations_; }
  const std::set<MetaLabel>& labels() const { return labels_; }
  const std::map<Identifier, InstanceDecl>& instances() const { return instances_; }
  const std::set<Fact>& facts() const { return facts_; }

  MetaAnnotation annotation(std::string_view concept_name) const;

  std::optional<SourceSpan> span_of_label(const MetaLabel& l) const;
  std::optional<SourceSpan> span_of_fact(const Fact& f) const;
  std::optional<SourceSpan> span_of_disjoint(const std::pair<Identifier, Identifier>& p) const;
  std::optional<SourceSpan> span_of_annotation(std::string_view concept_name) const;

  /// Origin of a disjointness pair or of one annotation axis (0 rigidity,
  /// 1 identity, 2 dependence). Used to render only user content.
  Origin disjoint_origin(const std::pair<Identifier, Identifier>& p) const;
  Origin annotation_origin(std::string_view concept_name, std::size_t axis) const;

  /// Greatest label time, or 0 when there are no labels.
  TimePoint max_label_time() const;

  friend bool operator==(const Ontology& a, const Ontology& b);

 private:
  std::optional<Diagnostic> add_concept(const ConceptDecl& d);
  std::optional<Diagnostic> add_relation(const RelationDecl& d);
  std::optional<Diagnostic> add_disjoint(const DisjointDecl& d);
  std::optional<Diagnostic> add_annotation(const AnnotationDecl& d);
  std::optional<Diagnostic> add_label(const LabelDecl& d);
  std::optional<Diagnostic> add_instance(const InstanceDecl& d);
  std::optional<Diagnostic> add_fact(const FactDecl& d);

  std::map<Identifier, ConceptDecl> concepts_;
  std::map<Identifier, RelationDecl> relations_;
  std::set<std::pair<Identifier, Identifier>> disjoint_;
  std::map<Identifier, MetaAnnotation> annotations_;
  std::set<MetaLabel> labels_;
  std::map<Identifier, InstanceDecl> instances_;
  std::set<Fact> facts_;

  // Provenance only; not part of the value.
  std::map<MetaLabel, SourceSpan> label_spans_;
  std::map<Fact, SourceSpan> fact_spans_;
  std::map<std::pair<Identifier, Identifier>, SourceSpan> disjoint_spans_;
  std::map<Identifier, SourceSpan> annotation_spans_;
  std::set<std::pair<Identifier, Identifier>> kernel_disjoint_;
  std::set<std::pair<Identifier, std::size_t>> kernel_axes_;

  // Names that count as declared while a mutually referencing group is
  // being added during load_declarations.
  bool known_concept(const Identifier& name) const { return has_concept(name) || forward_concepts_.contains(name); }
  std::set<Identifier> forward_concepts_;
  std::map<Identifier, RelationDecl> forward_relations_;

  friend Diagnostics load_declarations(Ontology& base, const std::vector<Declaration>& decls);
};

/// Loads a declaration list into `base` independent of declaration order:
/// declarations whose references are not yet resolvable are retried after the
/// rest, and only the ones that never resolve are reported as dangling.
Diagnostics load_declarations(Ontology& base, const std::vector<Declaration>& decls);

}  // namespace okc
