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

#include "okc/model.hpp"

#include <algorithm>

namespace okc {

std::string_view to_string(RoleMode m) { return m == RoleMode::Data ? "data" : "result"; }

std::string_view to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "rigid";
    case Rigidity::AntiRigid: return "anti-rigid";
    case Rigidity::SemiRigid: return "semi-rigid";
    case Rigidity::Unspecified: break;
  }
  return "unspecified";
}

std::string_view to_string(IdentityCriterion i) {
  switch (i) {
    case IdentityCriterion::Carries: return "carries";
    case IdentityCriterion::None: return "none";
    case IdentityCriterion::Unspecified: break;
  }
  return "unspecified";
}

std::string_view to_string(Dependence d) {
  switch (d) {
    case Dependence::Dependent: return "dependent";
    case Dependence::Independent: return "independent";
    case Dependence::Unspecified: break;
  }
  return "unspecified";
}

namespace {

struct PrimitiveName {
  Primitive primitive;
  std::string_view name;
};

constexpr PrimitiveName kPrimitiveNames[] = {
    {Primitive::Task, "Task"},
    {Primitive::Inference, "Inference"},
    {Primitive::TransferFunction, "TransferFunction"},
    {Primitive::DomainConcept, "DomainConcept"},
    {Primitive::KnowledgeRole, "KnowledgeRole"},
    {Primitive::FormalKnowledgeRole, "FormalKnowledgeRole"},
    {Primitive::MaterialKnowledgeRole, "MaterialKnowledgeRole"},
    {Primitive::Input, "Input"},
    {Primitive::Output, "Output"},
};

}  // namespace

std::string_view to_string(Primitive p) {
  for (const auto& e : kPrimitiveNames) {
    if (e.primitive == p) return e.name;
  }
  return "?";
}

std::optional<Primitive> parse_primitive(std::string_view s) {
  for (const auto& e : kPrimitiveNames) {
    if (e.name == s) return e.primitive;
  }
  return std::nullopt;
}

const std::vector<Primitive>& all_primitives() {
  static const std::vector<Primitive> kAll = [] {
    std::vector<Primitive> v;
    for (const auto& e : kPrimitiveNames) v.push_back(e.primitive);
    return v;
  }();
  return kAll;
}

bool is_knowledge_role_family(Primitive p) {
  switch (p) {
    case Primitive::KnowledgeRole:
    case Primitive::FormalKnowledgeRole:
    case Primitive::MaterialKnowledgeRole:
    case Primitive::Input:
    case Primitive::Output:
      return true;
    default:
      return false;
  }
}

LabelClass label_class(Primitive p) {
  switch (p) {
    case Primitive::Task: return LabelClass::Task;
    case Primitive::Inference: return LabelClass::Inference;
    case Primitive::TransferFunction: return LabelClass::TransferFunction;
    case Primitive::DomainConcept: return LabelClass::DomainConcept;
    default: return LabelClass::KnowledgeRole;
  }
}

std::string to_string(const Fact& f) {
  std::string s = f.relation + "(";
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    if (i) s += ", ";
    s += f.args[i];
  }
  if (f.time) {
    if (!f.args.empty()) s += ", ";
    s += std::to_string(*f.time);
  }
  return s + ")";
}

std::vector<Identifier> ConceptDecl::direct_subsumers() const {
  std::vector<Identifier> out(parents.begin(), parents.end());
  if (const auto* role = std::get_if<RoleDef>(&definition)) {
    out.emplace_back(role->mode == RoleMode::Data ? "Data" : "Result");
  } else if (const auto* conj = std::get_if<ConjunctionDef>(&definition)) {
    out.push_back(conj->type);
    out.push_back(conj->formal_role);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::optional<SourceSpan>& span_of(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::optional<SourceSpan>& { return x.span; }, d);
}

// ---------------------------------------------------------------------------

namespace {

Diagnostic conflict(std::string code, std::string message, const std::optional<SourceSpan>& span,
                    std::vector<std::string> subjects) {
  Diagnostic d;
  d.severity = Severity::Error;
  d.code = std::move(code);
  d.message = std::move(message);
  d.span = span;
  d.subjects = std::move(subjects);
  return d;
}

Diagnostic dangling(std::string_view what, const Identifier& name, const std::optional<SourceSpan>& span) {
  return conflict("M3", std::string(what) + " '" + name + "' is not declared", span, {name});
}

std::pair<Identifier, Identifier> ordered(const Identifier& a, const Identifier& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::size_t axis_of(const AnnotationValue& v) { return v.index(); }

}  // namespace

bool Ontology::is_declared(std::string_view name) const {
  return has_concept(name) || has_relation(name) || has_instance(name);
}

const ConceptDecl* Ontology::find_concept(std::string_view name) const {
  auto it = concepts_.find(std::string(name));
  return it == concepts_.end() ? nullptr : &it->second;
}

const RelationDecl* Ontology::find_relation(std::string_view name) const {
  auto it = relations_.find(std::string(name));
  return it == relations_.end() ? nullptr : &it->second;
}

const InstanceDecl* Ontology::find_instance(std::string_view name) const {
  auto it = instances_.find(std::string(name));
  return it == instances_.end() ? nullptr : &it->second;
}

MetaAnnotation Ontology::annotation(std::string_view concept_name) const {
  auto it = annotations_.find(std::string(concept_name));
  return it == annotations_.end() ? MetaAnnotation{} : it->second;
}

std::optional<Diagnostic> Ontology::add(const Declaration& decl) {
  return std::visit(
      [this](const auto& d) -> std::optional<Diagnostic> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ConceptDecl>) return add_concept(d);
        if constexpr (std::is_same_v<T, RelationDecl>) return add_relation(d);
        if constexpr (std::is_same_v<T, DisjointDecl>) return add_disjoint(d);
        if constexpr (std::is_same_v<T, AnnotationDecl>) return add_annotation(d);
        if constexpr (std::is_same_v<T, LabelDecl>) return add_label(d);
        if constexpr (std::is_same_v<T, InstanceDecl>) return add_instance(d);
        if constexpr (std::is_same_v<T, FactDecl>) return add_fact(d);
      },
      decl);
}

std::optional<Diagnostic> Ontology::add_concept(const ConceptDecl& d) {
  if (d.name.empty()) return conflict("M1", "concept name is empty", d.span, {});
  if (const auto* existing = find_concept(d.name)) {
    if (existing->origin == Origin::Kernel) {
      ConceptDecl restated = d;
      restated.origin = Origin::Kernel;
      if (restated.same_meaning(*existing)) return std::nullopt;  // verbatim restatement of the kernel
      return conflict("M2", "kernel concept '" + d.name + "' cannot be redefined", d.span, {d.name});
    }
    return conflict("M1", "'" + d.name + "' is already declared", d.span, {d.name});
  }
  if (const auto* rel = find_relation(d.name)) {
    return conflict(rel->origin == Origin::Kernel ? "M2" : "M1", "'" + d.name + "' is already declared as a relation",
                    d.span, {d.name});
  }
  if (has_instance(d.name)) {
    return conflict("M1", "'" + d.name + "' is already declared as an instance", d.span, {d.name});
  }
  for (const auto& ref : d.direct_subsumers()) {
    if (!known_concept(ref)) return dangling("concept", ref, d.span);
  }
  if (const auto* role = std::get_if<RoleDef>(&d.definition)) {
    if (!known_concept(role->reasoning_concept)) return dangling("concept", role->reasoning_concept, d.span);
  }
  concepts_.emplace(d.name, d);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_relation(const RelationDecl& d) {
  if (d.name.empty()) return conflict("M1", "relation name is empty", d.span, {});
  if (const auto* existing = find_relation(d.name)) {
    if (existing->origin == Origin::Kernel) {
      RelationDecl restated = d;
      restated.origin = Origin::Kernel;
      if (restated.same_meaning(*existing)) return std::nullopt;
      return conflict("M2", "kernel relation '" + d.name + "' cannot be redefined", d.span, {d.name});
    }
    return conflict("M1", "'" + d.name + "' is already declared", d.span, {d.name});
  }
  if (const auto* c = find_concept(d.name)) {
    return conflict(c->origin == Origin::Kernel ? "M2" : "M1", "'" + d.name + "' is already declared as a concept",
                    d.span, {d.name});
  }
  if (has_instance(d.name)) {
    return conflict("M1", "'" + d.name + "' is already declared as an instance", d.span, {d.name});
  }
  if (!known_concept(d.domain_concept)) return dangling("concept", d.domain_concept, d.span);
  if (d.range_concept && !known_concept(*d.range_concept)) return dangling("concept", *d.range_concept, d.span);
  if (d.particularizes) {
    const auto* parent = find_relation(*d.particularizes);
    if (!parent) {
      auto fwd = forward_relations_.find(*d.particularizes);
      if (fwd != forward_relations_.end()) parent = &fwd->second;
    }
    if (!parent) return dangling("relation", *d.particularizes, d.span);
    if (parent->entity_arity() != d.entity_arity()) {
      return conflict("M4",
                      "relation '" + d.name + "' has " + std::to_string(d.entity_arity()) +
                          " participants but particularizes '" + parent->name + "' with " +
                          std::to_string(parent->entity_arity()),
                      d.span, {d.name, parent->name});
    }
  }
  relations_.emplace(d.name, d);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_disjoint(const DisjointDecl& d) {
  if (!has_concept(d.first)) return dangling("concept", d.first, d.span);
  if (!has_concept(d.second)) return dangling("concept", d.second, d.span);
  auto key = ordered(d.first, d.second);
  if (disjoint_.contains(key)) {
    if (kernel_disjoint_.contains(key)) return std::nullopt;
    return conflict("M1", "disjointness of '" + key.first + "' and '" + key.second + "' is already declared", d.span,
                    {key.first, key.second});
  }
  disjoint_.insert(key);
  if (d.origin == Origin::Kernel) kernel_disjoint_.insert(key);
  if (d.span) disjoint_spans_.emplace(key, *d.span);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_annotation(const AnnotationDecl& d) {
  if (!has_concept(d.concept_name)) return dangling("concept", d.concept_name, d.span);
  MetaAnnotation current = annotation(d.concept_name);
  const std::size_t axis = axis_of(d.value);
  bool already_set = false;
  bool same_value = false;
  std::visit(
      [&](auto v) {
        using T = decltype(v);
        if constexpr (std::is_same_v<T, Rigidity>) {
          already_set = current.rigidity != Rigidity::Unspecified;
          same_value = current.rigidity == v;
          current.rigidity = v;
        } else if constexpr (std::is_same_v<T, IdentityCriterion>) {
          already_set = current.identity != IdentityCriterion::Unspecified;
          same_value = current.identity == v;
          current.identity = v;
        } else {
          already_set = current.dependence != Dependence::Unspecified;
          same_value = current.dependence == v;
          current.dependence = v;
        }
      },
      d.value);
  static constexpr std::string_view kAxisNames[] = {"rigidity", "identity", "dependence"};
  if (already_set) {
    if (same_value && kernel_axes_.contains({d.concept_name, axis})) return std::nullopt;
    return conflict("M1", std::string(kAxisNames[axis]) + " of '" + d.concept_name + "' is already annotated", d.span,
                    {d.concept_name});
  }
  annotations_[d.concept_name] = current;
  if (d.origin == Origin::Kernel) kernel_axes_.insert({d.concept_name, axis});
  if (d.span && !annotation_spans_.contains(d.concept_name)) annotation_spans_.emplace(d.concept_name, *d.span);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_label(const LabelDecl& d) {
  const auto& l = d.label;
  if (!has_concept(l.concept_name)) return dangling("concept", l.concept_name, d.span);
  if (labels_.contains(l)) {
    return conflict("M1",
                    "label " + std::string(to_string(l.primitive)) + " on '" + l.concept_name + "' at " +
                        std::to_string(l.time) + " is already declared",
                    d.span, {l.concept_name});
  }
  labels_.insert(l);
  if (d.span) label_spans_.emplace(l, *d.span);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_instance(const InstanceDecl& d) {
  if (d.name.empty()) return conflict("M1", "instance name is empty", d.span, {});
  if (is_declared(d.name)) return conflict("M1", "'" + d.name + "' is already declared", d.span, {d.name});
  for (const auto& c : d.asserted_concepts) {
    if (!has_concept(c)) return dangling("concept", c, d.span);
  }
  instances_.emplace(d.name, d);
  return std::nullopt;
}

std::optional<Diagnostic> Ontology::add_fact(const FactDecl& d) {
  const auto& f = d.fact;
  const auto* rel = find_relation(f.relation);
  if (!rel) return dangling("relation", f.relation, d.span);
  if (f.args.size() != rel->entity_arity()) {
    return conflict("M4",
                    "relation '" + rel->name + "' takes " + std::to_string(rel->entity_arity()) + " arguments, got " +
                        std::to_string(f.args.size()),
                    d.span, {rel->name});
  }
  if (f.time.has_value() != rel->temporal) {
    return conflict("M4",
                    rel->temporal ? "relation '" + rel->name + "' is temporal and needs a time argument"
                                  : "relation '" + rel->name + "' is not temporal and takes no time argument",
                    d.span, {rel->name});
  }
  for (const auto& a : f.args) {
    if (!has_instance(a)) return dangling("instance", a, d.span);
  }
  if (facts_.contains(f)) return conflict("M1", "fact " + to_string(f) + " is already declared", d.span, {f.relation});
  facts_.insert(f);
  if (d.span) fact_spans_.emplace(f, *d.span);
  return std::nullopt;
}

std::optional<SourceSpan> Ontology::span_of_label(const MetaLabel& l) const {
  auto it = label_spans_.find(l);
  return it == label_spans_.end() ? std::nullopt : std::optional(it->second);
}

std::optional<SourceSpan> Ontology::span_of_fact(const Fact& f) const {
  auto it = fact_spans_.find(f);
  return it == fact_spans_.end() ? std::nullopt : std::optional(it->second);
}

std::optional<SourceSpan> Ontology::span_of_disjoint(const std::pair<Identifier, Identifier>& p) const {
  auto it = disjoint_spans_.find(p);
  return it == disjoint_spans_.end() ? std::nullopt : std::optional(it->second);
}

std::optional<SourceSpan> Ontology::span_of_annotation(std::string_view concept_name) const {
  auto it = annotation_spans_.find(std::string(concept_name));
  return it == annotation_spans_.end() ? std::nullopt : std::optional(it->second);
}

Origin Ontology::disjoint_origin(const std::pair<Identifier, Identifier>& p) const {
  return kernel_disjoint_.contains(p) ? Origin::Kernel : Origin::User;
}

Origin Ontology::annotation_origin(std::string_view concept_name, std::size_t axis) const {
  return kernel_axes_.contains({std::string(concept_name), axis}) ? Origin::Kernel : Origin::User;
}

TimePoint Ontology::max_label_time() const {
  TimePoint t = 0;
  for (const auto& l : labels_) t = std::max(t, l.time);
  return t;
}

bool operator==(const Ontology& a, const Ontology& b) {
  if (a.concepts_.size() != b.concepts_.size() || a.relations_.size() != b.relations_.size() ||
      a.instances_.size() != b.instances_.size()) {
    return false;
  }
  for (const auto& [name, c] : a.concepts_) {
    const auto* o = b.find_concept(name);
    if (!o || !c.same_meaning(*o)) return false;
  }
  for (const auto& [name, r] : a.relations_) {
    const auto* o = b.find_relation(name);
    if (!o || !r.same_meaning(*o)) return false;
  }
  for (const auto& [name, i] : a.instances_) {
    const auto* o = b.find_instance(name);
    if (!o || o->asserted_concepts != i.asserted_concepts) return false;
  }
  return a.disjoint_ == b.disjoint_ && a.annotations_ == b.annotations_ && a.labels_ == b.labels_ &&
         a.facts_ == b.facts_ && a.kernel_disjoint_ == b.kernel_disjoint_ && a.kernel_axes_ == b.kernel_axes_;
}

namespace {

// Pending concept and relation declarations whose references all resolve
// within the ontology or the group itself. Such a group can only be stuck
// because its members refer to each other (a cycle the validator reports).
std::pair<std::vector<const ConceptDecl*>, std::vector<const RelationDecl*>> self_contained_group(
    const Ontology& o, const std::vector<const Declaration*>& pending) {
  std::vector<const ConceptDecl*> concepts;
  std::vector<const RelationDecl*> relations;
  for (const auto* d : pending) {
    if (const auto* c = std::get_if<ConceptDecl>(d)) concepts.push_back(c);
    if (const auto* r = std::get_if<RelationDecl>(d)) relations.push_back(r);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<Identifier> cnames, rnames;
    for (const auto* c : concepts) cnames.insert(c->name);
    for (const auto* r : relations) rnames.insert(r->name);
    auto concept_ok = [&](const Identifier& n) { return o.has_concept(n) || cnames.contains(n); };
    auto drop = [&](auto& list, auto resolves) {
      auto it = std::remove_if(list.begin(), list.end(), [&](const auto* d) { return !resolves(*d); });
      if (it != list.end()) changed = true;
      list.erase(it, list.end());
    };
    drop(concepts, [&](const ConceptDecl& c) {
      for (const auto& ref : c.direct_subsumers()) {
        if (!concept_ok(ref)) return false;
      }
      const auto* role = std::get_if<RoleDef>(&c.definition);
      return !role || concept_ok(role->reasoning_concept);
    });
    drop(relations, [&](const RelationDecl& r) {
      if (!concept_ok(r.domain_concept)) return false;
      if (r.range_concept && !concept_ok(*r.range_concept)) return false;
      return !r.particularizes || o.has_relation(*r.particularizes) || rnames.contains(*r.particularizes);
    });
  }
  return {concepts, relations};
}

}  // namespace

Diagnostics load_declarations(Ontology& base, const std::vector<Declaration>& decls) {
  Diagnostics out;
  std::vector<const Declaration*> pending;
  pending.reserve(decls.size());
  for (const auto& d : decls) pending.push_back(&d);

  std::vector<std::pair<const Declaration*, Diagnostic>> unresolved;
  auto pass = [&] {
    bool progress = false;
    unresolved.clear();
    for (const auto* d : pending) {
      auto result = base.add(*d);
      if (!result) {
        progress = true;
      } else if (result->code == "M3") {
        unresolved.emplace_back(d, std::move(*result));
      } else {
        progress = true;
        out.push_back(std::move(*result));
      }
    }
    pending.clear();
    for (const auto& [d, diag] : unresolved) pending.push_back(d);
    return progress;
  };

  while (!pending.empty()) {
    if (pass()) continue;
    auto [concepts, relations] = self_contained_group(base, pending);
    if (concepts.empty() && relations.empty()) break;
    for (const auto* c : concepts) base.forward_concepts_.insert(c->name);
    for (const auto* r : relations) base.forward_relations_.emplace(r->name, *r);
    const bool progress = pass();
    base.forward_concepts_.clear();
    base.forward_relations_.clear();
    if (!progress) break;
  }
  for (auto& [d, diag] : unresolved) out.push_back(std::move(diag));
  sort_diagnostics(out);
  return out;
}

}  // namespace okc
