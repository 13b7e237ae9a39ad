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

#include "okc/kernel.hpp"

#include <stdexcept>

namespace okc {

namespace {

struct EdgeCitation {
  std::string_view child;
  std::string_view parent;
  std::string_view code;
};

constexpr EdgeCitation kEdgeCitations[] = {
    {"Reasoning", "AC", "A1"},
    {"Communication", "Interaction", "A2"},
    {"Patient", "ED", "T1"},
    {"Data", "Patient", "T2"},
    {"Data", "Content", "T3"},
};

ConceptDecl kconcept(std::string name, std::initializer_list<std::string> parents) {
  ConceptDecl c;
  c.name = std::move(name);
  c.origin = Origin::Kernel;
  c.parents = std::set<Identifier>(parents);
  return c;
}

RelationDecl krelation(std::string name, std::string domain, std::optional<std::string> range, bool temporal,
                       std::optional<std::string> particularizes = std::nullopt) {
  RelationDecl r;
  r.name = std::move(name);
  r.origin = Origin::Kernel;
  r.domain_concept = std::move(domain);
  r.range_concept = std::move(range);
  r.temporal = temporal;
  r.particularizes = std::move(particularizes);
  return r;
}

AnnotationDecl kannotate(std::string concept_name, AnnotationValue v) {
  AnnotationDecl a;
  a.concept_name = std::move(concept_name);
  a.value = v;
  a.origin = Origin::Kernel;
  return a;
}

DisjointDecl kdisjoint(std::string a, std::string b) {
  DisjointDecl d;
  d.first = std::move(a);
  d.second = std::move(b);
  d.origin = Origin::Kernel;
  return d;
}

std::vector<Declaration> build_kernel() {
  std::vector<Declaration> k;
  // DOLCE fragment.
  k.emplace_back(kconcept("PT", {}));
  k.emplace_back(kconcept("ED", {"PT"}));
  k.emplace_back(kconcept("PD", {"PT"}));
  k.emplace_back(kconcept("POB", {"ED"}));
  k.emplace_back(kconcept("NPOB", {"ED"}));
  k.emplace_back(kconcept("MOB", {"NPOB"}));
  k.emplace_back(kconcept("APO", {"POB"}));
  k.emplace_back(kconcept("ASO", {"NPOB"}));
  k.emplace_back(kconcept("EV", {"PD"}));
  k.emplace_back(kconcept("STV", {"PD"}));
  k.emplace_back(kconcept("ACC", {"EV"}));
  k.emplace_back(kconcept("AC", {"ACC"}));

  // Problem-solving actions.
  k.emplace_back(kconcept("Reasoning", {"AC"}));
  k.emplace_back(kconcept("Interaction", {"AC"}));
  k.emplace_back(kconcept("Communication", {"Interaction"}));

  // Documents and their contents.
  k.emplace_back(kconcept("Document", {"POB"}));
  k.emplace_back(kconcept("Expression", {"NPOB"}));
  k.emplace_back(kconcept("Discourse", {"Expression"}));
  k.emplace_back(kconcept("Content", {"MOB"}));
  k.emplace_back(kconcept("Proposition", {"Content"}));
  k.emplace_back(kconcept("IdaConcept", {"Content"}));
  k.emplace_back(kconcept("Subject", {"IdaConcept"}));
  k.emplace_back(kconcept("Message", {"Proposition"}));
  k.emplace_back(kconcept("Assertion", {"Proposition"}));
  k.emplace_back(kconcept("Model", {"Proposition"}));
  k.emplace_back(kconcept("Hypothesis", {"Proposition"}));
  k.emplace_back(kconcept("Complaint", {"Message"}));
  k.emplace_back(kconcept("Information", {"Message"}));

  // Participation roles.
  k.emplace_back(kconcept("Patient", {"ED"}));
  k.emplace_back(kconcept("Data", {"Patient", "Content"}));
  k.emplace_back(kconcept("Result", {"Patient", "Content"}));

  k.emplace_back(kdisjoint("ED", "PD"));
  k.emplace_back(kdisjoint("Reasoning", "Communication"));

  k.emplace_back(krelation("PC", "ED", "PD", true));
  k.emplace_back(krelation("PRE", "PD", std::nullopt, true));
  k.emplace_back(krelation("isAgentOf", "ED", "AC", false));
  k.emplace_back(krelation("isAffectedBy", "ED", "PD", false, "PC"));
  k.emplace_back(krelation("isDataOf", "Content", "AC", false, "isAffectedBy"));
  k.emplace_back(krelation("isResultOf", "Content", "AC", false, "isAffectedBy"));
  k.emplace_back(krelation("hasForSubject", "Proposition", "IdaConcept", false));

  for (const char* role : {"Patient", "Data", "Result"}) {
    k.emplace_back(kannotate(role, Rigidity::AntiRigid));
    k.emplace_back(kannotate(role, Dependence::Dependent));
  }
  for (const char* c : {"PT", "ED", "PD", "POB", "NPOB", "MOB", "APO", "ASO", "EV", "STV", "ACC", "AC"}) {
    k.emplace_back(kannotate(c, Rigidity::Rigid));
  }
  return k;
}

const Ontology& kernel_instance() {
  static const Ontology kKernel = [] {
    Ontology o;
    for (const auto& d : kernel_declarations()) {
      if (auto err = o.add(d)) throw std::logic_error("kernel catalog is inconsistent: " + err->message);
    }
    return o;
  }();
  return kKernel;
}

}  // namespace

const std::vector<Declaration>& kernel_declarations() {
  static const std::vector<Declaration> kDecls = build_kernel();
  return kDecls;
}

Ontology kernel_ontology() { return kernel_instance(); }

LoadResult merge_with_kernel(const std::vector<Declaration>& user_declarations) {
  LoadResult r{kernel_instance(), {}};
  r.diagnostics = load_declarations(r.ontology, user_declarations);
  return r;
}

std::optional<std::string_view> kernel_edge_citation(std::string_view child, std::string_view parent) {
  for (const auto& e : kEdgeCitations) {
    if (e.child == child && e.parent == parent) return e.code;
  }
  return std::nullopt;
}

std::optional<std::string_view> kernel_particularization_citation(std::string_view relation) {
  if (relation == kn::isDataOf) return "A11";
  return std::nullopt;
}

}  // namespace okc
