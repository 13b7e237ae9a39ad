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

#include <sstream>

#include "okc/frontend.hpp"

namespace okc {

namespace {

void join(std::ostringstream& os, const auto& items, std::string_view sep = ", ") {
  bool first = true;
  for (const auto& i : items) {
    if (!first) os << sep;
    os << i;
    first = false;
  }
}

void render_concept(std::ostringstream& os, const ConceptDecl& c) {
  if (const auto* role = std::get_if<RoleDef>(&c.definition)) {
    os << "role " << c.name << " = " << to_string(role->mode) << " of " << role->reasoning_concept << '\n';
    return;
  }
  if (const auto* conj = std::get_if<ConjunctionDef>(&c.definition)) {
    os << "concept " << c.name << " = " << conj->type << " and " << conj->formal_role << '\n';
    return;
  }
  os << "concept " << c.name;
  if (!c.parents.empty()) {
    os << " specializes ";
    join(os, c.parents);
  }
  os << '\n';
}

void render_relation(std::ostringstream& os, const RelationDecl& r) {
  os << "relation " << r.name;
  if (r.particularizes) os << " particularizes " << *r.particularizes;
  os << " signature (" << r.domain_concept;
  if (r.range_concept) os << ", " << *r.range_concept;
  os << ')';
  if (r.temporal) os << " temporal";
  os << '\n';
}

}  // namespace

std::string render(const Ontology& o, RenderOptions options) {
  std::ostringstream os;
  auto wanted = [&](Origin origin) { return options.include_kernel || origin == Origin::User; };

  for (const auto& [name, c] : o.concepts()) {
    if (wanted(c.origin)) render_concept(os, c);
  }
  for (const auto& [name, r] : o.relations()) {
    if (wanted(r.origin)) render_relation(os, r);
  }
  for (const auto& p : o.disjoint_pairs()) {
    if (wanted(o.disjoint_origin(p))) os << "disjoint " << p.first << ' ' << p.second << '\n';
  }
  for (const auto& [name, a] : o.annotations()) {
    if (a.rigidity != Rigidity::Unspecified && wanted(o.annotation_origin(name, 0))) {
      os << "annotate " << name << " rigidity " << to_string(a.rigidity) << '\n';
    }
    if (a.identity != IdentityCriterion::Unspecified && wanted(o.annotation_origin(name, 1))) {
      os << "annotate " << name << " identity " << to_string(a.identity) << '\n';
    }
    if (a.dependence != Dependence::Unspecified && wanted(o.annotation_origin(name, 2))) {
      os << "annotate " << name << " dependence " << to_string(a.dependence) << '\n';
    }
  }
  for (const auto& [name, inst] : o.instances()) {
    os << "instance " << name;
    if (!inst.asserted_concepts.empty()) {
      os << " : ";
      join(os, inst.asserted_concepts);
    }
    os << '\n';
  }
  for (const auto& f : o.facts()) os << "fact " << to_string(f) << '\n';
  for (const auto& l : o.labels()) {
    os << "label " << to_string(l.primitive) << ' ' << l.concept_name << " at " << l.time << '\n';
  }
  return os.str();
}

std::string render_kernel() {
  return "# okc kernel catalog\n" + render(kernel_ontology(), RenderOptions{.include_kernel = true});
}

}  // namespace okc
