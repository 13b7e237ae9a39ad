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

#include "okc/compiler.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "okc/validator.hpp"

namespace okc {

namespace {

using nlohmann::json;

std::vector<Identifier> nearest_within(const std::set<Identifier>& model, const SubsumptionClosure& cl,
                                       const Identifier& c) {
  std::vector<Identifier> out;
  for (const auto& p : model) {
    if (p == c || !cl.subsumes(p, c)) continue;
    bool direct = true;
    for (const auto& q : model) {
      if (q != p && q != c && cl.subsumes(p, q) && cl.subsumes(q, c)) {
        direct = false;
        break;
      }
    }
    if (direct) out.push_back(p);
  }
  return out;
}

std::map<Identifier, std::vector<Identifier>> players_by_role(const Ontology& o) {
  std::map<Identifier, std::vector<Identifier>> players;
  for (const auto& [name, c] : o.concepts()) {
    if (const auto* conj = std::get_if<ConjunctionDef>(&c.definition)) {
      players[conj->formal_role].push_back(conj->type);
    }
  }
  for (auto& [_, v] : players) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return players;
}

}  // namespace

ModelBundle extract_bundle(const Ontology& o, const SubsumptionClosure& cl, TimePoint snapshot) {
  ModelBundle b;
  b.snapshot_time = snapshot;

  std::map<Identifier, std::vector<Primitive>> domain_labels, inference_labels, task_labels;
  for (const auto& l : effective_labels(o, snapshot)) {
    switch (l.primitive) {
      case Primitive::DomainConcept: domain_labels[l.concept_name].push_back(l.primitive); break;
      case Primitive::Inference:
      case Primitive::TransferFunction: inference_labels[l.concept_name].push_back(l.primitive); break;
      case Primitive::Task: task_labels[l.concept_name].push_back(l.primitive); break;
      default: break;
    }
  }

  const auto players = players_by_role(o);
  std::vector<RoleRef> roles;
  for (const auto& [name, c] : o.concepts()) {
    if (const auto* role = std::get_if<RoleDef>(&c.definition)) {
      auto it = players.find(name);
      roles.push_back({name, role->mode, role->reasoning_concept,
                       it == players.end() ? std::vector<Identifier>{} : it->second});
    }
  }

  auto build = [&](const std::map<Identifier, std::vector<Primitive>>& labeled, bool with_io) {
    std::set<Identifier> members;
    for (const auto& [name, _] : labeled) members.insert(name);
    std::vector<BundleConcept> out;
    for (const auto& [name, prims] : labeled) {
      BundleConcept bc;
      bc.name = name;
      bc.primitives = prims;
      bc.parents = nearest_within(members, cl, name);
      bc.annotation = o.annotation(name);
      if (with_io) {
        for (const auto& r : roles) {
          if (!cl.subsumes(r.reasoning_concept, name)) continue;
          (r.mode == RoleMode::Data ? bc.inputs : bc.outputs).push_back(r);
        }
      }
      out.push_back(std::move(bc));
    }
    return out;
  };

  b.domain = build(domain_labels, false);
  b.inference = build(inference_labels, true);
  b.task = build(task_labels, true);

  for (const auto& [name, c] : o.concepts()) {
    if (const auto* conj = std::get_if<ConjunctionDef>(&c.definition)) b.plays.push_back({conj->type, name});
  }
  std::sort(b.plays.begin(), b.plays.end());

  for (const auto& [name, r] : o.relations()) {
    if (r.origin != Origin::User || !r.range_concept) continue;
    if (domain_labels.contains(r.domain_concept) && domain_labels.contains(*r.range_concept)) {
      b.domain_relations.push_back({name, r.domain_concept, *r.range_concept, r.temporal});
    }
  }
  return b;
}

CompileResult compile_bundle(const Ontology& o, TimePoint snapshot) {
  CompileResult result;
  Analysis a = analyze(o);
  result.diagnostics = std::move(a.diagnostics);
  if (has_errors(result.diagnostics) || !a.closure) {
    Diagnostic refused;
    refused.code = "C1";
    refused.message = "compilation refused: the model has " +
                      std::to_string(count_severity(result.diagnostics, Severity::Error)) + " error(s)";
    result.diagnostics.push_back(std::move(refused));
    sort_diagnostics(result.diagnostics);
    return result;
  }
  result.bundle = extract_bundle(o, *a.closure, snapshot);
  if (effective_labels(o, snapshot).empty()) {
    Diagnostic warn;
    warn.code = "C2";
    warn.severity = Severity::Warning;
    warn.message = "no label is effective at snapshot time " + std::to_string(snapshot) + "; the bundle is empty";
    result.diagnostics.push_back(std::move(warn));
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

namespace {

json annotation_json(const MetaAnnotation& a) {
  return json{{"rigidity", to_string(a.rigidity)},
              {"identity", to_string(a.identity)},
              {"dependence", to_string(a.dependence)}};
}

json role_json(const RoleRef& r) {
  return json{{"name", r.name},
              {"mode", to_string(r.mode)},
              {"reasoning_concept", r.reasoning_concept},
              {"players", r.players}};
}

json concept_json(const BundleConcept& c, bool with_io, bool with_methods) {
  json j;
  j["name"] = c.name;
  j["parents"] = c.parents;
  j["annotations"] = annotation_json(c.annotation);
  auto prims = json::array();
  for (auto p : c.primitives) prims.push_back(std::string(to_string(p)));
  j["primitives"] = prims;
  if (with_io) {
    auto inputs = json::array();
    auto outputs = json::array();
    for (const auto& r : c.inputs) inputs.push_back(role_json(r));
    for (const auto& r : c.outputs) outputs.push_back(role_json(r));
    j["io"] = json{{"inputs", inputs}, {"outputs", outputs}};
  }
  if (with_methods) j["methods"] = json::array();
  return j;
}

json model_json(TimePoint snapshot, const std::vector<BundleConcept>& concepts, bool with_io, bool with_methods) {
  json j;
  j["schema_version"] = "1";
  j["snapshot_time"] = snapshot;
  auto arr = json::array();
  for (const auto& c : concepts) arr.push_back(concept_json(c, with_io, with_methods));
  j["concepts"] = arr;
  return j;
}

}  // namespace

std::map<std::string, std::string> bundle_files(const ModelBundle& b) {
  json domain = model_json(b.snapshot_time, b.domain, false, false);
  auto plays = json::array();
  for (const auto& p : b.plays) plays.push_back(json{{"type", p.type}, {"role", p.role}});
  domain["plays"] = plays;
  auto rels = json::array();
  for (const auto& r : b.domain_relations) {
    rels.push_back(json{{"name", r.name}, {"domain", r.domain_concept}, {"range", r.range_concept},
                        {"temporal", r.temporal}});
  }
  domain["relations"] = rels;

  return {
      {"domain.json", domain.dump(2) + "\n"},
      {"inference.json", model_json(b.snapshot_time, b.inference, true, false).dump(2) + "\n"},
      {"task.json", model_json(b.snapshot_time, b.task, true, true).dump(2) + "\n"},
  };
}

void emit_bundle(const ModelBundle& bundle, const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create '" + directory.string() + "': " + ec.message());

  for (const auto& [name, text] : bundle_files(bundle)) {
    const fs::path target = directory / name;
    const fs::path temp = directory / (name + ".tmp");
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write '" + temp.string() + "'");
      out << text;
      out.flush();
      if (!out) throw std::runtime_error("cannot write '" + temp.string() + "'");
    }
    fs::rename(temp, target, ec);
    if (ec) throw std::runtime_error("cannot rename into '" + target.string() + "': " + ec.message());
  }
}

}  // namespace okc
