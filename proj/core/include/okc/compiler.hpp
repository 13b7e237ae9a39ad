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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okc/model.hpp"
#include "okc/reasoner.hpp"

namespace okc {

struct RoleRef {
  Identifier name;
  RoleMode mode = RoleMode::Data;
  Identifier reasoning_concept;
  std::vector<Identifier> players;  // types conjoined with this role
  friend bool operator==(const RoleRef&, const RoleRef&) = default;
};

struct BundleConcept {
  Identifier name;
  std::vector<Primitive> primitives;  // effective labels placing it in this model
  std::vector<Identifier> parents;    // nearest subsumers inside the same model
  MetaAnnotation annotation;
  std::vector<RoleRef> inputs;   // task and inference models only
  std::vector<RoleRef> outputs;
  friend bool operator==(const BundleConcept&, const BundleConcept&) = default;
};

struct PlaysLink {
  Identifier type;
  Identifier role;
  friend auto operator<=>(const PlaysLink&, const PlaysLink&) = default;
};

struct DomainRelation {
  Identifier name;
  Identifier domain_concept;
  Identifier range_concept;
  bool temporal = false;
  friend bool operator==(const DomainRelation&, const DomainRelation&) = default;
};

struct ModelBundle {
  TimePoint snapshot_time = 0;
  std::vector<BundleConcept> domain;
  std::vector<PlaysLink> plays;
  std::vector<DomainRelation> domain_relations;
  std::vector<BundleConcept> inference;
  std::vector<BundleConcept> task;

  bool empty() const { return domain.empty() && inference.empty() && task.empty(); }
  friend bool operator==(const ModelBundle&, const ModelBundle&) = default;
};

/// Reorganizes labeled concepts into the three models without validating.
ModelBundle extract_bundle(const Ontology& o, const SubsumptionClosure& closure, TimePoint snapshot);

struct CompileResult {
  std::optional<ModelBundle> bundle;  // absent when validation reported errors
  Diagnostics diagnostics;
};

/// Validates, then extracts. Refuses (C1) when any error diagnostic exists;
/// warns (C2) when no label is effective at `snapshot`.
CompileResult compile_bundle(const Ontology& o, TimePoint snapshot);

/// File name -> canonical JSON text (sorted keys, 2-space indent, LF).
std::map<std::string, std::string> bundle_files(const ModelBundle& bundle);

/// Writes domain.json, inference.json and task.json into `directory`
/// (created if missing). Each file is written to a temporary name and
/// renamed into place. Throws std::runtime_error naming the path on failure.
void emit_bundle(const ModelBundle& bundle, const std::filesystem::path& directory);

}  // namespace okc
