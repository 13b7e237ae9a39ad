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

#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okc/kernel.hpp"

namespace okc::testing {

/// A random concept DAG over user concepts. Edges are (child, parent) indices
/// into `names`; every parent has a smaller index than its child, but names
/// are shuffled so the order is not visible in the text.
struct RandomDag {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::string text;
};
RandomDag random_dag(std::mt19937& rng, int max_nodes);

struct ModelShape {
  int max_concepts = 6;
  int max_instances = 8;
  int max_relations = 4;
  int max_facts = 14;
  TimePoint max_time = 2;
  bool with_labels = true;
};

/// Source text of a random model that loads without errors. It exercises
/// every statement form; it is not meant to validate.
std::string random_model_text(std::mt19937& rng, const ModelShape& shape = {});

/// load_text that fails loudly; for generated input that must load.
Ontology load_or_throw(std::string_view text, std::string_view filename = "<generated>");

}  // namespace okc::testing
