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

#include "random_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "okc/frontend.hpp"

namespace okc::testing {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& choose(std::mt19937& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

const std::vector<std::string> kInstanceConcepts = {"APO", "ASO", "AC", "Reasoning", "Communication", "Proposition",
                                                    "IdaConcept", "Model", "Hypothesis", "STV", "POB", "Content"};
const std::vector<std::string> kParentConcepts = {"Reasoning", "Model", "Hypothesis", "STV", "POB", "Content",
                                                  "AC", "IdaConcept", "Communication"};

struct UserRelation {
  std::string name;
  std::size_t entity_arity;
  bool temporal;
};

}  // namespace

RandomDag random_dag(std::mt19937& rng, int max_nodes) {
  RandomDag dag;
  const int n = pick(rng, 1, max_nodes);
  for (int i = 0; i < n; ++i) dag.names.push_back("N" + std::to_string(i));
  std::shuffle(dag.names.begin(), dag.names.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  for (int child = 1; child < n; ++child) {
    for (int parent = 0; parent < child; ++parent) {
      if (coin(rng, density)) dag.edges.emplace_back(child, parent);
    }
  }
  std::vector<std::string> lines;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> parents;
    for (const auto& [c, p] : dag.edges) {
      if (c == i) parents.push_back(dag.names[static_cast<std::size_t>(p)]);
    }
    std::string line = "concept " + dag.names[static_cast<std::size_t>(i)];
    if (!parents.empty()) line += " specializes " + join(parents);
    lines.push_back(line);
  }
  std::shuffle(lines.begin(), lines.end(), rng);
  for (const auto& l : lines) dag.text += l + "\n";
  return dag;
}

std::string random_model_text(std::mt19937& rng, const ModelShape& shape) {
  std::vector<std::string> lines;
  std::vector<std::string> concepts;  // user concepts declared so far

  const int n_concepts = pick(rng, 0, shape.max_concepts);
  for (int i = 0; i < n_concepts; ++i) {
    const std::string name = "C" + std::to_string(i);
    std::vector<std::string> pool = kParentConcepts;
    pool.insert(pool.end(), concepts.begin(), concepts.end());
    const int form = pick(rng, 0, 9);
    if (form < 2) {
      lines.push_back("role " + name + " = " + (coin(rng) ? "data" : "result") + " of " + choose(rng, pool));
    } else if (form < 4 && !concepts.empty()) {
      std::string a = choose(rng, pool);
      std::string b = choose(rng, pool);
      if (a == b) b = a == "Model" ? "Content" : "Model";
      lines.push_back("concept " + name + " = " + a + " and " + b);
    } else {
      std::set<std::string> parents;
      const int k = pick(rng, 0, 2);
      for (int j = 0; j < k; ++j) parents.insert(choose(rng, pool));
      std::string line = "concept " + name;
      if (!parents.empty()) line += " specializes " + join({parents.begin(), parents.end()});
      lines.push_back(line);
    }
    concepts.push_back(name);
  }

  std::vector<std::string> all_concepts = kInstanceConcepts;
  all_concepts.insert(all_concepts.end(), concepts.begin(), concepts.end());

  // Relations; particularization only toward relations with the same number
  // of participants, and only backwards, so chains stay acyclic.
  std::vector<UserRelation> relations = {
      {"PC", 2, true},       {"PRE", 1, true},          {"isAgentOf", 2, false},    {"isAffectedBy", 2, false},
      {"isDataOf", 2, false}, {"isResultOf", 2, false}, {"hasForSubject", 2, false},
  };
  const int n_relations = pick(rng, 0, shape.max_relations);
  for (int i = 0; i < n_relations; ++i) {
    UserRelation r{"r" + std::to_string(i), coin(rng, 0.8) ? 2u : 1u, coin(rng)};
    std::string line = "relation " + r.name;
    if (coin(rng, 0.6)) {
      std::vector<std::string> parents;
      for (const auto& p : relations) {
        if (p.entity_arity == r.entity_arity) parents.push_back(p.name);
      }
      if (!parents.empty()) line += " particularizes " + choose(rng, parents);
    }
    line += " signature (" + choose(rng, all_concepts);
    if (r.entity_arity == 2) line += ", " + choose(rng, all_concepts);
    line += ")";
    if (r.temporal) line += " temporal";
    lines.push_back(line);
    relations.push_back(r);
  }

  // Disjointness and annotations over user concepts.
  std::set<std::pair<std::string, std::string>> disjoint;
  for (int i = 0; i < pick(rng, 0, 2) && concepts.size() >= 2; ++i) {
    std::string a = choose(rng, concepts), b = choose(rng, concepts);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (disjoint.insert({a, b}).second) lines.push_back("disjoint " + a + " " + b);
  }
  for (const auto& c : concepts) {
    if (coin(rng, 0.4)) {
      lines.push_back("annotate " + c + " rigidity " +
                      std::vector<std::string>{"rigid", "anti-rigid", "semi-rigid"}[pick(rng, 0, 2)]);
    }
    if (coin(rng, 0.4)) lines.push_back("annotate " + c + " identity " + (coin(rng) ? "carries" : "none"));
    if (coin(rng, 0.4)) {
      lines.push_back("annotate " + c + " dependence " + (coin(rng) ? "dependent" : "independent"));
    }
  }

  if (shape.with_labels) {
    std::set<MetaLabel> labels;
    for (int i = 0; i < pick(rng, 0, 4) && !concepts.empty(); ++i) {
      MetaLabel l{choose(rng, all_primitives()), choose(rng, concepts),
                  static_cast<TimePoint>(pick(rng, 0, static_cast<int>(shape.max_time) + 1))};
      if (labels.insert(l).second) {
        lines.push_back("label " + std::string(to_string(l.primitive)) + " " + l.concept_name + " at " +
                        std::to_string(l.time));
      }
    }
  }

  std::vector<std::string> instances;
  const int n_instances = pick(rng, 1, shape.max_instances);
  for (int i = 0; i < n_instances; ++i) {
    const std::string name = "i" + std::to_string(i);
    std::set<std::string> types;
    const int k = pick(rng, 0, 2);
    for (int j = 0; j < k; ++j) types.insert(choose(rng, all_concepts));
    std::string line = "instance " + name;
    if (!types.empty()) line += " : " + join({types.begin(), types.end()});
    lines.push_back(line);
    instances.push_back(name);
  }

  std::set<std::string> facts;
  const int n_facts = pick(rng, 0, shape.max_facts);
  for (int i = 0; i < n_facts; ++i) {
    const auto& r = choose(rng, relations);
    std::vector<std::string> args;
    for (std::size_t a = 0; a < r.entity_arity; ++a) args.push_back(choose(rng, instances));
    if (r.temporal) args.push_back(std::to_string(pick(rng, 0, static_cast<int>(shape.max_time))));
    const std::string line = "fact " + r.name + "(" + join(args) + ")";
    if (facts.insert(line).second) lines.push_back(line);
  }

  std::shuffle(lines.begin(), lines.end(), rng);
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Ontology load_or_throw(std::string_view text, std::string_view filename) {
  LoadResult r = load_text(text, filename);
  if (!r.ok()) {
    std::ostringstream os;
    print_diagnostics(os, r.diagnostics);
    throw std::runtime_error("generated model does not load:\n" + os.str() + "--- source ---\n" + std::string(text));
  }
  return std::move(r.ontology);
}

}  // namespace okc::testing
