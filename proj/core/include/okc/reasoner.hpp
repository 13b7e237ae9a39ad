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
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "okc/model.hpp"

namespace okc {

/// Thrown by SubsumptionClosure when the taxonomy has a cycle. The validator
/// reports cycles as W1 before computing the closure, so reaching this means
/// a caller skipped that check.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<Identifier> cycle);
  const std::vector<Identifier>& cycle() const { return cycle_; }

 private:
  std::vector<Identifier> cycle_;
};

/// Every cycle-closing path in the concept taxonomy (asserted parents,
/// conjunction operands, role supertypes), each listed once from its
/// smallest member.
std::vector<std::vector<Identifier>> find_taxonomy_cycles(const Ontology& o);

/// Same for particularization chains between relations.
std::vector<std::vector<Identifier>> find_particularization_cycles(const Ontology& o);

/// Reflexive-transitive reachability over the taxonomy.
/// `subsumes(general, specific)` holds when every instance of `specific` is
/// necessarily an instance of `general`.
class SubsumptionClosure {
 public:
  explicit SubsumptionClosure(const Ontology& o);

  bool subsumes(std::string_view general, std::string_view specific) const;

  /// All concepts subsuming `c`, including `c` itself, sorted by name.
  std::vector<Identifier> subsumers(std::string_view c) const;
  /// All concepts `c` subsumes, including itself, sorted by name.
  std::vector<Identifier> subsumees(std::string_view c) const;

  const std::vector<Identifier>& concepts() const { return names_; }

  friend bool operator==(const SubsumptionClosure&, const SubsumptionClosure&) = default;

 private:
  std::ptrdiff_t index_of(std::string_view c) const;
  bool bit(std::size_t row, std::size_t col) const { return (rows_[row][col / 64] >> (col % 64)) & 1U; }

  std::vector<Identifier> names_;  // sorted
  // rows_[s] has bit g set when g subsumes s.
  std::vector<std::vector<std::uint64_t>> rows_;
};

// ---------------------------------------------------------------------------

struct Membership {
  Identifier instance;
  Identifier concept_name;
  friend auto operator<=>(const Membership&, const Membership&) = default;
};

using Entry = std::variant<Membership, Fact>;

std::string to_string(const Entry& e);

struct Derivation {
  std::string rule;  // axiom code or M-up / R-up
  std::vector<Entry> premises;
};

/// Ground memberships and relation facts closed under the definitional rules.
/// Entries without a derivation were asserted.
struct FactBase {
  std::set<Membership> memberships;
  std::set<Fact> facts;
  std::map<Entry, Derivation> derivations;

  bool member(std::string_view instance, std::string_view concept_name) const {
    return memberships.contains(Membership{std::string(instance), std::string(concept_name)});
  }
  bool holds(const Fact& f) const { return facts.contains(f); }
  bool is_derived(const Entry& e) const { return derivations.contains(e); }

  std::vector<Identifier> concepts_of(std::string_view instance) const;
  std::vector<Fact> facts_of(std::string_view relation) const;

  /// Entries are equal; derivation traces are not compared.
  bool same_entries(const FactBase& o) const { return memberships == o.memberships && facts == o.facts; }
};

/// One saturation rule. `rule` is the code written into derivation traces.
struct RuleInfo {
  std::string_view rule;
  std::string_view description;
  std::string_view axioms;   // comma separated axiom codes the rule implements
  std::string_view premise;  // for kernel edge rules, the subsumed concept
};
const std::vector<RuleInfo>& rule_registry();

/// Least fixpoint of the rule set over the ontology's instances and facts.
///   M-up   membership propagates to every direct subsumer
///   R-up   a fact implies its particularized parent fact (time kept when
///          both are temporal, dropped when only the parent is atemporal;
///          an atemporal fact never invents a time for a temporal parent)
///   D1     AC with an agent and a distinct agentive participant => Interaction
///   D2     IdaConcept that is the subject of a Proposition => Subject
///   D3     isAffectedBy(x, _) => Patient(x)
///   D4     isDataOf(x, _) => Data(x); D4r mirrors it for isResultOf/Result
///   D5     isDataOf(x, y), y in C, R = data of C => R(x); D5r for results
///   D6     membership in both conjuncts => membership in the conjunction
FactBase saturate(const Ontology& o, const SubsumptionClosure& closure);

/// Indented derivation trees for every entry mentioning `instance` (all
/// derived entries when `instance` is empty).
void print_derivations(std::ostream& os, const FactBase& fb, std::string_view instance);

}  // namespace okc
