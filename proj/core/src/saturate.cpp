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

#include <algorithm>
#include <deque>
#include <functional>

#include "okc/kernel.hpp"
#include "okc/reasoner.hpp"

namespace okc {

std::string to_string(const Entry& e) {
  if (const auto* m = std::get_if<Membership>(&e)) return m->instance + " : " + m->concept_name;
  return to_string(std::get<Fact>(e));
}

std::vector<Identifier> FactBase::concepts_of(std::string_view instance) const {
  std::vector<Identifier> out;
  for (auto it = memberships.lower_bound(Membership{std::string(instance), ""});
       it != memberships.end() && it->instance == instance; ++it) {
    out.push_back(it->concept_name);
  }
  return out;
}

std::vector<Fact> FactBase::facts_of(std::string_view relation) const {
  std::vector<Fact> out;
  for (auto it = facts.lower_bound(Fact{std::string(relation), {}, std::nullopt});
       it != facts.end() && it->relation == relation; ++it) {
    out.push_back(*it);
  }
  return out;
}

namespace {

struct RoleInfo {
  Identifier role;
  RoleMode mode;
  Identifier reasoning_concept;
};

struct ConjInfo {
  Identifier conjunction;
  Identifier other;
};

/// Agenda-driven forward chaining: each new entry is joined only against the
/// rules it can trigger, so the base is touched once per derivation.
class Saturator {
 public:
  Saturator(const Ontology& o, const SubsumptionClosure& closure) : o_(o), closure_(closure) {
    for (const auto& [name, c] : o.concepts()) {
      up_[name] = c.direct_subsumers();
      if (const auto* role = std::get_if<RoleDef>(&c.definition)) {
        roles_.push_back({name, role->mode, role->reasoning_concept});
      } else if (const auto* conj = std::get_if<ConjunctionDef>(&c.definition)) {
        conj_by_operand_[conj->type].push_back({name, conj->formal_role});
        conj_by_operand_[conj->formal_role].push_back({name, conj->type});
      }
    }
  }

  FactBase run() {
    for (const auto& [name, inst] : o_.instances()) {
      for (const auto& c : inst.asserted_concepts) add(Membership{name, c}, std::nullopt);
    }
    for (const auto& f : o_.facts()) add(f, std::nullopt);
    while (!agenda_.empty()) {
      Entry e = std::move(agenda_.front());
      agenda_.pop_front();
      if (const auto* m = std::get_if<Membership>(&e)) {
        on_membership(*m);
      } else {
        on_fact(std::get<Fact>(e));
      }
    }
    return std::move(fb_);
  }

 private:
  void add(Entry e, std::optional<Derivation> why) {
    bool inserted = false;
    if (const auto* m = std::get_if<Membership>(&e)) {
      inserted = fb_.memberships.insert(*m).second;
    } else {
      const Fact& f = std::get<Fact>(e);
      inserted = fb_.facts.insert(f).second;
      if (inserted) by_relation_[f.relation].push_back(f);
    }
    if (!inserted) return;
    if (why) fb_.derivations.emplace(e, std::move(*why));
    agenda_.push_back(std::move(e));
  }

  bool member(const Identifier& i, std::string_view c) const { return fb_.member(i, c); }

  const std::vector<Fact>& facts(std::string_view rel) const {
    static const std::vector<Fact> kNone;
    auto it = by_relation_.find(std::string(rel));
    return it == by_relation_.end() ? kNone : it->second;
  }

  void derive_member(const Identifier& i, std::string_view c, std::string rule, std::vector<Entry> premises) {
    add(Membership{i, std::string(c)}, Derivation{std::move(rule), std::move(premises)});
  }

  // D1 re-evaluated for action x whenever one of its premises appears.
  void try_interaction(const Identifier& x) {
    if (member(x, kn::Interaction) || !member(x, kn::AC)) return;
    for (const auto& agent_fact : facts(kn::isAgentOf)) {
      if (agent_fact.args[1] != x) continue;
      const Identifier& y = agent_fact.args[0];
      for (const auto& pc : facts(kn::PC)) {
        if (pc.args[1] != x) continue;
        const Identifier& z = pc.args[0];
        if (z == y) continue;
        std::string_view agentive = member(z, kn::APO) ? kn::APO : member(z, kn::ASO) ? kn::ASO : "";
        if (agentive.empty()) continue;
        derive_member(x, kn::Interaction, "D1",
                      {Membership{x, std::string(kn::AC)}, agent_fact, Membership{z, std::string(agentive)}, pc});
        return;
      }
    }
  }

  void try_subject(const Fact& has_subject) {
    const Identifier& prop = has_subject.args[0];
    const Identifier& subj = has_subject.args[1];
    if (member(prop, kn::Proposition) && member(subj, kn::IdaConcept)) {
      derive_member(subj, kn::Subject, "D2",
                    {Membership{subj, std::string(kn::IdaConcept)}, Membership{prop, std::string(kn::Proposition)},
                     has_subject});
    }
  }

  void try_role(const RoleInfo& r, const Fact& participation) {
    const Identifier& x = participation.args[0];
    const Identifier& y = participation.args[1];
    if (!member(y, r.reasoning_concept)) return;
    derive_member(x, r.role, r.mode == RoleMode::Data ? "D5" : "D5r",
                  {participation, Membership{y, r.reasoning_concept}});
  }

  void on_membership(const Membership& m) {
    const Identifier& i = m.instance;
    const Identifier& c = m.concept_name;

    for (const auto& p : up_[c]) {
      auto cite = kernel_edge_citation(c, p);
      derive_member(i, p, cite ? std::string(*cite) : "M-up", {m});
    }

    if (auto it = conj_by_operand_.find(c); it != conj_by_operand_.end()) {
      for (const auto& conj : it->second) {
        if (member(i, conj.other)) {
          derive_member(i, conj.conjunction, "D6", {m, Membership{i, conj.other}});
        }
      }
    }

    if (c == kn::AC) try_interaction(i);
    if (c == kn::APO || c == kn::ASO) {
      for (const auto& pc : facts(kn::PC)) {
        if (pc.args[0] == i) try_interaction(pc.args[1]);
      }
    }

    if (c == kn::IdaConcept || c == kn::Proposition) {
      for (const auto& hs : facts(kn::hasForSubject)) {
        if (hs.args[0] == i || hs.args[1] == i) try_subject(hs);
      }
    }

    for (const auto& r : roles_) {
      if (!closure_.subsumes(r.reasoning_concept, c)) continue;
      const auto rel = r.mode == RoleMode::Data ? kn::isDataOf : kn::isResultOf;
      for (const auto& f : facts(rel)) {
        if (f.args[1] == i) try_role(r, f);
      }
    }
  }

  void on_fact(const Fact& f) {
    const auto* rel = o_.find_relation(f.relation);
    if (rel && rel->particularizes) {
      const auto* parent = o_.find_relation(*rel->particularizes);
      if (parent && !(parent->temporal && !rel->temporal)) {
        Fact up{parent->name, f.args, parent->temporal ? f.time : std::nullopt};
        auto cite = kernel_particularization_citation(f.relation);
        add(up, Derivation{cite ? std::string(*cite) : "R-up", {f}});
      }
    }

    if (f.relation == kn::isAgentOf) try_interaction(f.args[1]);
    if (f.relation == kn::PC) try_interaction(f.args[1]);
    if (f.relation == kn::hasForSubject) try_subject(f);
    if (f.relation == kn::isAffectedBy) derive_member(f.args[0], kn::Patient, "D3", {f});
    if (f.relation == kn::isDataOf || f.relation == kn::isResultOf) {
      const bool data = f.relation == kn::isDataOf;
      derive_member(f.args[0], data ? kn::Data : kn::Result, data ? "D4" : "D4r", {f});
      for (const auto& r : roles_) {
        if ((r.mode == RoleMode::Data) == data) try_role(r, f);
      }
    }
  }

  const Ontology& o_;
  const SubsumptionClosure& closure_;
  std::map<Identifier, std::vector<Identifier>> up_;
  std::vector<RoleInfo> roles_;
  std::map<Identifier, std::vector<ConjInfo>> conj_by_operand_;
  std::map<Identifier, std::vector<Fact>> by_relation_;
  std::deque<Entry> agenda_;
  FactBase fb_;
};

}  // namespace

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> kRules = {
      {"M-up", "membership propagates to direct subsumers", "", ""},
      {"A1", "Reasoning below AC", "A1", "Reasoning"},
      {"A2", "Communication below Interaction", "A2", "Communication"},
      {"T1", "Patient below ED", "T1", "Patient"},
      {"T2", "Data below Patient", "T2", "Data"},
      {"T3", "Data below Content", "T3", "Data"},
      {"R-up", "a fact implies its particularized parent fact", "", ""},
      {"A11", "isDataOf implies isAffectedBy", "A11", ""},
      {"D1", "AC with an agent and another agentive participant is an Interaction", "D1", ""},
      {"D2", "IdaConcept that a Proposition has for subject is a Subject", "D2", ""},
      {"D3", "whatever is affected by something is a Patient", "D3", ""},
      {"D4", "whatever is data of something is a Data", "D4", ""},
      {"D4r", "whatever is result of something is a Result", "", ""},
      {"D5", "data of an instance of C plays every data role of C", "D5", ""},
      {"D5r", "result of an instance of C plays every result role of C", "", ""},
      {"D6", "membership in both conjuncts gives the conjunction", "D6", ""},
  };
  return kRules;
}

FactBase saturate(const Ontology& o, const SubsumptionClosure& closure) { return Saturator(o, closure).run(); }

void print_derivations(std::ostream& os, const FactBase& fb, std::string_view instance) {
  auto mentions = [&](const Entry& e) {
    if (instance.empty()) return true;
    if (const auto* m = std::get_if<Membership>(&e)) return m->instance == instance;
    const auto& args = std::get<Fact>(e).args;
    return std::find(args.begin(), args.end(), instance) != args.end();
  };

  std::set<Entry> shown;
  std::function<void(const Entry&, int)> tree = [&](const Entry& e, int depth) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(e);
    auto it = fb.derivations.find(e);
    if (it == fb.derivations.end()) {
      os << "  [asserted]\n";
      return;
    }
    os << "  [" << it->second.rule << "]";
    if (depth > 0 && shown.contains(e)) {
      os << " (see above)\n";
      return;
    }
    os << '\n';
    shown.insert(e);
    for (const auto& p : it->second.premises) tree(p, depth + 1);
  };

  for (const auto& [entry, why] : fb.derivations) {
    if (mentions(entry) && !shown.contains(entry)) tree(entry, 0);
  }
}

}  // namespace okc
