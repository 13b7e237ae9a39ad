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

#include "okc/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "okc/kernel.hpp"

namespace okc {

const std::vector<CheckInfo>& check_registry() {
  using S = Severity;
  static const std::vector<CheckInfo> kChecks = {
      {"W1", "W1", S::Error, "taxonomy and particularization chains are acyclic", ""},
      {"W2", "W2", S::Error, "declared disjointness is respected by concepts and instances", ""},
      {"S1", "S1", S::Error, "facts conform to relation signatures", "A9,A12,Ad33"},
      {"S2", "S2", S::Error, "isAffectedBy facts have a witnessing PC fact", "A10"},
      {"A3", "A3", S::Error, "no instance is both a Reasoning and a Communication", "A3"},
      {"A13", "A13", S::Error, "data participates from the start of the perdurant", "A13"},
      {"R13", "R13", S::Error, "results participate until the end of the perdurant", ""},
      {"Ad35", "Ad35", S::Warning, "every endurant participates in some perdurant", "Ad35"},
      {"L1", "A7", S::Error, "Task labels classify concepts subsumed by Reasoning", "A4,A7"},
      {"L2", "A8", S::Error, "TransferFunction labels classify concepts subsumed by Communication", "A8"},
      {"L2b", "L2b", S::Error, "Inference labels classify concepts subsumed by Reasoning", ""},
      {"L3", "L3", S::Error, "knowledge-role labels classify anti-rigid, dependent Data/Result roles", "A5"},
      {"L4", "L4", S::Error, "identity criteria of formal and material roles; Input/Output targets", ""},
      {"L5", "L5", S::Error, "at most one label class per concept and time point", "A6"},
      {"L6", "L6", S::Error, "no anti-rigid concept subsumes a rigid concept", ""},
  };
  return kChecks;
}

std::vector<MetaLabel> effective_labels(const Ontology& o, TimePoint snapshot) {
  std::vector<MetaLabel> out;
  const auto& labels = o.labels();  // ordered by (concept, time, primitive)
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    if (it->time > snapshot) continue;
    bool retired = false;
    for (auto later = std::next(it); later != labels.end() && later->concept_name == it->concept_name; ++later) {
      if (later->time > snapshot) break;
      if (later->time > it->time && label_class(later->primitive) != label_class(it->primitive)) {
        retired = true;
        break;
      }
    }
    if (!retired) out.push_back(*it);
  }
  return out;
}

namespace {

Diagnostic make(std::string_view code, Severity sev, std::string message, std::optional<SourceSpan> span,
                std::vector<std::string> subjects) {
  Diagnostic d;
  d.code = std::string(code);
  d.severity = sev;
  d.message = std::move(message);
  d.span = std::move(span);
  d.subjects = std::move(subjects);
  return d;
}

std::optional<SourceSpan> concept_span(const Ontology& o, std::string_view c) {
  const auto* decl = o.find_concept(c);
  return decl ? decl->span : std::nullopt;
}

std::optional<SourceSpan> instance_span(const Ontology& o, std::string_view i) {
  const auto* decl = o.find_instance(i);
  return decl ? decl->span : std::nullopt;
}

/// Span of the asserted fact a (possibly derived) fact ultimately comes from.
std::optional<SourceSpan> origin_span(const Ontology& o, const FactBase& fb, Entry e) {
  for (int guard = 0; guard < 1024; ++guard) {
    auto it = fb.derivations.find(e);
    if (it == fb.derivations.end() || it->second.premises.empty()) break;
    e = it->second.premises.front();
  }
  if (const auto* f = std::get_if<Fact>(&e)) return o.span_of_fact(*f);
  return instance_span(o, std::get<Membership>(e).instance);
}

std::string cycle_text(const std::vector<Identifier>& cycle) {
  std::string s;
  for (const auto& n : cycle) s += n + " -> ";
  return s + cycle.front();
}

Diagnostics check_acyclic(const Ontology& o) {
  Diagnostics out;
  for (const auto& cycle : find_taxonomy_cycles(o)) {
    out.push_back(make("W1", Severity::Error, "subsumption cycle: " + cycle_text(cycle), concept_span(o, cycle.front()),
                       cycle));
  }
  for (const auto& cycle : find_particularization_cycles(o)) {
    const auto* r = o.find_relation(cycle.front());
    out.push_back(make("W1", Severity::Error, "particularization cycle: " + cycle_text(cycle),
                       r ? r->span : std::nullopt, cycle));
  }
  return out;
}

bool is_reasoning_communication(const std::pair<Identifier, Identifier>& p) {
  return p.first == kn::Communication && p.second == kn::Reasoning;
}

Diagnostics check_disjointness(const Ontology& o, const SubsumptionClosure& cl, const FactBase& fb) {
  Diagnostics out;
  for (const auto& pair : o.disjoint_pairs()) {
    const auto& [a, b] = pair;
    for (const auto& c : cl.subsumees(a)) {
      if (cl.subsumes(b, c)) {
        out.push_back(make("W2", Severity::Error,
                           "concept '" + c + "' is subsumed by disjoint concepts '" + a + "' and '" + b + "'",
                           concept_span(o, c), {c, a, b}));
      }
    }
    if (is_reasoning_communication(pair)) continue;  // reported as A3
    for (const auto& [name, inst] : o.instances()) {
      if (fb.member(name, a) && fb.member(name, b)) {
        out.push_back(make("W2", Severity::Error,
                           "instance '" + name + "' is a member of disjoint concepts '" + a + "' and '" + b + "'",
                           inst.span, {name, a, b}));
      }
    }
  }
  return out;
}

Diagnostics check_reasoning_vs_communication(const Ontology& o, const FactBase& fb) {
  Diagnostics out;
  for (const auto& [name, inst] : o.instances()) {
    if (fb.member(name, kn::Reasoning) && fb.member(name, kn::Communication)) {
      out.push_back(make("A3", Severity::Error,
                         "instance '" + name + "' is both a Reasoning and a Communication (A3)", inst.span,
                         {name}));
    }
  }
  return out;
}

std::string_view signature_axiom(std::string_view relation) {
  if (relation == kn::PC) return "Ad33";
  if (relation == kn::isDataOf) return "A12";
  if (relation == kn::hasForSubject) return "A9";
  return "";
}

// Concepts an instance belongs to independently of the facts it appears in:
// its asserted concepts closed upward and under conjunction definitions.
// Saturation also types instances from facts (D3-D5), which would make
// every signature check hold trivially.
std::map<Identifier, std::set<Identifier>> declared_typing(const Ontology& o, const SubsumptionClosure& cl) {
  std::vector<std::pair<Identifier, const ConjunctionDef*>> conjunctions;
  for (const auto& [name, c] : o.concepts()) {
    if (const auto* conj = std::get_if<ConjunctionDef>(&c.definition)) conjunctions.emplace_back(name, conj);
  }
  std::map<Identifier, std::set<Identifier>> out;
  for (const auto& [name, inst] : o.instances()) {
    auto& types = out[name];
    for (const auto& c : inst.asserted_concepts) {
      for (auto& s : cl.subsumers(c)) types.insert(std::move(s));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [conj_name, conj] : conjunctions) {
        if (types.contains(conj_name) || !types.contains(conj->type) || !types.contains(conj->formal_role)) continue;
        for (auto& s : cl.subsumers(conj_name)) types.insert(std::move(s));
        changed = true;
      }
    }
  }
  return out;
}

Diagnostics check_signatures(const Ontology& o, const SubsumptionClosure& cl) {
  Diagnostics out;
  const auto typing = declared_typing(o, cl);
  auto is_a = [&](const Identifier& i, std::string_view c) {
    auto it = typing.find(i);
    return it != typing.end() && it->second.contains(std::string(c));
  };
  for (const auto& [name, r] : o.relations()) {
    if (!r.particularizes) continue;
    const auto* parent = o.find_relation(*r.particularizes);
    if (!parent) continue;
    std::vector<std::string> problems;
    if (!cl.subsumes(parent->domain_concept, r.domain_concept)) {
      problems.push_back("domain '" + r.domain_concept + "' is not subsumed by '" + parent->domain_concept + "'");
    }
    if (r.range_concept && parent->range_concept && !cl.subsumes(*parent->range_concept, *r.range_concept)) {
      problems.push_back("range '" + *r.range_concept + "' is not subsumed by '" + *parent->range_concept + "'");
    }
    for (const auto& p : problems) {
      out.push_back(make("S1", Severity::Error,
                         "relation '" + name + "' particularizes '" + parent->name + "' but its " + p, r.span,
                         {name, parent->name}));
    }
  }

  for (const auto& f : o.facts()) {
    const auto* r = o.find_relation(f.relation);
    if (!r) continue;
    std::vector<std::string> problems;
    auto require = [&](const Identifier& arg, const Identifier& concept_name) {
      if (!is_a(arg, concept_name)) problems.push_back("'" + arg + "' is not an instance of " + concept_name);
    };
    require(f.args[0], r->domain_concept);
    if (r->range_concept) require(f.args[1], *r->range_concept);
    if (f.relation == kn::isAgentOf && !is_a(f.args[0], kn::APO) && !is_a(f.args[0], kn::ASO)) {
      problems.push_back("'" + f.args[0] + "' is not agentive (APO or ASO)");
    }
    if (problems.empty()) continue;
    std::string msg = to_string(f) + ": ";
    for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? "; " : "") + problems[i];
    if (auto ax = signature_axiom(f.relation); !ax.empty()) msg += " (" + std::string(ax) + ")";
    std::vector<std::string> subjects{f.relation};
    subjects.insert(subjects.end(), f.args.begin(), f.args.end());
    out.push_back(make("S1", Severity::Error, std::move(msg), o.span_of_fact(f), std::move(subjects)));
  }
  return out;
}

Diagnostics check_participation_witnesses(const Ontology& o, const FactBase& fb) {
  Diagnostics out;
  for (const auto& f : fb.facts_of(kn::isAffectedBy)) {
    bool witnessed = false;
    for (const auto& pc : fb.facts_of(kn::PC)) {
      if (pc.args[0] == f.args[0] && pc.args[1] == f.args[1]) {
        witnessed = true;
        break;
      }
    }
    if (witnessed) continue;
    out.push_back(make("S2", Severity::Error,
                       to_string(f) + " has no witnessing PC(" + f.args[0] + ", " + f.args[1] + ", t) fact (A10)",
                       origin_span(o, fb, f), {f.args[0], f.args[1]}));
  }
  return out;
}

Diagnostics check_endurant_participation(const Ontology& o, const FactBase& fb) {
  Diagnostics out;
  std::set<Identifier> participants;
  for (const auto& pc : fb.facts_of(kn::PC)) participants.insert(pc.args[0]);
  for (const auto& [name, inst] : o.instances()) {
    if (fb.member(name, kn::ED) && !participants.contains(name)) {
      out.push_back(make("Ad35", Severity::Warning, "endurant '" + name + "' participates in no perdurant (Ad35)",
                         inst.span, {name}));
    }
  }
  return out;
}

std::string label_text(const MetaLabel& l) {
  return std::string(to_string(l.primitive)) + " on '" + l.concept_name + "' at " + std::to_string(l.time);
}

}  // namespace

Diagnostics check_temporal_participation(const Ontology& o, const FactBase& fb) {
  Diagnostics out;
  for (const bool data : {true, false}) {
    const std::string_view code = data ? "A13" : "R13";
    for (const auto& f : fb.facts_of(data ? kn::isDataOf : kn::isResultOf)) {
      const Identifier& x = f.args[0];
      const Identifier& y = f.args[1];
      std::set<TimePoint> presence;
      for (const auto& pre : fb.facts_of(kn::PRE)) {
        if (pre.args[0] == y && pre.time) presence.insert(*pre.time);
      }
      if (presence.empty()) {
        out.push_back(make(code, Severity::Warning,
                           to_string(f) + " holds vacuously: perdurant '" + y + "' has no PRE facts",
                           origin_span(o, fb, f), {x, y}));
        continue;
      }
      // Quantifying t over the presence times of y, the witness exists iff
      // x participates at the first (data) or last (result) of them.
      const TimePoint bound = data ? *presence.begin() : *presence.rbegin();
      if (fb.holds(Fact{std::string(kn::PC), {x, y}, bound})) continue;
      out.push_back(make(code, Severity::Error,
                         to_string(f) + ": '" + x + "' does not participate in '" + y + "' at " +
                             (data ? "its first" : "its last") + " presence time " + std::to_string(bound) +
                             (data ? " (A13)" : ""),
                         origin_span(o, fb, f), {x, y}));
    }
  }
  return out;
}

Diagnostics check_labels(const Ontology& o, const SubsumptionClosure& cl, const FactBase& /*fb*/) {
  Diagnostics out;
  auto emit = [&](std::string_view code, const MetaLabel& l, std::string why) {
    out.push_back(make(code, Severity::Error, label_text(l) + ": " + why, o.span_of_label(l), {l.concept_name}));
  };

  std::map<TimePoint, std::vector<MetaLabel>> effective_at;
  auto effective = [&](TimePoint t) -> const std::vector<MetaLabel>& {
    auto it = effective_at.find(t);
    if (it == effective_at.end()) it = effective_at.emplace(t, effective_labels(o, t)).first;
    return it->second;
  };

  for (const auto& l : o.labels()) {
    const Identifier& c = l.concept_name;
    const MetaAnnotation ann = o.annotation(c);
    switch (l.primitive) {
      case Primitive::Task:
        if (!cl.subsumes(kn::Reasoning, c)) emit("A7", l, "'" + c + "' is not subsumed by Reasoning (A7)");
        break;
      case Primitive::TransferFunction:
        if (!cl.subsumes(kn::Communication, c)) emit("A8", l, "'" + c + "' is not subsumed by Communication (A8)");
        break;
      case Primitive::Inference:
        if (!cl.subsumes(kn::Reasoning, c)) emit("L2b", l, "'" + c + "' is not subsumed by Reasoning");
        break;
      case Primitive::DomainConcept:
        break;
      default: {
        std::vector<std::string> problems;
        if (!cl.subsumes(kn::Data, c) && !cl.subsumes(kn::Result, c)) {
          problems.push_back("'" + c + "' is not a Data or Result role (not a participation role of a Content)");
        }
        if (ann.rigidity != Rigidity::AntiRigid) problems.push_back("'" + c + "' is not annotated anti-rigid");
        if (ann.dependence != Dependence::Dependent) problems.push_back("'" + c + "' is not annotated dependent");
        if (!problems.empty()) {
          std::string why;
          for (std::size_t i = 0; i < problems.size(); ++i) why += (i ? "; " : "") + problems[i];
          emit("L3", l, why);
          break;  // L4 refines L3; skip it for labels that are not roles at all
        }
        if (l.primitive == Primitive::FormalKnowledgeRole && ann.identity != IdentityCriterion::None) {
          emit("L4", l, "a formal knowledge role must be annotated identity none");
        } else if (l.primitive == Primitive::MaterialKnowledgeRole) {
          std::vector<std::string> problems4;
          if (ann.identity != IdentityCriterion::Carries) {
            problems4.push_back("a material knowledge role must be annotated identity carries");
          }
          const auto& eff = effective(l.time);
          const bool has_formal = std::any_of(eff.begin(), eff.end(), [&](const MetaLabel& e) {
            return e.primitive == Primitive::FormalKnowledgeRole && e.concept_name != c &&
                   cl.subsumes(e.concept_name, c);
          });
          if (!has_formal) {
            problems4.push_back("no concept labeled FormalKnowledgeRole at " + std::to_string(l.time) +
                                " subsumes '" + c + "'");
          }
          bool has_type = false;
          for (const auto& s : cl.subsumers(c)) {
            const auto a = o.annotation(s);
            if (s != c && a.rigidity == Rigidity::Rigid && a.identity == IdentityCriterion::Carries) {
              has_type = true;
              break;
            }
          }
          if (!has_type) problems4.push_back("no rigid, identity-carrying type subsumes '" + c + "'");
          if (!problems4.empty()) {
            std::string why;
            for (std::size_t i = 0; i < problems4.size(); ++i) why += (i ? "; " : "") + problems4[i];
            emit("L4", l, why);
          }
        } else if (l.primitive == Primitive::Input && !cl.subsumes(kn::Data, c)) {
          emit("L4", l, "an Input must classify a Data role");
        } else if (l.primitive == Primitive::Output && !cl.subsumes(kn::Result, c)) {
          emit("L4", l, "an Output must classify a Result role");
        }
        break;
      }
    }
  }

  // L5: labels of one concept at one time point share a class.
  const auto& labels = o.labels();
  for (auto it = labels.begin(); it != labels.end();) {
    auto end = it;
    std::set<LabelClass> classes;
    while (end != labels.end() && end->concept_name == it->concept_name && end->time == it->time) {
      classes.insert(label_class(end->primitive));
      ++end;
    }
    if (classes.size() > 1) {
      std::string names;
      for (auto j = it; j != end; ++j) names += (j == it ? "" : ", ") + std::string(to_string(j->primitive));
      const MetaLabel& last = *std::prev(end);
      out.push_back(make("L5", Severity::Error,
                         "'" + it->concept_name + "' carries incompatible labels at " + std::to_string(it->time) +
                             ": " + names,
                         o.span_of_label(last), {it->concept_name}));
    }
    it = end;
  }

  // L6 over declared rigidity.
  for (const auto& [name, ann] : o.annotations()) {
    if (ann.rigidity != Rigidity::AntiRigid) continue;
    for (const auto& sub : cl.subsumees(name)) {
      if (sub != name && o.annotation(sub).rigidity == Rigidity::Rigid) {
        out.push_back(make("L6", Severity::Error,
                           "anti-rigid concept '" + name + "' subsumes rigid concept '" + sub + "'",
                           concept_span(o, sub), {name, sub}));
      }
    }
  }
  return out;
}

Analysis analyze(const Ontology& o) {
  Analysis a;
  a.diagnostics = check_acyclic(o);
  if (!a.diagnostics.empty()) {
    sort_diagnostics(a.diagnostics);
    return a;
  }
  a.closure.emplace(o);
  a.facts = saturate(o, *a.closure);
  auto append = [&](Diagnostics d) { a.diagnostics.insert(a.diagnostics.end(), d.begin(), d.end()); };
  append(check_disjointness(o, *a.closure, *a.facts));
  append(check_reasoning_vs_communication(o, *a.facts));
  append(check_signatures(o, *a.closure));
  append(check_participation_witnesses(o, *a.facts));
  append(check_temporal_participation(o, *a.facts));
  append(check_endurant_participation(o, *a.facts));
  append(check_labels(o, *a.closure, *a.facts));
  sort_diagnostics(a.diagnostics);
  return a;
}

Diagnostics validate(const Ontology& o) { return analyze(o).diagnostics; }

}  // namespace okc
