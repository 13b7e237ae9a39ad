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

#include <optional>
#include <string_view>
#include <vector>

#include "okc/model.hpp"
#include "okc/reasoner.hpp"

namespace okc {

/// One registered check. `check` is the internal check name, `code` the
/// diagnostic code it emits (they differ only where a check reports under
/// the axiom it enforces, e.g. L1 reports as A7).
struct CheckInfo {
  std::string_view check;
  std::string_view code;
  Severity severity;
  std::string_view description;
  std::string_view axioms;  // comma separated axiom codes the check enforces
};

const std::vector<CheckInfo>& check_registry();

/// Labels in effect at `snapshot`: a label at time u is effective when
/// u <= snapshot and the concept received no label of a different class in
/// (u, snapshot]. Sorted.
std::vector<MetaLabel> effective_labels(const Ontology& o, TimePoint snapshot);

/// Everything computed while validating, so callers need not recompute.
struct Analysis {
  std::optional<SubsumptionClosure> closure;  // absent when W1 fired
  std::optional<FactBase> facts;
  Diagnostics diagnostics;
};

/// Runs every check. Never mutates the ontology; output is sorted and
/// independent of declaration order.
Analysis analyze(const Ontology& o);

Diagnostics validate(const Ontology& o);

/// Per-label constraints (A7, A8, L2b, L3, L4, L5) plus L6 over annotations.
Diagnostics check_labels(const Ontology& o, const SubsumptionClosure& closure, const FactBase& fb);

/// A13 for data and its order-reversed dual R13 for results.
Diagnostics check_temporal_participation(const Ontology& o, const FactBase& fb);

}  // namespace okc
