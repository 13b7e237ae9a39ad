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

namespace okc {

/// Names of kernel entities the reasoner and validator refer to directly.
namespace kn {
inline constexpr std::string_view PT = "PT";
inline constexpr std::string_view ED = "ED";
inline constexpr std::string_view PD = "PD";
inline constexpr std::string_view APO = "APO";
inline constexpr std::string_view ASO = "ASO";
inline constexpr std::string_view AC = "AC";
inline constexpr std::string_view Reasoning = "Reasoning";
inline constexpr std::string_view Interaction = "Interaction";
inline constexpr std::string_view Communication = "Communication";
inline constexpr std::string_view Content = "Content";
inline constexpr std::string_view Proposition = "Proposition";
inline constexpr std::string_view IdaConcept = "IdaConcept";
inline constexpr std::string_view Subject = "Subject";
inline constexpr std::string_view Patient = "Patient";
inline constexpr std::string_view Data = "Data";
inline constexpr std::string_view Result = "Result";

inline constexpr std::string_view PC = "PC";
inline constexpr std::string_view PRE = "PRE";
inline constexpr std::string_view isAgentOf = "isAgentOf";
inline constexpr std::string_view isAffectedBy = "isAffectedBy";
inline constexpr std::string_view isDataOf = "isDataOf";
inline constexpr std::string_view isResultOf = "isResultOf";
inline constexpr std::string_view hasForSubject = "hasForSubject";
}  // namespace kn

/// The fixed upper ontology as an ordered declaration list (kernel origin).
const std::vector<Declaration>& kernel_declarations();

/// A fresh copy of the kernel-only ontology.
Ontology kernel_ontology();

struct LoadResult {
  Ontology ontology;
  Diagnostics diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Grafts user declarations onto a copy of the kernel. Kernel entities may be
/// restated verbatim but never redefined.
LoadResult merge_with_kernel(const std::vector<Declaration>& user_declarations);

/// Axiom code attached to a kernel subsumption edge (e.g. "A1" for
/// Reasoning below AC), used to label derivation steps.
std::optional<std::string_view> kernel_edge_citation(std::string_view child, std::string_view parent);

/// Axiom code attached to a kernel particularization (e.g. "A11").
std::optional<std::string_view> kernel_particularization_citation(std::string_view relation);

}  // namespace okc
