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

#include "okc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace okc {

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

namespace {

auto sort_key(const Diagnostic& d) {
  static const std::string kKernel;
  const std::string& file = d.span ? d.span->file : kKernel;
  const std::uint32_t line = d.span ? d.span->line : 0;
  const std::uint32_t col = d.span ? d.span->column : 0;
  return std::tuple<const std::string&, std::uint32_t, const std::string&, std::uint32_t, const std::string&,
                    const std::vector<std::string>&>(file, line, d.code, col, d.message, d.subjects);
}

}  // namespace

void sort_diagnostics(Diagnostics& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return sort_key(a) < sort_key(b); });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
}

std::size_t count_severity(const Diagnostics& diags, Severity s) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  if (d.span) {
    out = d.span->file + ":" + std::to_string(d.span->line) + ":" + std::to_string(d.span->column);
  } else {
    out = "kernel";
  }
  out += ": ";
  out += to_string(d.severity);
  out += "[" + d.code + "] " + d.message;
  return out;
}

void print_diagnostics(std::ostream& os, const Diagnostics& diags) {
  for (const auto& d : diags) os << format_diagnostic(d) << '\n';
}

std::string diagnostics_to_json(const Diagnostics& diags) {
  auto arr = nlohmann::json::array();
  for (const auto& d : diags) {
    nlohmann::json j;
    j["code"] = d.code;
    j["severity"] = std::string(to_string(d.severity));
    j["message"] = d.message;
    j["file"] = d.span ? nlohmann::json(d.span->file) : nlohmann::json("kernel");
    j["line"] = d.span ? d.span->line : 0;
    j["column"] = d.span ? d.span->column : 0;
    j["subjects"] = d.subjects;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

const std::vector<CodeInfo>& code_registry() {
  using S = Severity;
  static const std::vector<CodeInfo> kCodes = {
      {"P1", S::Error, "parse", "lexical error"},
      {"P2", S::Error, "parse", "syntax error"},
      {"P3", S::Error, "parse", "unknown primitive keyword"},
      {"P4", S::Error, "parse", "malformed time literal"},
      {"M1", S::Error, "load", "duplicate name or declaration"},
      {"M2", S::Error, "load", "redefinition of a kernel entity"},
      {"M3", S::Error, "load", "dangling reference"},
      {"M4", S::Error, "load", "arity or temporality mismatch"},
      {"W1", S::Error, "check", "taxonomy and particularization chains are acyclic"},
      {"W2", S::Error, "check", "no concept or instance falls under both sides of a disjoint pair"},
      {"S1", S::Error, "check", "facts conform to relation signatures; particularization narrows signatures"},
      {"S2", S::Error, "check", "every isAffectedBy fact has a witnessing PC fact"},
      {"A3", S::Error, "check", "no instance is both a Reasoning and a Communication"},
      {"A13", S::Error, "check", "data participates from the start of the perdurant"},
      {"R13", S::Error, "check", "results participate until the end of the perdurant"},
      {"Ad35", S::Warning, "check", "every endurant participates in some perdurant"},
      {"A7", S::Error, "check", "Task labels classify Reasoning concepts"},
      {"A8", S::Error, "check", "TransferFunction labels classify Communication concepts"},
      {"L2b", S::Error, "check", "Inference labels classify Reasoning concepts"},
      {"L3", S::Error, "check", "knowledge-role labels classify anti-rigid, dependent Data/Result roles"},
      {"L4", S::Error, "check", "identity criteria of formal/material roles; Input/Output targets"},
      {"L5", S::Error, "check", "at most one label class per concept and time point"},
      {"L6", S::Error, "check", "no anti-rigid concept subsumes a rigid concept"},
      {"C1", S::Error, "compile", "compilation refused because of error diagnostics"},
      {"C2", S::Warning, "compile", "no label is effective at the snapshot time"},
  };
  return kCodes;
}

const CodeInfo* find_code(std::string_view code) {
  for (const auto& c : code_registry()) {
    if (c.code == code) return &c;
  }
  return nullptr;
}

}  // namespace okc
