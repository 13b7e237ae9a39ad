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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace okc {

/// Location of a declaration or token in an `.oks` file. Kernel entities
/// carry no span; diagnostics about them print as `kernel`.
struct SourceSpan {
  std::string file;
  std::uint32_t line = 0;    // 1-based
  std::uint32_t column = 0;  // 1-based
  std::uint32_t length = 0;

  bool covers(std::uint32_t l, std::uint32_t c) const {
    return l == line && c >= column && c < column + std::max<std::uint32_t>(length, 1);
  }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::optional<SourceSpan> span;  // nullopt => kernel
  std::vector<std::string> subjects;

  bool is_error() const { return severity == Severity::Error; }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

/// Sort by (file, line, code) then column and message so output is stable.
void sort_diagnostics(Diagnostics& diags);

bool has_errors(const Diagnostics& diags);
std::size_t count_severity(const Diagnostics& diags, Severity s);

/// `file:line:col: severity[CODE] message`
std::string format_diagnostic(const Diagnostic& d);
void print_diagnostics(std::ostream& os, const Diagnostics& diags);

/// JSON array with fields code, severity, message, file, line, column, subjects.
std::string diagnostics_to_json(const Diagnostics& diags);

/// One entry of the closed code registry.
struct CodeInfo {
  std::string_view code;
  Severity severity;
  std::string_view stage;  // parse | load | check | compile
  std::string_view description;
};

/// Every code any stage may emit. Nothing outside this list is ever produced.
const std::vector<CodeInfo>& code_registry();
const CodeInfo* find_code(std::string_view code);

}  // namespace okc
