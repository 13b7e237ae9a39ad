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
#include <string>
#include <string_view>
#include <vector>

#include "okc/kernel.hpp"
#include "okc/model.hpp"

namespace okc {

// ---------------------------------------------------------------------------
// Lexing. The language is line oriented: one statement per line, `#` starts a
// comment, LF or CRLF line endings.

enum class TokenKind {
  Word,       // letter followed by letters, digits, '_' or '-'
  Number,     // non-negative decimal that fits a time point
  BadNumber,  // negative, overflowing, or digits glued to letters
  Punct,      // ( ) , : =
  Invalid,    // any other character
  EndOfLine,
};

struct Token {
  TokenKind kind = TokenKind::Invalid;
  std::string text;
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  std::uint32_t length() const { return static_cast<std::uint32_t>(text.empty() ? 1 : text.size()); }
  bool is(std::string_view word) const { return kind == TokenKind::Word && text == word; }
  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
};

/// Tokens of one physical line, always terminated by an EndOfLine token.
std::vector<Token> lex_line(std::string_view line, std::uint32_t line_number);

bool is_identifier(std::string_view s);

// ---------------------------------------------------------------------------

struct ParseResult {
  std::vector<Declaration> declarations;
  Diagnostics diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Parses `.oks` text. Errors are reported per statement and parsing resumes
/// at the next line, so one call reports every malformed statement.
ParseResult parse(std::string_view text, std::string_view filename);

struct RenderOptions {
  bool include_kernel = false;
};

/// Canonical, deterministic text for an ontology. By default only
/// user-origin content is written; the kernel is implied on reload.
std::string render(const Ontology& ontology, RenderOptions options = {});

/// The kernel catalog in the input language.
std::string render_kernel();

/// parse + merge_with_kernel; parse diagnostics suppress loading.
LoadResult load_text(std::string_view text, std::string_view filename);

/// Reads and loads a file. I/O failures throw std::runtime_error.
LoadResult load_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace okc
