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

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "okc/frontend.hpp"

namespace okc {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; }

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_alpha(s.front())) return false;
  for (char c : s) {
    if (!(is_alpha(c) || is_digit(c) || c == '_')) return false;
  }
  return true;
}

std::vector<Token> lex_line(std::string_view line, std::uint32_t line_number) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto make = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    Token t;
    t.kind = kind;
    t.text = std::string(line.substr(begin, end - begin));
    t.line = line_number;
    t.column = static_cast<std::uint32_t>(begin + 1);
    out.push_back(std::move(t));
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (is_alpha(c)) {
      while (i < line.size() && is_word_char(line[i])) ++i;
      make(TokenKind::Word, begin, i);
    } else if (is_digit(c) || (c == '-' && i + 1 < line.size() && is_digit(line[i + 1]))) {
      ++i;
      while (i < line.size() && is_digit(line[i])) ++i;
      bool bad = c == '-';
      while (i < line.size() && is_word_char(line[i])) {
        bad = true;
        ++i;
      }
      if (!bad) {
        const auto text = line.substr(begin, i - begin);
        bad = text.size() > 10 || std::stoull(std::string(text)) > std::numeric_limits<TimePoint>::max();
      }
      make(bad ? TokenKind::BadNumber : TokenKind::Number, begin, i);
    } else if (c == '(' || c == ')' || c == ',' || c == ':' || c == '=') {
      ++i;
      make(TokenKind::Punct, begin, i);
    } else {
      // Group a run of non-ASCII bytes so one UTF-8 character is one token.
      ++i;
      if (static_cast<unsigned char>(c) >= 0x80) {
        while (i < line.size() && (static_cast<unsigned char>(line[i]) & 0xC0) == 0x80) ++i;
      }
      make(TokenKind::Invalid, begin, i);
    }
  }
  Token eol;
  eol.kind = TokenKind::EndOfLine;
  eol.line = line_number;
  eol.column = static_cast<std::uint32_t>(line.size() + 1);
  out.push_back(std::move(eol));
  return out;
}

namespace {

struct SyntaxError {
  Diagnostic diagnostic;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::string_view filename) : toks_(std::move(tokens)), file_(filename) {}

  Declaration statement() {
    const Token& kw = peek();
    if (kw.is("concept")) return concept_decl();
    if (kw.is("role")) return role_decl();
    if (kw.is("relation")) return relation_decl();
    if (kw.is("disjoint")) return disjoint_decl();
    if (kw.is("label")) return label_decl();
    if (kw.is("annotate")) return annotate_decl();
    if (kw.is("instance")) return instance_decl();
    if (kw.is("fact")) return fact_decl();
    fail_at(kw, "P2", "expected a statement keyword");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::EndOfLine) ++pos_;
    return t;
  }

  SourceSpan span_of(const Token& t) const { return SourceSpan{file_, t.line, t.column, t.length()}; }

  SourceSpan statement_span() const {
    const Token& first = toks_.front();
    const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
    return SourceSpan{file_, first.line, first.column, last.column + last.length() - first.column};
  }

  [[noreturn]] void fail_at(const Token& t, std::string code, std::string message) const {
    if (t.kind == TokenKind::Invalid) {
      code = "P1";
      message = "unexpected character '" + t.text + "'";
    } else if (t.kind == TokenKind::EndOfLine) {
      // The statement stopped short; any token of it may be the culprit.
      message += ", found end of line";
      Diagnostic d;
      d.code = std::move(code);
      d.message = std::move(message);
      const Token& first = toks_.front();
      d.span = SourceSpan{file_, first.line, first.column, t.column + 1 - first.column};
      throw SyntaxError{std::move(d)};
    } else {
      message += ", found '" + t.text + "'";
    }
    Diagnostic d;
    d.code = std::move(code);
    d.message = std::move(message);
    d.span = span_of(t);
    throw SyntaxError{std::move(d)};
  }

  void expect_word(std::string_view kw) {
    const Token& t = peek();
    if (!t.is(kw)) fail_at(t, "P2", "expected '" + std::string(kw) + "'");
    next();
  }

  void expect_punct(char c) {
    const Token& t = peek();
    if (!t.is_punct(c)) fail_at(t, "P2", std::string("expected '") + c + "'");
    next();
  }

  Identifier identifier(std::string_view what) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word) fail_at(t, "P2", "expected " + std::string(what));
    if (!is_identifier(t.text)) {
      Diagnostic d;
      d.code = "P1";
      d.message = "'" + t.text + "' is not a valid identifier";
      d.span = span_of(t);
      throw SyntaxError{std::move(d)};
    }
    return next().text;
  }

  TimePoint time_literal() {
    const Token& t = peek();
    if (t.kind == TokenKind::BadNumber) {
      Diagnostic d;
      d.code = "P4";
      d.message = "malformed time literal '" + t.text + "': expected a non-negative integer";
      d.span = span_of(t);
      throw SyntaxError{std::move(d)};
    }
    if (t.kind != TokenKind::Number) fail_at(t, "P2", "expected a time point");
    return static_cast<TimePoint>(std::stoul(next().text));
  }

  void end_of_statement() {
    if (peek().kind != TokenKind::EndOfLine) fail_at(peek(), "P2", "expected end of statement");
  }

  Declaration concept_decl() {
    next();
    ConceptDecl c;
    c.name = identifier("a concept name");
    if (peek().is_punct('=')) {
      next();
      ConjunctionDef conj;
      conj.type = identifier("a type name");
      expect_word("and");
      conj.formal_role = identifier("a role name");
      c.definition = conj;
    } else if (peek().is("specializes")) {
      next();
      c.parents.insert(identifier("a parent concept"));
      while (peek().is_punct(',')) {
        next();
        c.parents.insert(identifier("a parent concept"));
      }
    }
    end_of_statement();
    c.span = statement_span();
    return c;
  }

  Declaration role_decl() {
    next();
    ConceptDecl c;
    c.name = identifier("a role name");
    expect_punct('=');
    RoleDef role;
    const Token& mode = peek();
    if (mode.is("data")) {
      role.mode = RoleMode::Data;
    } else if (mode.is("result")) {
      role.mode = RoleMode::Result;
    } else {
      fail_at(mode, "P2", "expected 'data' or 'result'");
    }
    next();
    expect_word("of");
    role.reasoning_concept = identifier("a reasoning concept");
    c.definition = role;
    end_of_statement();
    c.span = statement_span();
    return c;
  }

  Declaration relation_decl() {
    next();
    RelationDecl r;
    r.name = identifier("a relation name");
    if (peek().is("particularizes")) {
      next();
      r.particularizes = identifier("a parent relation");
    }
    expect_word("signature");
    expect_punct('(');
    r.domain_concept = identifier("a domain concept");
    if (peek().is_punct(',')) {
      next();
      r.range_concept = identifier("a range concept");
    }
    expect_punct(')');
    if (peek().is("temporal")) {
      next();
      r.temporal = true;
    }
    end_of_statement();
    r.span = statement_span();
    return r;
  }

  Declaration disjoint_decl() {
    next();
    DisjointDecl d;
    d.first = identifier("a concept name");
    d.second = identifier("a concept name");
    end_of_statement();
    d.span = statement_span();
    return d;
  }

  Declaration label_decl() {
    next();
    LabelDecl l;
    const Token& prim = peek();
    if (prim.kind != TokenKind::Word) fail_at(prim, "P2", "expected a modeling primitive");
    auto p = parse_primitive(prim.text);
    if (!p) {
      Diagnostic d;
      d.code = "P3";
      d.message = "unknown modeling primitive '" + prim.text + "'";
      d.span = span_of(prim);
      throw SyntaxError{std::move(d)};
    }
    next();
    l.label.primitive = *p;
    l.label.concept_name = identifier("a concept name");
    expect_word("at");
    l.label.time = time_literal();
    end_of_statement();
    l.span = statement_span();
    return l;
  }

  Declaration annotate_decl() {
    next();
    AnnotationDecl a;
    a.concept_name = identifier("a concept name");
    const Token& axis = peek();
    if (axis.is("rigidity")) {
      next();
      const Token& v = peek();
      if (v.is("rigid")) a.value = Rigidity::Rigid;
      else if (v.is("anti-rigid")) a.value = Rigidity::AntiRigid;
      else if (v.is("semi-rigid")) a.value = Rigidity::SemiRigid;
      else fail_at(v, "P2", "expected 'rigid', 'anti-rigid' or 'semi-rigid'");
    } else if (axis.is("identity")) {
      next();
      const Token& v = peek();
      if (v.is("carries")) a.value = IdentityCriterion::Carries;
      else if (v.is("none")) a.value = IdentityCriterion::None;
      else fail_at(v, "P2", "expected 'carries' or 'none'");
    } else if (axis.is("dependence")) {
      next();
      const Token& v = peek();
      if (v.is("dependent")) a.value = Dependence::Dependent;
      else if (v.is("independent")) a.value = Dependence::Independent;
      else fail_at(v, "P2", "expected 'dependent' or 'independent'");
    } else {
      fail_at(axis, "P2", "expected 'rigidity', 'identity' or 'dependence'");
    }
    next();
    end_of_statement();
    a.span = statement_span();
    return a;
  }

  Declaration instance_decl() {
    next();
    InstanceDecl inst;
    inst.name = identifier("an instance name");
    if (peek().is_punct(':')) {
      next();
      inst.asserted_concepts.insert(identifier("a concept name"));
      while (peek().is_punct(',')) {
        next();
        inst.asserted_concepts.insert(identifier("a concept name"));
      }
    }
    end_of_statement();
    inst.span = statement_span();
    return inst;
  }

  Declaration fact_decl() {
    next();
    FactDecl f;
    f.fact.relation = identifier("a relation name");
    expect_punct('(');
    if (!peek().is_punct(')')) {
      while (true) {
        const Token& t = peek();
        if (t.kind == TokenKind::Number || t.kind == TokenKind::BadNumber) {
          f.fact.time = time_literal();
          if (!peek().is_punct(')')) fail_at(peek(), "P2", "the time point must be the last argument; expected ')'");
          break;
        }
        f.fact.args.push_back(identifier("an instance name or time point"));
        if (peek().is_punct(')')) break;
        expect_punct(',');
      }
    }
    expect_punct(')');
    end_of_statement();
    f.span = statement_span();
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string file_;
};

}  // namespace

ParseResult parse(std::string_view text, std::string_view filename) {
  ParseResult result;
  std::uint32_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    const bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;

    auto tokens = lex_line(line, line_number);
    if (tokens.size() > 1) {
      LineParser p(std::move(tokens), filename);
      try {
        result.declarations.push_back(p.statement());
      } catch (SyntaxError& e) {
        result.diagnostics.push_back(std::move(e.diagnostic));
      }
    }
    if (last) break;
    start = end + 1;
  }
  return result;
}

LoadResult load_text(std::string_view text, std::string_view filename) {
  auto parsed = parse(text, filename);
  if (!parsed.ok()) return LoadResult{kernel_ontology(), std::move(parsed.diagnostics)};
  auto loaded = merge_with_kernel(parsed.declarations);
  loaded.diagnostics.insert(loaded.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  sort_diagnostics(loaded.diagnostics);
  return loaded;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadResult load_file(const std::filesystem::path& path) { return load_text(read_file(path), path.string()); }

}  // namespace okc
