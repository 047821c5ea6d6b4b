// Copyright 2026 The Framekit Authors
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

#include "framekit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace framekit {

namespace {

const char* const kKeywords[] = {
    "frame",  "overlays",   "attribute", "exclusive", "multi", "value",
    "constraint", "link",   "note",      "expands",   "refers",
};

bool is_keyword(std::string_view s) {
  for (const char* kw : kKeywords)
    if (s == kw) return true;
  return false;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

enum class Tok {
  Ident,     // bare name or keyword
  String,    // decoded quoted text
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Dot,
  Arrow,     // ->
  Implies,   // =>
  End,
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "a name";
    case Tok::String: return "a string";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Implies: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string file,
        std::vector<Diagnostic>& diags)
      : text_(text), file_(std::move(file)), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token tok = next();
      const bool end = tok.kind == Tok::End;
      out.push_back(std::move(tok));
      if (end) return out;
    }
  }

 private:
  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek(std::size_t n) const {
    return pos_ + n < text_.size() ? text_[pos_ + n] : '\0';
  }
  bool done() const { return pos_ >= text_.size(); }

  void advance() {
    if (done()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceSpan here(int length) const { return {file_, line_, column_, length}; }

  void skip_trivia() {
    for (;;) {
      const char c = cur();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!done() && cur() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token simple(Tok kind, int length) {
    Token tok{kind, "", here(length)};
    for (int i = 0; i < length; ++i) advance();
    return tok;
  }

  Token next() {
    for (;;) {
      if (done()) return {Tok::End, "", here(0)};
      const char c = cur();
      switch (c) {
        case '{': return simple(Tok::LBrace, 1);
        case '}': return simple(Tok::RBrace, 1);
        case '[': return simple(Tok::LBracket, 1);
        case ']': return simple(Tok::RBracket, 1);
        case ':': return simple(Tok::Colon, 1);
        case ',': return simple(Tok::Comma, 1);
        case '.': return simple(Tok::Dot, 1);
        case '"': return lex_string();
        default: break;
      }
      if (c == '-' && peek(1) == '>') return simple(Tok::Arrow, 2);
      if (c == '=' && peek(1) == '>') return simple(Tok::Implies, 2);
      if (is_ident_start(c)) return lex_ident();
      diags_.push_back({Severity::Error, here(1), "unexpected-character",
                        std::string("unexpected character '") + c + "'"});
      advance();
      skip_trivia();
    }
  }

  Token lex_ident() {
    Token tok{Tok::Ident, "", here(0)};
    std::size_t start = pos_;
    advance();
    // '-' continues a name unless it opens '->', so `a->b` stays a link.
    while (is_ident_char(cur()) && !(cur() == '-' && peek(1) == '>'))
      advance();
    tok.text = std::string(text_.substr(start, pos_ - start));
    tok.span.length = static_cast<int>(pos_ - start);
    return tok;
  }

  Token lex_string() {
    Token tok{Tok::String, "", here(0)};
    std::size_t start = pos_;
    advance();  // opening quote
    for (;;) {
      const char c = cur();
      if (done() || c == '\n') {
        tok.span.length = static_cast<int>(pos_ - start);
        diags_.push_back({Severity::Error, tok.span, "unterminated-string",
                          "string literal is missing its closing '\"'"});
        return tok;
      }
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const char e = peek(1);
        switch (e) {
          case '"': tok.text += '"'; break;
          case '\\': tok.text += '\\'; break;
          case 'n': tok.text += '\n'; break;
          case 't': tok.text += '\t'; break;
          default:
            diags_.push_back({Severity::Error, here(2), "bad-escape",
                              std::string("unknown escape '\\") + e + "'"});
            tok.text += e;
            break;
        }
        advance();
        advance();
        continue;
      }
      tok.text += c;
      advance();
    }
    tok.span.length = static_cast<int>(pos_ - start);
    return tok;
  }

  std::string_view text_;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Unwinds a broken frame; the parser then resynchronizes at the next
// top-level `frame`.
struct ParseAbort {};

struct Name {
  std::string text;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(diags) {}

  Corpus run() {
    Corpus corpus;
    while (!at(Tok::End)) {
      if (at_keyword("frame")) {
        try {
          parse_frame(corpus);
        } catch (const ParseAbort&) {
          recover();
        }
      } else {
        error(cur().span, "expected-frame",
              std::string("expected 'frame', got ") + describe(cur().kind));
        recover();
      }
    }
    return corpus;
  }

 private:
  const Token& cur() const { return tokens_[index_]; }
  bool at(Tok kind) const { return cur().kind == kind; }
  bool at_keyword(std::string_view kw) const {
    return at(Tok::Ident) && cur().text == kw;
  }
  void advance() {
    if (!at(Tok::End)) ++index_;
  }

  void error(const SourceSpan& span, std::string code, std::string message) {
    diags_.push_back(
        {Severity::Error, span, std::move(code), std::move(message)});
  }

  [[noreturn]] void fail(std::string code, std::string message) {
    error(cur().span, std::move(code), std::move(message));
    throw ParseAbort{};
  }

  void expect(Tok kind) {
    if (!at(kind))
      fail("expected-token", std::string("expected ") + describe(kind) +
                                 ", got " + describe(cur().kind));
    advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw))
      fail("expected-token", "expected '" + std::string(kw) + "', got " +
                                 describe(cur().kind));
    advance();
  }

  Name expect_name(const char* what) {
    if (at(Tok::String)) {
      Name n{cur().text, cur().span};
      advance();
      return n;
    }
    if (at(Tok::Ident)) {
      if (is_keyword(cur().text))
        fail("reserved-word", "'" + cur().text + "' is a keyword; quote it" +
                                  " to use it as " + what);
      Name n{cur().text, cur().span};
      advance();
      return n;
    }
    fail("expected-name", std::string("expected ") + what + ", got " +
                              describe(cur().kind));
  }

  std::string expect_string(const char* what) {
    if (!at(Tok::String))
      fail("expected-string", std::string("expected a quoted ") + what +
                                  ", got " + describe(cur().kind));
    std::string s = cur().text;
    advance();
    return s;
  }

  // Skips to the next top-level `frame`. A `frame` keyword is checked
  // before being consumed, so an unexpected frame header resynchronizes
  // exactly there; progress is still guaranteed because the caller then
  // consumes that keyword.
  void recover() {
    int depth = 0;
    while (!at(Tok::End)) {
      if (depth <= 0 && at_keyword("frame")) return;
      if (at(Tok::LBrace) || at(Tok::LBracket))
        ++depth;
      else if (at(Tok::RBrace) || at(Tok::RBracket))
        --depth;
      advance();
    }
  }

  void parse_frame(Corpus& corpus) {
    expect_keyword("frame");
    const Name name = expect_name("a frame name");
    Frame frame;
    frame.name = name.text;
    frame.span = name.span;
    if (corpus.find(frame.name) != nullptr)
      error(name.span, "duplicate-frame",
            "frame '" + frame.name + "' is already defined");

    expect(Tok::LBrace);
    expect_keyword("overlays");
    expect(Tok::Colon);
    for (;;) {
      const Name overlay = expect_name("an overlay name");
      if (frame.has_overlay(overlay.text))
        error(overlay.span, "duplicate-overlay",
              "overlay '" + overlay.text + "' is already declared");
      frame.overlays.push_back(overlay.text);
      if (!at(Tok::Comma)) break;
      advance();
    }
    if (frame.overlays.size() < 2)
      error(name.span, "too-few-overlays",
            "frame '" + frame.name + "' needs at least two overlays");

    // Constraint/link targets may be declared later in the frame; resolve
    // them once the frame is complete.
    std::vector<std::pair<ValueRef, SourceSpan>> value_refs;
    std::vector<std::pair<std::string, SourceSpan>> attr_refs;

    while (!at(Tok::RBrace)) {
      if (at_keyword("attribute")) {
        parse_attribute(frame);
      } else if (at_keyword("constraint")) {
        parse_constraint(frame, value_refs);
      } else if (at_keyword("link")) {
        parse_link(frame, attr_refs);
      } else if (at_keyword("note")) {
        const SourceSpan span = cur().span;
        advance();
        std::string text = expect_string("note");
        if (frame.annotation)
          error(span, "duplicate-note",
                "frame '" + frame.name + "' already has a note");
        else
          frame.annotation = std::move(text);
      } else if (at(Tok::End)) {
        fail("unterminated-frame",
             "frame '" + frame.name + "' is missing its closing '}'");
      } else {
        fail("expected-item",
             std::string("expected 'attribute', 'constraint', 'link', "
                         "'note', or '}', got ") +
                 describe(cur().kind));
      }
    }
    advance();  // '}'

    for (const auto& [ref, span] : value_refs) {
      const Attribute* attr = frame.find_attribute(ref.attribute);
      if (attr == nullptr)
        error(span, "unknown-attribute",
              "no attribute '" + ref.attribute + "' in frame '" + frame.name +
                  "'");
      else if (attr->find_value(ref.value) == nullptr)
        error(span, "unknown-value", "attribute '" + ref.attribute +
                                         "' has no value '" + ref.value + "'");
    }
    for (const auto& [attr, span] : attr_refs)
      if (frame.find_attribute(attr) == nullptr)
        error(span, "unknown-attribute", "no attribute '" + attr +
                                             "' in frame '" + frame.name +
                                             "'");

    corpus.frames.push_back(std::move(frame));
  }

  void parse_attribute(Frame& frame) {
    expect_keyword("attribute");
    const Name name = expect_name("an attribute name");
    Attribute attr;
    attr.name = name.text;
    attr.span = name.span;
    if (frame.find_attribute(attr.name) != nullptr)
      error(name.span, "duplicate-attribute",
            "attribute '" + attr.name + "' is already defined in frame '" +
                frame.name + "'");
    if (at_keyword("exclusive")) {
      attr.kind = AttributeKind::Exclusive;
      advance();
    } else if (at_keyword("multi")) {
      advance();
    }
    expect(Tok::LBrace);
    if (at(Tok::RBrace))
      error(cur().span, "no-values",
            "attribute '" + attr.name + "' declares no values");
    while (!at(Tok::RBrace)) {
      if (at_keyword("value")) {
        parse_value(frame, attr);
      } else if (at(Tok::End)) {
        fail("unterminated-frame",
             "attribute '" + attr.name + "' is missing its closing '}'");
      } else {
        fail("expected-value", std::string("expected 'value' or '}', got ") +
                                   describe(cur().kind));
      }
    }
    advance();  // '}'
    frame.attributes.push_back(std::move(attr));
  }

  void parse_value(const Frame& frame, Attribute& attr) {
    expect_keyword("value");
    const Name name = expect_name("a value name");
    Value value;
    value.name = name.text;
    value.span = name.span;
    if (attr.find_value(value.name) != nullptr)
      error(name.span, "duplicate-value",
            "value '" + value.name + "' is already defined in attribute '" +
                attr.name + "'");
    expect(Tok::LBracket);
    for (;;) {
      const Name overlay = expect_name("an overlay name");
      if (!frame.has_overlay(overlay.text))
        error(overlay.span, "unknown-overlay",
              "frame '" + frame.name + "' declares no overlay '" +
                  overlay.text + "'");
      if (value.in_overlay(overlay.text))
        error(overlay.span, "duplicate-membership",
              "overlay '" + overlay.text + "' is listed twice");
      value.membership.push_back(overlay.text);
      if (!at(Tok::Comma)) break;
      advance();
    }
    expect(Tok::RBracket);
    if (at_keyword("expands")) {
      advance();
      value.expands = expect_name("a frame name").text;
    }
    if (at_keyword("refers")) {
      advance();
      value.refers = expect_name("a frame name").text;
    }
    if (at_keyword("expands"))
      fail("misordered-modifier", "'expands' must precede 'refers'");
    if (at(Tok::String)) {
      value.annotation = cur().text;
      advance();
    }
    attr.values.push_back(std::move(value));
  }

  void parse_constraint(
      Frame& frame, std::vector<std::pair<ValueRef, SourceSpan>>& refs) {
    expect_keyword("constraint");
    const Name scope = expect_name("an overlay name");
    if (!frame.has_overlay(scope.text))
      error(scope.span, "unknown-overlay",
            "frame '" + frame.name + "' declares no overlay '" + scope.text +
                "'");
    expect(Tok::Colon);
    Constraint con;
    con.scope = scope.text;
    con.span = scope.span;
    con.antecedent = parse_valref(refs);
    expect(Tok::Implies);
    con.consequent = parse_valref(refs);
    frame.constraints.push_back(std::move(con));
  }

  ValueRef parse_valref(std::vector<std::pair<ValueRef, SourceSpan>>& refs) {
    const Name attr = expect_name("an attribute name");
    expect(Tok::Dot);
    const Name value = expect_name("a value name");
    ValueRef ref{attr.text, value.text};
    refs.emplace_back(ref, attr.span);
    return ref;
  }

  void parse_link(Frame& frame,
                  std::vector<std::pair<std::string, SourceSpan>>& refs) {
    expect_keyword("link");
    const Name from = expect_name("an attribute name");
    expect(Tok::Arrow);
    const Name to = expect_name("an attribute name");
    AttributeLink link;
    link.from = from.text;
    link.to = to.text;
    link.span = from.span;
    refs.emplace_back(from.text, from.span);
    refs.emplace_back(to.text, to.span);
    if (at(Tok::String)) {
      link.label = cur().text;
      advance();
    }
    frame.links.push_back(std::move(link));
  }

  std::vector<Token> tokens_;
  std::vector<Diagnostic>& diags_;
  std::size_t index_ = 0;
};

}  // namespace

ParseResult parse_corpus(std::string_view text, const std::string& file) {
  ParseResult result;
  Lexer lexer(text, file, result.diagnostics);
  Parser parser(lexer.run(), result.diagnostics);
  Corpus corpus = parser.run();
  if (!has_errors(result.diagnostics)) result.corpus = std::move(corpus);
  return result;
}

ParseResult parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult result;
    result.diagnostics.push_back({Severity::Error,
                                  {path, 0, 0, 0},
                                  "io-error",
                                  "cannot open '" + path + "'"});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), path);
}

namespace {

bool is_bare(std::string_view name) {
  if (name.empty() || is_keyword(name) || !is_ident_start(name[0]))
    return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!is_ident_char(name[i])) return false;
  return true;
}

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  out += '"';
  return out;
}

std::string name_text(std::string_view name) {
  return is_bare(name) ? std::string(name) : quoted(name);
}

std::string joined_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += name_text(names[i]);
  }
  return out;
}

std::string valref_text(const ValueRef& ref) {
  return name_text(ref.attribute) + "." + name_text(ref.value);
}

}  // namespace

std::string print_corpus(const Corpus& corpus) {
  std::string out;
  bool first = true;
  for (const Frame& frame : corpus.frames) {
    if (!first) out += "\n";
    first = false;
    out += "frame " + name_text(frame.name) + " {\n";
    out += "  overlays: " + joined_names(frame.overlays) + "\n";
    if (frame.annotation) out += "  note " + quoted(*frame.annotation) + "\n";
    for (const Attribute& attr : frame.attributes) {
      out += "  attribute " + name_text(attr.name) +
             (attr.kind == AttributeKind::Exclusive ? " exclusive" : " multi") +
             " {\n";
      for (const Value& value : attr.values) {
        out += "    value " + name_text(value.name) + " [" +
               joined_names(value.membership) + "]";
        if (value.expands) out += " expands " + name_text(*value.expands);
        if (value.refers) out += " refers " + name_text(*value.refers);
        if (value.annotation) out += " " + quoted(*value.annotation);
        out += "\n";
      }
      out += "  }\n";
    }
    for (const Constraint& con : frame.constraints)
      out += "  constraint " + name_text(con.scope) + ": " +
             valref_text(con.antecedent) + " => " +
             valref_text(con.consequent) + "\n";
    for (const AttributeLink& link : frame.links) {
      out += "  link " + name_text(link.from) + " -> " + name_text(link.to);
      if (link.label) out += " " + quoted(*link.label);
      out += "\n";
    }
    out += "}\n";
  }
  return out;
}

Corpus merge_corpora(const std::vector<Corpus>& parts) {
  Corpus merged;
  for (const Corpus& part : parts)
    for (const Frame& frame : part.frames) {
      if (merged.find(frame.name) != nullptr)
        throw Error("duplicate-frame", "frame '" + frame.name +
                                           "' is defined in multiple inputs");
      merged.frames.push_back(frame);
    }
  return merged;
}

}  // namespace framekit
