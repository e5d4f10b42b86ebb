// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// A deliberately small YAML reader used for shape programs, catalogs and style
// files. Supported: block mappings, block sequences (indented or indentless),
// plain scalars, single/double-quoted scalars, one-line flow sequences of
// scalars, `{}` as the empty mapping, `#` comments and a leading `---`.
// Rejected with a diagnostic: anchors, aliases, tags, block scalars, flow
// mappings, multiple documents, tab indentation.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cabprog/common.hpp"
#include "cabprog/text.hpp"

namespace cabprog::yaml {

struct MapEntry;

struct Node {
  enum class Kind { kNull, kScalar, kSequence, kMapping };

  Kind kind = Kind::kNull;
  std::string scalar;   // kScalar only
  bool quoted = false;  // kScalar only
  std::vector<Node> items;
  std::vector<MapEntry> entries;
  SourceSpan span;

  bool is_null() const { return kind == Kind::kNull; }
  bool is_scalar() const { return kind == Kind::kScalar; }
  bool is_sequence() const { return kind == Kind::kSequence; }
  bool is_mapping() const { return kind == Kind::kMapping; }

  const Node* find(std::string_view key) const;
};

struct MapEntry {
  std::string key;
  SourceSpan key_span;
  Node value;
};

inline const Node* Node::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e.value;
  }
  return nullptr;
}

inline const char* kind_name(Node::Kind k) {
  switch (k) {
    case Node::Kind::kNull: return "null";
    case Node::Kind::kScalar: return "scalar";
    case Node::Kind::kSequence: return "sequence";
    case Node::Kind::kMapping: return "mapping";
  }
  return "?";
}

// True if `s` can be written as a plain scalar and read back as the same
// string by this reader and by mainstream YAML 1.1/1.2 readers.
inline bool is_plain_safe(std::string_view s) {
  if (s.empty() || !text::is_ident_start(s[0])) return false;
  if (s.back() == ' ') return false;
  for (char c : s) {
    if (!(text::is_ident_char(c) || c == '-' || c == '.' || c == ' ')) {
      return false;
    }
  }
  static constexpr std::string_view kReserved[] = {
      "true", "false", "yes", "no", "on", "off", "null", "y", "n"};
  std::string lower;
  for (char c : s) lower += static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c);
  for (auto r : kReserved) {
    if (lower == r) return false;
  }
  return true;
}

inline std::string plain_or_quoted(std::string_view s) {
  return is_plain_safe(s) ? std::string(s) : text::quote(s);
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), index_(text) {}

  Result<Node> run() {
    try {
      split_lines();
      if (lines_.empty()) return Result<Node>(Node{});
      Node root = parse_block(lines_[0].indent, 0);
      if (pos_ < lines_.size()) {
        fail("yaml-syntax", "unexpected content after document root",
             lines_[pos_].offset);
      }
      return Result<Node>(std::move(root));
    } catch (const Error& e) {
      return Result<Node>::failure(
          {make_error(e.code, e.message, index_.span(e.offset))});
    }
  }

 private:
  static constexpr int kMaxDepth = 64;

  struct Line {
    std::size_t indent;
    std::string_view content;  // no leading indentation, no trailing spaces
    std::size_t offset;        // byte offset of content[0]
  };

  struct Error {
    std::string code;
    std::string message;
    std::size_t offset;
  };

  struct KeySplit {
    std::string key;
    std::size_t key_offset;
    std::string_view rest;
    std::size_t rest_offset;
  };

  [[noreturn]] static void fail(std::string code, std::string message,
                                std::size_t offset) {
    throw Error{std::move(code), std::move(message), offset};
  }

  void split_lines() {
    std::size_t start = 0;
    bool seen_content = false;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(start, end - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

      std::size_t indent = 0;
      while (indent < raw.size() && raw[indent] == ' ') ++indent;
      std::size_t ws = indent;
      bool tab = false;
      while (ws < raw.size() && (raw[ws] == ' ' || raw[ws] == '\t')) {
        tab = tab || raw[ws] == '\t';
        ++ws;
      }
      std::string_view content = raw.substr(indent);
      while (!content.empty() &&
             (content.back() == ' ' || content.back() == '\t')) {
        content.remove_suffix(1);
      }
      bool blank = ws >= raw.size() || raw[ws] == '#';
      if (!blank) {
        if (tab) fail("yaml-syntax", "tab in indentation", start + indent);
        if (indent == 0 && (content == "---" || content.starts_with("--- "))) {
          if (seen_content) {
            fail("yaml-unsupported", "multiple documents are not supported",
                 start);
          }
        } else if (indent == 0 &&
                   (content == "..." || content.starts_with('%'))) {
          fail("yaml-unsupported", "directives and document end markers are "
               "not supported", start);
        } else {
          lines_.push_back(Line{indent, content, start + indent});
        }
        seen_content = true;
      }
      if (end == text_.size()) break;
      start = end + 1;
    }
  }

  static bool is_dash(std::string_view content) {
    return content == "-" || content.starts_with("- ");
  }

  static bool is_comment_or_empty(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ') ++i;
    return i == s.size() || s[i] == '#';
  }

  static std::string_view ltrim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && s.front() == ' ') {
      s.remove_prefix(1);
      ++offset;
    }
    return s;
  }

  static bool is_indicator(char c) {
    switch (c) {
      case '[': case ']': case '{': case '}': case '&': case '*': case '!':
      case '|': case '>': case '%': case '@': case '`': case '?': case ',':
        return true;
      default:
        return false;
    }
  }

  // Parses a quoted scalar starting at s[0]; returns the decoded value and
  // sets `consumed` to the number of bytes including both quotes.
  std::string parse_quoted(std::string_view s, std::size_t offset,
                           std::size_t& consumed) {
    const char q = s[0];
    std::string out;
    std::size_t i = 1;
    while (i < s.size()) {
      char c = s[i];
      if (q == '\'' && c == '\'') {
        if (i + 1 < s.size() && s[i + 1] == '\'') {
          out += '\'';
          i += 2;
          continue;
        }
        consumed = i + 1;
        return out;
      }
      if (q == '"' && c == '"') {
        consumed = i + 1;
        return out;
      }
      if (q == '"' && c == '\\') {
        if (i + 1 >= s.size()) break;
        char e = s[i + 1];
        std::size_t hex_len = 0;
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case '/': out += '/'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '0': out += '\0'; break;
          case 'x': hex_len = 2; break;
          case 'u': hex_len = 4; break;
          default:
            fail("yaml-syntax", "invalid escape sequence", offset + i);
        }
        if (hex_len > 0) {
          if (i + 2 + hex_len > s.size()) {
            fail("yaml-syntax", "truncated escape sequence", offset + i);
          }
          auto cp = text::parse_hex(s.substr(i + 2, hex_len));
          if (!cp) fail("yaml-syntax", "invalid hex escape", offset + i);
          text::append_utf8(out, *cp);
          i += 2 + hex_len;
        } else {
          i += 2;
        }
        continue;
      }
      out += c;
      ++i;
    }
    fail("yaml-syntax", "unterminated quoted scalar", offset);
  }

  void expect_trailing_nothing(std::string_view s, std::size_t offset) {
    if (!is_comment_or_empty(s)) {
      fail("yaml-syntax", "unexpected characters after value", offset);
    }
  }

  Node scalar_node(std::string value, bool quoted, std::size_t offset) {
    Node n;
    n.kind = Node::Kind::kScalar;
    n.scalar = std::move(value);
    n.quoted = quoted;
    n.span = index_.span(offset);
    return n;
  }

  Node parse_flow_sequence(std::string_view s, std::size_t offset) {
    Node seq;
    seq.kind = Node::Kind::kSequence;
    seq.span = index_.span(offset);
    std::size_t i = 1;
    bool expect_item = true;
    while (true) {
      while (i < s.size() && s[i] == ' ') ++i;
      if (i >= s.size()) {
        fail("yaml-syntax", "unterminated flow sequence", offset);
      }
      if (s[i] == ']') {
        if (expect_item && !seq.items.empty()) {
          fail("yaml-syntax", "trailing comma in flow sequence", offset + i);
        }
        ++i;
        break;
      }
      if (!expect_item) {
        if (s[i] != ',') {
          fail("yaml-syntax", "expected ',' or ']'", offset + i);
        }
        ++i;
        expect_item = true;
        continue;
      }
      if (s[i] == '"' || s[i] == '\'') {
        std::size_t used = 0;
        std::string v = parse_quoted(s.substr(i), offset + i, used);
        seq.items.push_back(scalar_node(std::move(v), true, offset + i));
        i += used;
      } else {
        if (is_indicator(s[i]) || s[i] == '#') {
          fail("yaml-unsupported", "nested or special flow content",
               offset + i);
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ',' && s[j] != ']') ++j;
        std::string_view item = s.substr(i, j - i);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.find(": ") != std::string_view::npos) {
          fail("yaml-unsupported", "flow mappings are not supported",
               offset + i);
        }
        seq.items.push_back(scalar_node(std::string(item), false, offset + i));
        i = j;
      }
      expect_item = false;
    }
    expect_trailing_nothing(s.substr(i), offset + i);
    return seq;
  }

  // Value text that follows "key:" or "- " on the same line.
  Node parse_inline_value(std::string_view s, std::size_t offset) {
    s = ltrim(s, offset);
    char c = s[0];
    if (c == '"' || c == '\'') {
      std::size_t used = 0;
      std::string v = parse_quoted(s, offset, used);
      expect_trailing_nothing(s.substr(used), offset + used);
      return scalar_node(std::move(v), true, offset);
    }
    if (c == '[') return parse_flow_sequence(s, offset);
    if (c == '{') {
      std::size_t i = 1;
      while (i < s.size() && s[i] == ' ') ++i;
      if (i < s.size() && s[i] == '}') {
        expect_trailing_nothing(s.substr(i + 1), offset + i + 1);
        Node m;
        m.kind = Node::Kind::kMapping;
        m.span = index_.span(offset);
        return m;
      }
      fail("yaml-unsupported", "flow mappings are not supported", offset);
    }
    if (c == '&' || c == '*') {
      fail("yaml-unsupported", "anchors and aliases are not supported",
           offset);
    }
    if (c == '!') fail("yaml-unsupported", "tags are not supported", offset);
    if (c == '|' || c == '>') {
      fail("yaml-unsupported", "block scalars are not supported", offset);
    }
    if (is_indicator(c)) {
      fail("yaml-syntax", "unexpected indicator character", offset);
    }
    std::size_t cut = s.find(" #");
    std::string_view v = s.substr(0, cut);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    if (v.find(": ") != std::string_view::npos || v.back() == ':') {
      fail("yaml-syntax", "mapping values are not allowed here", offset);
    }
    return scalar_node(std::string(v), false, offset);
  }

  std::optional<KeySplit> split_key(std::string_view content,
                                    std::size_t offset) {
    if (content.empty()) return std::nullopt;
    if (content[0] == '"' || content[0] == '\'') {
      std::size_t used = 0;
      std::string key = parse_quoted(content, offset, used);
      std::size_t i = used;
      while (i < content.size() && content[i] == ' ') ++i;
      if (i >= content.size() || content[i] != ':') return std::nullopt;
      if (i + 1 < content.size() && content[i + 1] != ' ') return std::nullopt;
      return KeySplit{std::move(key), offset, content.substr(i + 1),
                      offset + i + 1};
    }
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (content[i] == '#' && i > 0 && content[i - 1] == ' ') break;
      if (content[i] == ':' &&
          (i + 1 == content.size() || content[i + 1] == ' ')) {
        std::string_view key = content.substr(0, i);
        while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
        if (key.empty()) fail("yaml-syntax", "empty mapping key", offset);
        if (is_indicator(key[0]) || key[0] == '-') {
          fail("yaml-unsupported", "complex or special mapping key", offset);
        }
        return KeySplit{std::string(key), offset, content.substr(i + 1),
                        offset + i + 1};
      }
    }
    return std::nullopt;
  }

  Node null_node(std::size_t offset) {
    Node n;
    n.span = index_.span(offset);
    return n;
  }

  Node parse_block(std::size_t indent, int depth) {
    if (depth > kMaxDepth) {
      fail("yaml-syntax", "nesting too deep", lines_[pos_].offset);
    }
    const Line& ln = lines_[pos_];
    if (is_dash(ln.content)) return parse_sequence(indent, depth);
    if (!split_key(ln.content, ln.offset)) {
      fail("yaml-syntax", "expected 'key: value' or '- item'", ln.offset);
    }
    return parse_mapping(indent, depth);
  }

  void reject_deeper(std::size_t indent) {
    if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      fail("yaml-syntax", "unexpected indentation", lines_[pos_].offset);
    }
  }

  Node parse_sequence(std::size_t indent, int depth) {
    Node seq;
    seq.kind = Node::Kind::kSequence;
    seq.span = index_.span(lines_[pos_].offset);
    while (pos_ < lines_.size() && lines_[pos_].indent == indent &&
           is_dash(lines_[pos_].content)) {
      Line& ln = lines_[pos_];
      std::size_t k = 1;
      while (k < ln.content.size() && ln.content[k] == ' ') ++k;
      std::string_view rest = ln.content.substr(k);
      if (is_comment_or_empty(rest)) {
        std::size_t at = ln.offset;
        ++pos_;
        if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
          seq.items.push_back(parse_block(lines_[pos_].indent, depth + 1));
        } else {
          seq.items.push_back(null_node(at));
        }
      } else if (is_dash(rest) || split_key(rest, ln.offset + k)) {
        ln = Line{indent + k, rest, ln.offset + k};
        seq.items.push_back(parse_block(indent + k, depth + 1));
      } else {
        seq.items.push_back(parse_inline_value(rest, ln.offset + k));
        ++pos_;
      }
      reject_deeper(indent);
    }
    return seq;
  }

  Node parse_mapping(std::size_t indent, int depth) {
    Node map;
    map.kind = Node::Kind::kMapping;
    map.span = index_.span(lines_[pos_].offset);
    while (pos_ < lines_.size() && lines_[pos_].indent == indent) {
      const Line ln = lines_[pos_];
      if (is_dash(ln.content)) {
        fail("yaml-syntax", "sequence item where a mapping key was expected",
             ln.offset);
      }
      auto kv = split_key(ln.content, ln.offset);
      if (!kv) fail("yaml-syntax", "expected 'key: value'", ln.offset);
      if (map.find(kv->key) != nullptr) {
        fail("duplicate-key", "duplicate mapping key '" + kv->key + "'",
             kv->key_offset);
      }
      MapEntry entry{kv->key, index_.span(kv->key_offset), Node{}};
      if (!is_comment_or_empty(kv->rest)) {
        entry.value = parse_inline_value(kv->rest, kv->rest_offset);
        ++pos_;
      } else {
        ++pos_;
        if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
          entry.value = parse_block(lines_[pos_].indent, depth + 1);
        } else if (pos_ < lines_.size() && lines_[pos_].indent == indent &&
                   is_dash(lines_[pos_].content)) {
          entry.value = parse_sequence(indent, depth + 1);
        } else {
          entry.value = null_node(kv->key_offset);
        }
      }
      map.entries.push_back(std::move(entry));
      reject_deeper(indent);
    }
    return map;
  }

  std::string_view text_;
  LineIndex index_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Result<Node> parse(std::string_view text) {
  return detail::Parser(text).run();
}

}  // namespace cabprog::yaml
