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

// Shape programs: parsing, emission and validation for the two text syntaxes.
//
// Python syntax, two statements per primitive:
//
//   box_0 = Box(position=(300, 200, 1000), size=(600, 400, 2000), rotation=0)
//   model_0 = Model(id="M-BB01", box=box_0, N=2, NKA=282, NKB=282, DBXX=1)
//
// YAML syntax:
//
//   cabinet:
//     - id: M-BB01
//       position:
//         - 300
//       ...
//       params:
//         N: 2
//
// Emission renders numbers with at most one decimal place, so values are
// expected on a 0.1 mm (0.1 degree) grid; validate() warns otherwise.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cabprog/catalog.hpp"
#include "cabprog/common.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/model.hpp"
#include "cabprog/text.hpp"
#include "cabprog/yaml_lite.hpp"

namespace cabprog {

enum class Syntax { kPython, kYaml };

namespace detail {

struct RawParam {
  std::string key;
  Literal literal;
  std::size_t offset = 0;
};

// An instance as read from text, before schema typing.
struct RawInstance {
  std::string model_id;
  std::size_t id_offset = 0;
  std::optional<std::string> name;
  OrientedBox box;
  std::vector<RawParam> params;
  std::size_t offset = 0;
};

inline std::string verbatim(const Literal& lit) { return lit.text; }

// Applies catalog typing and reports schema problems; errors in strict mode,
// warnings otherwise.
inline PrimitiveInstance finish_instance(const RawInstance& raw,
                                         const PrimitiveCatalog& catalog,
                                         bool strict, const LineIndex& index,
                                         DiagnosticList& diags) {
  const Severity sev = strict ? Severity::kError : Severity::kWarning;
  auto report = [&](std::string code, std::string message, std::size_t at) {
    diags.push_back(
        Diagnostic{sev, std::move(code), std::move(message), index.span(at)});
  };

  PrimitiveInstance inst;
  inst.model_id = raw.model_id;
  inst.box = raw.box;
  const PrimitiveSchema* schema = catalog.find(raw.model_id);
  if (schema == nullptr) {
    report("unknown-model", "unknown model id '" + raw.model_id + "'",
           raw.id_offset);
    inst.name = raw.name.value_or("");
    for (const auto& p : raw.params) {
      inst.params.insert(p.key, verbatim(p.literal));
    }
    return inst;
  }

  inst.name = raw.name.value_or(schema->name);
  for (const auto& p : raw.params) {
    const ParamSchema* ps = schema->find(p.key);
    if (ps == nullptr) {
      report("param-unknown",
             "unknown parameter '" + p.key + "' for " + schema->model_id,
             p.offset);
      inst.params.insert(p.key, verbatim(p.literal));
      continue;
    }
    if (auto v = coerce_literal(*ps, p.literal)) {
      inst.params.insert(p.key, std::move(*v));
      continue;
    }
    report("param-type",
           p.key + "=" + (p.literal.kind == Literal::Kind::kString
                              ? text::quote(p.literal.text)
                              : p.literal.text) +
               " is not a valid " + std::string(to_string(ps->kind)) + " value",
           p.offset);
    inst.params.insert(p.key,
                       literal_value(p.literal).value_or(verbatim(p.literal)));
  }
  for (auto& d : validate_params(*schema, inst.params)) {
    if (d.code == "param-unknown" || d.code == "param-type") continue;
    std::size_t at = raw.offset;
    for (const auto& p : raw.params) {
      if (d.message.starts_with(p.key + "=")) at = p.offset;
    }
    report(std::move(d.code), std::move(d.message), at);
  }
  return inst;
}

// Box invariants that every syntax enforces at parse time.
inline void check_box(OrientedBox& box, std::size_t offset,
                      const LineIndex& index, DiagnosticList& diags) {
  if (!is_finite(box.position) || !is_finite(box.size) ||
      !std::isfinite(box.rotation_deg)) {
    diags.push_back(make_error("box-finite", "box values must be finite",
                               index.span(offset)));
    return;
  }
  if (!(box.size.x > 0.0 && box.size.y > 0.0 && box.size.z > 0.0)) {
    diags.push_back(make_error("box-size", "box size components must be > 0",
                               index.span(offset)));
  }
  box.rotation_deg = canonical_degrees(box.rotation_deg);
}

// ---------------------------------------------------------------------------
// Python syntax

class PythonParser {
 public:
  PythonParser(std::string_view text, const PrimitiveCatalog& catalog,
               bool strict)
      : text_(text), index_(text), catalog_(catalog), strict_(strict) {}

  Result<CabinetModel> run() {
    try {
      tokenize();
      parse_program();
    } catch (const SyntaxError& e) {
      diags_.push_back(make_error(e.code, e.message, index_.span(e.offset)));
    }
    for (const auto& [name, box] : boxes_) {
      if (!box.used) {
        diags_.push_back(make_warning(
            "unused-box", "box '" + name + "' is not used by any Model",
            index_.span(box.offset)));
      }
    }
    if (!has_errors(diags_) && model_.instances.empty()) {
      diags_.push_back(make_error("empty-model", "program defines no primitives",
                                  index_.span(text_.size())));
    }
    if (has_errors(diags_)) return Result<CabinetModel>::failure(diags_);
    return Result<CabinetModel>(std::move(model_), std::move(diags_));
  }

 private:
  enum class Tok { kIdent, kNumber, kString, kLParen, kRParen, kComma, kEquals,
                   kNewline, kEnd };

  struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
  };

  struct SyntaxError {
    std::string code;
    std::string message;
    std::size_t offset;
  };

  struct Value {
    enum class Kind { kNumber, kString, kIdent, kTuple } kind;
    std::string text;
    std::vector<Value> items;
    std::size_t offset;
  };

  struct Arg {
    std::string name;
    Value value;
    std::size_t offset;
  };

  struct BoxVar {
    OrientedBox box;
    bool valid;
    bool used;
    std::size_t offset;
  };

  [[noreturn]] static void fail(std::string code, std::string message,
                                std::size_t offset) {
    throw SyntaxError{std::move(code), std::move(message), offset};
  }

  void tokenize() {
    int depth = 0;
    std::size_t i = 0;
    const std::size_t n = text_.size();
    while (i < n) {
      char c = text_[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '#') {
        while (i < n && text_[i] != '\n') ++i;
      } else if (c == '\n') {
        if (depth == 0) tokens_.push_back({Tok::kNewline, "", i});
        ++i;
      } else if (c == '(') {
        ++depth;
        tokens_.push_back({Tok::kLParen, "(", i++});
      } else if (c == ')') {
        if (depth == 0) fail("syntax", "unbalanced ')'", i);
        --depth;
        tokens_.push_back({Tok::kRParen, ")", i++});
      } else if (c == ',') {
        tokens_.push_back({Tok::kComma, ",", i++});
      } else if (c == '=') {
        tokens_.push_back({Tok::kEquals, "=", i++});
      } else if (text::is_ident_start(c)) {
        std::size_t s = i;
        while (i < n && text::is_ident_char(text_[i])) ++i;
        tokens_.push_back({Tok::kIdent, std::string(text_.substr(s, i - s)), s});
      } else if (text::is_digit(c) ||
                 (c == '-' && i + 1 < n && text::is_digit(text_[i + 1]))) {
        std::size_t s = i;
        ++i;
        while (i < n && text::is_digit(text_[i])) ++i;
        if (i < n && text_[i] == '.') {
          ++i;
          if (i >= n || !text::is_digit(text_[i])) {
            fail("syntax", "malformed number literal", s);
          }
          while (i < n && text::is_digit(text_[i])) ++i;
        }
        if (i < n && (text::is_ident_char(text_[i]) || text_[i] == '.')) {
          fail("syntax",
               "malformed number literal (only plain integer or decimal "
               "literals are accepted)",
               s);
        }
        tokens_.push_back({Tok::kNumber, std::string(text_.substr(s, i - s)), s});
      } else if (c == '"' || c == '\'') {
        tokens_.push_back({Tok::kString, read_string(i), i});
        i = string_end_;
      } else {
        fail("syntax", "unexpected character", i);
      }
    }
    if (depth != 0) fail("syntax", "unclosed '('", n);
    tokens_.push_back({Tok::kEnd, "", n});
  }

  std::string read_string(std::size_t start) {
    const char q = text_[start];
    std::string out;
    std::size_t i = start + 1;
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '\n') break;
      if (c == q) {
        string_end_ = i + 1;
        return out;
      }
      if (c == '\\') {
        if (i + 1 >= text_.size()) break;
        char e = text_[i + 1];
        std::size_t hex = 0;
        switch (e) {
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case 'x': hex = 2; break;
          case 'u': hex = 4; break;
          default: fail("syntax", "invalid escape sequence", i);
        }
        if (hex > 0) {
          if (i + 2 + hex > text_.size()) fail("syntax", "truncated escape", i);
          auto cp = text::parse_hex(text_.substr(i + 2, hex));
          if (!cp) fail("syntax", "invalid hex escape", i);
          text::append_utf8(out, *cp);
          i += 2 + hex;
        } else {
          i += 2;
        }
        continue;
      }
      out += c;
      ++i;
    }
    fail("syntax", "unterminated string literal", start);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      fail("syntax", "expected " + std::string(what), peek().offset);
    }
    return take();
  }

  Value parse_value() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber: {
        Value v{Value::Kind::kNumber, t.text, {}, t.offset};
        take();
        return v;
      }
      case Tok::kString: {
        Value v{Value::Kind::kString, t.text, {}, t.offset};
        take();
        return v;
      }
      case Tok::kIdent: {
        Value v{Value::Kind::kIdent, t.text, {}, t.offset};
        take();
        return v;
      }
      case Tok::kLParen: {
        Value v{Value::Kind::kTuple, "", {}, t.offset};
        take();
        while (peek().kind != Tok::kRParen) {
          v.items.push_back(parse_value());
          if (peek().kind == Tok::kComma) {
            take();
          } else if (peek().kind != Tok::kRParen) {
            fail("syntax", "expected ',' or ')' in tuple", peek().offset);
          }
        }
        take();
        return v;
      }
      default:
        fail("syntax", "expected a value", t.offset);
    }
  }

  std::vector<Arg> parse_args() {
    std::vector<Arg> args;
    expect(Tok::kLParen, "'('");
    while (peek().kind != Tok::kRParen) {
      const Token& name = peek();
      if (name.kind != Tok::kIdent || tokens_[pos_ + 1].kind != Tok::kEquals) {
        fail("syntax", "expected keyword argument 'name=value'", name.offset);
      }
      std::string key = name.text;
      std::size_t at = name.offset;
      take();
      take();
      for (const auto& a : args) {
        if (a.name == key) {
          fail("duplicate-key", "duplicate parameter key '" + key + "'", at);
        }
      }
      args.push_back({std::move(key), parse_value(), at});
      if (peek().kind == Tok::kComma) {
        take();
      } else if (peek().kind != Tok::kRParen) {
        fail("syntax", "expected ',' or ')'", peek().offset);
      }
    }
    take();
    return args;
  }

  void parse_program() {
    while (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kNewline) {
        take();
        continue;
      }
      const Token& var = expect(Tok::kIdent, "an assignment 'name = Call(...)'");
      std::string var_name = var.text;
      std::size_t stmt_offset = var.offset;
      expect(Tok::kEquals, "'='");
      const Token& callee = expect(Tok::kIdent, "'Box' or 'Model'");
      std::string callee_name = callee.text;
      std::size_t callee_offset = callee.offset;
      auto args = parse_args();
      if (peek().kind != Tok::kNewline && peek().kind != Tok::kEnd) {
        fail("syntax", "expected end of statement", peek().offset);
      }
      if (callee_name == "Box") {
        box_statement(var_name, stmt_offset, args);
      } else if (callee_name == "Model") {
        model_statement(stmt_offset, args);
      } else {
        fail("syntax", "unknown constructor '" + callee_name +
                           "' (expected Box or Model)",
             callee_offset);
      }
    }
  }

  std::optional<double> number(const Value& v) {
    if (v.kind != Value::Kind::kNumber) {
      diags_.push_back(
          make_error("type", "expected a number", index_.span(v.offset)));
      return std::nullopt;
    }
    auto d = text::parse_double(v.text);
    if (!d || !std::isfinite(*d)) {
      diags_.push_back(make_error("type", "number out of range",
                                  index_.span(v.offset)));
    }
    return d;
  }

  std::optional<Vec3> vec3(const Value& v, std::string_view what) {
    if (v.kind != Value::Kind::kTuple || v.items.size() != 3) {
      diags_.push_back(make_error(
          "arity", std::string(what) + " must be a 3-tuple (x, y, z)",
          index_.span(v.offset)));
      return std::nullopt;
    }
    auto x = number(v.items[0]);
    auto y = number(v.items[1]);
    auto z = number(v.items[2]);
    if (!x || !y || !z) return std::nullopt;
    return Vec3{*x, *y, *z};
  }

  void box_statement(const std::string& var, std::size_t offset,
                     const std::vector<Arg>& args) {
    const std::size_t before = diags_.size();
    OrientedBox box;
    bool has_pos = false;
    bool has_size = false;
    for (const auto& a : args) {
      if (a.name == "position") {
        if (auto p = vec3(a.value, "position")) box.position = *p;
        has_pos = true;
      } else if (a.name == "size") {
        if (auto s = vec3(a.value, "size")) box.size = *s;
        has_size = true;
      } else if (a.name == "rotation") {
        if (auto r = number(a.value)) box.rotation_deg = *r;
      } else {
        diags_.push_back(make_error("syntax",
                                    "unknown Box argument '" + a.name + "'",
                                    index_.span(a.offset)));
      }
    }
    if (!has_pos || !has_size) {
      diags_.push_back(make_error("syntax",
                                  "Box requires position=(...) and size=(...)",
                                  index_.span(offset)));
    }
    bool valid = diags_.size() == before;
    if (valid) {
      check_box(box, offset, index_, diags_);
      valid = !has_errors_since(before);
    }
    boxes_[var] = BoxVar{box, valid, false, offset};
  }

  bool has_errors_since(std::size_t before) const {
    for (std::size_t i = before; i < diags_.size(); ++i) {
      if (diags_[i].severity == Severity::kError) return true;
    }
    return false;
  }

  void model_statement(std::size_t offset, const std::vector<Arg>& args) {
    RawInstance raw;
    raw.offset = offset;
    bool has_id = false;
    const BoxVar* box = nullptr;
    bool box_given = false;
    const std::size_t before = diags_.size();
    for (const auto& a : args) {
      if (a.name == "id") {
        if (a.value.kind != Value::Kind::kString) {
          diags_.push_back(make_error("type", "id must be a string",
                                      index_.span(a.value.offset)));
        }
        raw.model_id = a.value.text;
        raw.id_offset = a.value.offset;
        has_id = true;
      } else if (a.name == "name") {
        if (a.value.kind != Value::Kind::kString) {
          diags_.push_back(make_error("type", "name must be a string",
                                      index_.span(a.value.offset)));
        }
        raw.name = a.value.text;
      } else if (a.name == "box") {
        box_given = true;
        if (a.value.kind != Value::Kind::kIdent) {
          diags_.push_back(make_error("type",
                                      "box must name a Box variable",
                                      index_.span(a.value.offset)));
          continue;
        }
        auto it = boxes_.find(a.value.text);
        if (it == boxes_.end()) {
          diags_.push_back(make_error(
              "undefined-box", "undefined box variable '" + a.value.text + "'",
              index_.span(a.value.offset)));
          continue;
        }
        it->second.used = true;
        box = &it->second;
      } else {
        Literal lit;
        switch (a.value.kind) {
          case Value::Kind::kNumber:
            lit = {text::is_int_literal(a.value.text) ? Literal::Kind::kInt
                                                      : Literal::Kind::kReal,
                   a.value.text};
            break;
          case Value::Kind::kString:
            lit = {Literal::Kind::kString, a.value.text};
            break;
          default:
            diags_.push_back(make_error(
                "param-syntax",
                "parameter '" + a.name + "' must be a number or a string",
                index_.span(a.value.offset)));
            continue;
        }
        raw.params.push_back({a.name, std::move(lit), a.offset});
      }
    }
    if (!has_id) {
      diags_.push_back(make_error("syntax", "Model requires id=\"...\"",
                                  index_.span(offset)));
    }
    if (!box_given) {
      diags_.push_back(make_error("syntax", "Model requires box=<Box variable>",
                                  index_.span(offset)));
    }
    if (diags_.size() != before || box == nullptr || !box->valid) return;
    raw.box = box->box;
    model_.instances.push_back(
        finish_instance(raw, catalog_, strict_, index_, diags_));
  }

  std::string_view text_;
  LineIndex index_;
  const PrimitiveCatalog& catalog_;
  bool strict_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t string_end_ = 0;
  std::map<std::string, BoxVar> boxes_;
  CabinetModel model_;
  DiagnosticList diags_;
};

// ---------------------------------------------------------------------------
// YAML syntax

class YamlProgramReader {
 public:
  YamlProgramReader(std::string_view text, const PrimitiveCatalog& catalog,
                    bool strict)
      : text_(text), index_(text), catalog_(catalog), strict_(strict) {}

  Result<CabinetModel> run() {
    auto doc = yaml::parse(text_);
    if (!doc) return Result<CabinetModel>::failure(doc.diagnostics());
    const yaml::Node& root = doc.value();
    const yaml::Node* list = nullptr;
    if (root.is_mapping()) {
      for (const auto& e : root.entries) {
        if (e.key == "cabinet") {
          list = &e.value;
        } else {
          unknown_field(e);
        }
      }
    }
    if (list == nullptr || !list->is_sequence()) {
      diags_.push_back(make_error(
          "syntax", "expected a top-level 'cabinet:' sequence", root.span));
      return Result<CabinetModel>::failure(diags_);
    }
    for (const auto& item : list->items) entry(item);
    if (!has_errors(diags_) && model_.instances.empty()) {
      diags_.push_back(make_error("empty-model", "program defines no primitives",
                                  list->span));
    }
    if (has_errors(diags_)) return Result<CabinetModel>::failure(diags_);
    return Result<CabinetModel>(std::move(model_), std::move(diags_));
  }

 private:
  void unknown_field(const yaml::MapEntry& e) {
    diags_.push_back(Diagnostic{strict_ ? Severity::kError : Severity::kWarning,
                                "unknown-field",
                                "unknown field '" + e.key + "'", e.key_span});
  }

  std::optional<double> number(const yaml::Node& n) {
    if (n.is_scalar() && !n.quoted &&
        (text::is_int_literal(n.scalar) || text::is_decimal_literal(n.scalar))) {
      auto d = text::parse_double(n.scalar);
      if (d && std::isfinite(*d)) return d;
      diags_.push_back(make_error("type", "number out of range", n.span));
      return std::nullopt;
    }
    diags_.push_back(make_error("type", "expected a number", n.span));
    return std::nullopt;
  }

  std::optional<Vec3> vec3(const yaml::Node& n, std::string_view what) {
    if (!n.is_sequence() || n.items.size() != 3) {
      diags_.push_back(make_error(
          "arity", std::string(what) + " must be a 3-element sequence", n.span));
      return std::nullopt;
    }
    auto x = number(n.items[0]);
    auto y = number(n.items[1]);
    auto z = number(n.items[2]);
    if (!x || !y || !z) return std::nullopt;
    return Vec3{*x, *y, *z};
  }

  void entry(const yaml::Node& item) {
    if (!item.is_mapping()) {
      diags_.push_back(make_error("syntax", "cabinet entries must be mappings",
                                  item.span));
      return;
    }
    const std::size_t before = diags_.size();
    RawInstance raw;
    raw.offset = item.span.offset;
    bool has_id = false;
    bool has_pos = false;
    bool has_size = false;
    for (const auto& e : item.entries) {
      const yaml::Node& v = e.value;
      if (e.key == "id") {
        if (!v.is_scalar()) {
          diags_.push_back(make_error("type", "id must be a scalar", v.span));
        }
        raw.model_id = v.scalar;
        raw.id_offset = v.span.offset;
        has_id = true;
      } else if (e.key == "name") {
        if (!v.is_scalar()) {
          diags_.push_back(make_error("type", "name must be a scalar", v.span));
        }
        raw.name = v.scalar;
      } else if (e.key == "position") {
        has_pos = true;
        if (auto p = vec3(v, "position")) raw.box.position = *p;
      } else if (e.key == "size") {
        has_size = true;
        if (auto s = vec3(v, "size")) raw.box.size = *s;
      } else if (e.key == "rotation") {
        if (auto r = number(v)) raw.box.rotation_deg = *r;
      } else if (e.key == "params") {
        if (v.is_null()) continue;
        if (!v.is_mapping()) {
          diags_.push_back(make_error("type", "params must be a mapping",
                                      v.span));
          continue;
        }
        for (const auto& p : v.entries) {
          if (!text::is_identifier(p.key)) {
            diags_.push_back(make_error(
                "param-syntax", "parameter key '" + p.key + "' is not an identifier",
                p.key_span));
            continue;
          }
          if (!p.value.is_scalar()) {
            diags_.push_back(make_error(
                "param-syntax", "parameter '" + p.key + "' must be a scalar",
                p.value.span));
            continue;
          }
          raw.params.push_back(
              {p.key, detail::scalar_literal(p.value), p.key_span.offset});
        }
      } else {
        unknown_field(e);
      }
    }
    if (!has_id) {
      diags_.push_back(make_error("syntax", "entry without 'id'", item.span));
    }
    if (!has_pos || !has_size) {
      diags_.push_back(make_error(
          "syntax", "entry requires 'position' and 'size'", item.span));
    }
    for (std::size_t i = before; i < diags_.size(); ++i) {
      if (diags_[i].severity == Severity::kError) return;
    }
    check_box(raw.box, raw.offset, index_, diags_);
    for (std::size_t i = before; i < diags_.size(); ++i) {
      if (diags_[i].severity == Severity::kError) return;
    }
    model_.instances.push_back(
        finish_instance(raw, catalog_, strict_, index_, diags_));
  }

  std::string_view text_;
  LineIndex index_;
  const PrimitiveCatalog& catalog_;
  bool strict_;
  CabinetModel model_;
  DiagnosticList diags_;
};

inline std::string emit_value(const ParamValue& v) {
  if (auto* e = std::get_if<EnumToken>(&v)) {
    return text::is_int_literal(e->token) ? e->token : text::quote(e->token);
  }
  return format_param_value(v);
}

inline bool name_is_default(const PrimitiveInstance& inst,
                            const PrimitiveCatalog& catalog) {
  const PrimitiveSchema* s = catalog.find(inst.model_id);
  return s != nullptr ? inst.name == s->name : inst.name.empty();
}

inline void require_instances(const CabinetModel& model) {
  if (model.instances.empty()) {
    throw std::invalid_argument("cannot emit a cabinet with no instances");
  }
}

}  // namespace detail

inline Result<CabinetModel> parse_python(std::string_view text,
                                         const PrimitiveCatalog& catalog,
                                         bool strict = false) {
  return detail::PythonParser(text, catalog, strict).run();
}

inline Result<CabinetModel> parse_yaml(std::string_view text,
                                       const PrimitiveCatalog& catalog,
                                       bool strict = false) {
  return detail::YamlProgramReader(text, catalog, strict).run();
}

inline Result<CabinetModel> parse_program(std::string_view text, Syntax syntax,
                                          const PrimitiveCatalog& catalog,
                                          bool strict = false) {
  return syntax == Syntax::kPython ? parse_python(text, catalog, strict)
                                   : parse_yaml(text, catalog, strict);
}

// Two statements per primitive. Throws std::invalid_argument for a model with
// no instances.
inline std::string emit_python(const CabinetModel& model,
                               const PrimitiveCatalog& catalog) {
  detail::require_instances(model);
  using text::format_number;
  std::string out;
  for (std::size_t k = 0; k < model.instances.size(); ++k) {
    const auto& inst = model.instances[k];
    const auto& b = inst.box;
    const std::string box_var = "box_" + std::to_string(k);
    out += box_var + " = Box(position=(" + format_number(b.position.x) + ", " +
           format_number(b.position.y) + ", " + format_number(b.position.z) +
           "), size=(" + format_number(b.size.x) + ", " +
           format_number(b.size.y) + ", " + format_number(b.size.z) +
           "), rotation=" + format_number(b.rotation_deg) + ")\n";
    out += "model_" + std::to_string(k) + " = Model(id=" +
           text::quote(inst.model_id);
    if (!detail::name_is_default(inst, catalog)) {
      out += ", name=" + text::quote(inst.name);
    }
    out += ", box=" + box_var;
    for (const auto& [key, value] : inst.params) {
      out += ", " + key + "=" + detail::emit_value(value);
    }
    out += ")\n";
  }
  return out;
}

inline std::string emit_yaml(const CabinetModel& model,
                             const PrimitiveCatalog& catalog) {
  detail::require_instances(model);
  using text::format_number;
  std::string out = "cabinet:\n";
  auto seq3 = [&](std::string_view key, const Vec3& v) {
    out += "    ";
    out += key;
    out += ":\n";
    for (int i = 0; i < 3; ++i) out += "      - " + format_number(v[i]) + "\n";
  };
  for (const auto& inst : model.instances) {
    out += "  - id: " + yaml::plain_or_quoted(inst.model_id) + "\n";
    if (!detail::name_is_default(inst, catalog)) {
      out += "    name: " + yaml::plain_or_quoted(inst.name) + "\n";
    }
    seq3("position", inst.box.position);
    seq3("size", inst.box.size);
    out += "    rotation: " + format_number(inst.box.rotation_deg) + "\n";
    if (!inst.params.empty()) {
      out += "    params:\n";
      for (const auto& [key, value] : inst.params) {
        out += "      " + key + ": " + detail::emit_value(value) + "\n";
      }
    }
  }
  return out;
}

inline std::string emit_program(const CabinetModel& model, Syntax syntax,
                                const PrimitiveCatalog& catalog) {
  return syntax == Syntax::kPython ? emit_python(model, catalog)
                                   : emit_yaml(model, catalog);
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline bool on_decimal_grid(double v) {
  double scaled = v * 10.0;
  return std::abs(scaled - std::round(scaled)) <= 1e-6 * std::max(1.0, std::abs(scaled));
}

}  // namespace detail

// All invariant violations of the model and its instances; with `filters`
// also the dataset filters (instance count, overall extent). Empty == valid.
inline DiagnosticList validate(const CabinetModel& model,
                               const PrimitiveCatalog& catalog,
                               bool filters = false) {
  DiagnosticList out;
  if (model.instances.empty()) {
    out.push_back(make_error("empty-model", "cabinet has no instances"));
    return out;
  }
  bool boxes_ok = true;
  for (std::size_t i = 0; i < model.instances.size(); ++i) {
    const auto& inst = model.instances[i];
    const std::string where =
        "instance " + std::to_string(i) + " (" + inst.model_id + "): ";
    const auto& b = inst.box;
    if (!is_finite(b.position) || !is_finite(b.size) ||
        !std::isfinite(b.rotation_deg)) {
      out.push_back(make_error("box-finite", where + "non-finite box value"));
      boxes_ok = false;
      continue;
    }
    if (!(b.size.x > 0.0 && b.size.y > 0.0 && b.size.z > 0.0)) {
      out.push_back(make_error("box-size", where + "size components must be > 0"));
      boxes_ok = false;
    }
    if (!(b.rotation_deg >= 0.0 && b.rotation_deg < 360.0)) {
      out.push_back(
          make_error("box-rotation", where + "rotation must lie in [0, 360)"));
    }
    for (const auto& c : box_corners(b)) {
      if (c.x < -kOctantEpsilonMm || c.y < -kOctantEpsilonMm ||
          c.z < -kOctantEpsilonMm) {
        out.push_back(
            make_error("octant", where + "box extends outside the first octant"));
        break;
      }
    }
    bool grid = detail::on_decimal_grid(b.rotation_deg);
    for (int k = 0; k < 3; ++k) {
      grid = grid && detail::on_decimal_grid(b.position[k]) &&
             detail::on_decimal_grid(b.size[k]);
    }
    if (!grid) {
      out.push_back(make_warning(
          "precision", where + "values finer than 0.1 are rounded on emission"));
    }

    const PrimitiveSchema* schema = catalog.find(inst.model_id);
    if (schema == nullptr) {
      out.push_back(make_warning("unknown-model", where + "unknown model id"));
      continue;
    }
    for (auto& d : validate_params(*schema, inst.params)) {
      d.message = where + d.message;
      out.push_back(std::move(d));
    }
    // Counted length series must fit inside the box: sum of widths plus the
    // dividers between them, within the width between the two outer panels.
    const double t = catalog.divider_thickness_mm();
    for (const auto& counter : schema->params) {
      double sum = 0.0;
      int present = 0;
      for (const auto& p : schema->params) {
        if (p.counted_by != counter.key || p.kind != ParamKind::kLengthMm) continue;
        if (const auto* v = inst.params.find(p.key)) {
          if (auto* d = std::get_if<double>(v)) {
            sum += *d;
            ++present;
          } else if (auto* n = std::get_if<std::int64_t>(v)) {
            sum += static_cast<double>(*n);
            ++present;
          }
        }
      }
      if (present == 0) continue;
      const double budget = b.size.x - 2.0 * t;
      const double used = sum + (present - 1) * t;
      if (used > budget + 1e-6) {
        out.push_back(make_warning(
            "width-sum", where + "series " + counter.key + " needs " +
                             text::format_number(used) + " mm but the interior is " +
                             text::format_number(budget) + " mm"));
      }
    }
  }

  if (filters) {
    if (model.instances.size() > static_cast<std::size_t>(kMaxPrimitives)) {
      out.push_back(make_error(
          "filter-count", "cabinet has " + std::to_string(model.instances.size()) +
                              " primitives; the dataset filter allows at most " +
                              std::to_string(kMaxPrimitives)));
    }
    if (boxes_ok) {
      Vec3 e = model_aabb(model).extent();
      double extent = std::max({e.x, e.y, e.z});
      if (extent < kMinCabinetExtentMm || extent > kMaxCabinetExtentMm) {
        out.push_back(make_error(
            "filter-size", "cabinet extent " + text::format_number(extent) +
                               " mm outside [" +
                               text::format_number(kMinCabinetExtentMm) + ", " +
                               text::format_number(kMaxCabinetExtentMm) + "] mm"));
      }
    }
  }
  return out;
}

}  // namespace cabprog
